#ifndef HECONE_CONE_HPP
#define HECONE_CONE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hecone/curve.hpp"
#include "hecone/linalg.hpp"
#include "hecone/mpoly.hpp"

namespace hecone {

enum class ConeKind { CurveKG12, CurveGeneral, Points };

// One column of the 2 x (d-g-1) scroll matrix.
struct ScrollColumn {
    bool is_w = false;
    int idx = 0;
};

// Defining ideal of the cone in rolling factors format: the 2x2 minors of
// the scroll matrix plus the chain phi_0..phi_b.  Generators are kept in
// canonical order (minors in column-pair lex order, then the phis), and
// each phi_m carries its rolling decomposition
//     phi_m = sum_col top(col) * cofactor(col),
//     phi_{m+1} = sum_col bot(col) * cofactor(col).
struct RollingFactorsPresentation {
    ConeKind kind = ConeKind::CurveKG12;
    int g = 0;
    int d = 0;
    int k = -1;
    int e = -1; // scroll invariant for curve cones

    int num_z = 0, num_w = 0;
    RingPtr ring; // ambient coordinates z..., w...
    std::vector<ScrollColumn> cols;

    std::vector<std::pair<int, int>> minor_pairs;
    std::vector<MPoly> minors;
    std::vector<MPoly> phis;
    std::vector<std::vector<std::pair<int, MPoly>>> rolling; // m = 0..#phi-2

    // parametrization data
    std::vector<MPoly> param;      // per coordinate, in the curve ring
    bool param_homogeneous = true; // uses (xb, x) or just x
    HyperellipticCurve curve;      // curve cones
    std::optional<MumfordDivisor> mumford;
    UPoly points_form;                          // points cone: F, degree d
    std::optional<std::vector<Rat>> points_xs;  // rational roots when known

    int z_var(int i) const { return i; }
    int w_var(int i) const { return num_z + i; }
    int num_cols() const { return static_cast<int>(cols.size()); }
    MPoly top(int col) const;
    MPoly bot(int col) const;
    int top_var(int col) const;
    int bot_var(int col) const;

    int num_gens() const { return static_cast<int>(minors.size() + phis.size()); }
    const MPoly& generator(int i) const;
    std::string gen_name(int i) const;
    int minor_index(int p, int q) const; // generator index of the (p,q) minor, p<q
};

RollingFactorsPresentation cone_equations_kg12(const HyperellipticCurve& c, int k);
RollingFactorsPresentation cone_equations_general(const HyperellipticCurve& c,
                                                  const MumfordDivisor& M, int k);
RollingFactorsPresentation hyperplane_section_equations(int g, int d, const UPoly& F);
RollingFactorsPresentation points_cone_from_roots(int g, const std::vector<Rat>& roots);

// Substituting the parametrization into every generator (and reducing mod
// y^2 - F) must give 0; for points cones the phis map to multiples of F.
bool verify_parametrization(const RollingFactorsPresentation& pres);

// Rolling property: the stored decompositions reproduce phi_m from the
// tops and phi_{m+1} from the bottoms.
bool verify_rolling_property(const RollingFactorsPresentation& pres);

// Linear first syzygy: one linear form per generator, canonical order.
struct SyzygyVector {
    std::vector<MPoly> coeff;
};

// Sum coeff_i * gen_i == 0 in the ambient ring.
bool syzygy_check(const RollingFactorsPresentation& pres, const SyzygyVector& s);

// The hand families: rolled relations R_{col,m} for every column, plus the
// determinantal triples (top and bottom versions).
std::vector<SyzygyVector> hand_syzygies(const RollingFactorsPresentation& pres);

// Basis of the kernel of (linear forms)^#gens -> degree-3 forms.
std::vector<SyzygyVector> syzygy_basis(const RollingFactorsPresentation& pres,
                                       int total_degree = 3);

// Is the given syzygy in the span of the basis?  (Rank test.)
bool syzygy_in_span(const RollingFactorsPresentation& pres,
                    const std::vector<SyzygyVector>& basis, const SyzygyVector& s);

// Flattens a linear syzygy to coefficients over (generator, variable) pairs,
// index = gen * arity + var.
std::vector<Rat> syzygy_to_flat(const RollingFactorsPresentation& pres,
                                const SyzygyVector& s);

// Deterministic (lex-ascending) list of degree-q exponent vectors.
std::vector<Expo> monomials_of_degree(const RingPtr& ring, int q);

// Multiplication map (cofactor-degree-q forms)^#gens -> degree-(q+2) forms,
// as a sparse matrix; columns are (gen, monomial) pairs, rows are indexed by
// the touched degree-(q+2) monomials.
SparseMatQ multiplication_matrix(const RollingFactorsPresentation& pres, int cofactor_degree);

struct RelationIdentityReport {
    bool ok = true;
    long checked = 0;
    std::vector<std::array<int, 3>> failures; // (col gamma, col delta, m)
};

// Exact vector identities behind the statement that z_k R_{j,m} - z_j R_{k,m}
// is a combination of trivial and determinantal relations.
RelationIdentityReport verify_relation_identities(const RollingFactorsPresentation& pres);

} // namespace hecone

#endif

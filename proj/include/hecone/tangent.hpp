#ifndef HECONE_TANGENT_HPP
#define HECONE_TANGENT_HPP

#include <map>
#include <string>
#include <vector>

#include "hecone/cone.hpp"

namespace hecone {

struct DimTable {
    std::map<int, long> dims; // nu -> dimension
    long at(int nu) const {
        auto it = dims.find(nu);
        return it == dims.end() ? 0 : it->second;
    }
    long total() const {
        long t = 0;
        for (const auto& [nu, d] : dims) t += d;
        return t;
    }
};

// Graded piece (O_X)_m of the cone's coordinate ring; dim plus a short
// description of the realization used.
struct RingPiece {
    int m = 0;
    long dim = 0;
    std::string model; // "monomials" or "point evaluations"
};

RingPiece ring_piece(const RollingFactorsPresentation& pres, int m);

// Graded T^1 directly from the presentation: assignments generator ->
// (O_X)_{2+nu} annihilating every linear first syzygy, modulo the trivial
// normal vectors coming from ambient coordinate derivations.
long t1_oracle(const RollingFactorsPresentation& pres, int nu);

enum class ConeShape { Curve, Points };

// Closed-form graded T^1 dimensions over nu in [-3, 1].
DimTable t1_formula(int g, int d, ConeShape shape);

// Closed-form graded T^2 dimensions over nu in [-3, 1]; needs d > 2g+3.
DimTable t2_formula(int g, int d);
long t2_dim(int g, int d, int nu);

// Total T^2 via the hyperplane-section route: t1Y_total - (3g + d - 2).
long t2_via_main_lemma(int g, int d, long t1Y_total);

struct SmoothingDim {
    long dim = 0;                       // 7g + 4 - d
    bool correction_may_apply = false;  // h^0(K^2 L^-1) can contribute when d <= 4g-4
    bool covers_all_components = false; // every component has this dimension
};

SmoothingDim smoothing_component_dim(int g, int d);

// Degree-4 linear syzygies are coordinate multiples of degree-3 ones.
bool syzygies_generate_in_degree4(const RollingFactorsPresentation& pres,
                                  const std::vector<SyzygyVector>& syz3);

// The syzygy set the oracle constrains against: the hand families when they
// provably span the degree-3 kernel, otherwise the computed kernel basis.
std::vector<SyzygyVector> oracle_syzygies(const RollingFactorsPresentation& pres);

// Test support: points-cone oracle with extra syzygy constraints appended
// (coefficients of any degree; they are evaluated pointwise).
long t1_oracle_points_extra(const RollingFactorsPresentation& pres, int nu,
                            const std::vector<SyzygyVector>& extra);

} // namespace hecone

#endif

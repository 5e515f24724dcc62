#ifndef HECONE_TOPOLOGY_HPP
#define HECONE_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "hecone/components.hpp"
#include "hecone/rat.hpp"
#include "hecone/snf.hpp"

namespace hecone {

// Finitely generated abelian group: Z^free_rank + sum Z/d_i, d_1 | d_2 | ...
struct FinAbGroup {
    long free_rank = 0;
    std::vector<Int> invariant_factors; // each >= 2, divisibility chain

    bool operator==(const FinAbGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    std::string to_string() const;
};

// Cokernel of an integer presentation matrix (relations act on the
// generators from the left: one row per relation).
FinAbGroup cokernel_group(const ZMatrix& relations, std::size_t num_generators);

// H_1 of the circle bundle over a genus-g surface with the given Euler
// number, from the standard presentation via Smith normal form.
FinAbGroup circle_bundle_h1(int g, long euler_number);

// Link of the cone: Euler number -(4g+4).
FinAbGroup link_homology(int g);

struct MilnorFiberReport {
    int g = 0, e = 0;
    bool even_case = false; // g+1+e even
    long h2_rank = 0;       // 2g+1
    FinAbGroup h1;          // Z/2 in the even case, else 0
    FinAbGroup h2_rel;      // H^2(F, dF)
    long min_self_intersection = 0; // generator of ker(H_2(S) -> H^2(C))
};

MilnorFiberReport milnor_fiber_homology(int g, int e);

// q(m) = m(m - 6g - 2) / (8g + 8) mod 1, representative in [0, 1).
Rat q_value(int g, long m);

struct IsotropicSubgroup {
    long order = 0;
    long generator = 0; // (4g+4)/order
};

// Subgroups of Z/(4g+4) on which q vanishes, by brute force; must agree
// with the arithmetic criterion (cross-checked separately).
std::vector<IsotropicSubgroup> isotropic_subgroups(int g);

// Arithmetic criterion: order r admissible iff 4g+4 = r^2 s, 2g-2 = r u
// with s(1+r) = u mod 2.
bool isotropic_criterion(int g, long r);

// Order of the group of multiplications preserving q (I = 0) or the
// induced q_I on I-perp / I (|I| = r > 1).
long orthogonal_group_order(int g, long I_order);

// 1 + 2^(2g) for even g; the proposition assumes g even.
long smoothing_data_count(int g);

// Component i = |T intersect D_i| mod 2 for the chain of discs
// D_i = {P_i, P_(i+1)}; discs are passed as index pairs (0-based).
std::vector<int> j_invariant(const WSubset& T,
                             const std::vector<std::pair<int, int>>& discs);

} // namespace hecone

#endif

#ifndef HECONE_COMPONENTS_HPP
#define HECONE_COMPONENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecone/curve.hpp"

namespace hecone {

// Subset of the 2g+2 Weierstrass points, identified with its complement.
struct WSubset {
    std::uint32_t mask = 0;
    int n = 0; // number of branch points, 2g+2

    static WSubset of(std::uint32_t mask, int n) { return {mask, n}; }
    std::uint32_t complement() const { return ~mask & ((1u << n) - 1); }
    std::uint32_t canonical() const { return std::min(mask, complement()); }
    int size() const { return __builtin_popcount(mask); }
    bool even() const { return size() % 2 == 0; }
};

// Hyperplane in T^1(-1) attached to elm_T(S): coefficient of s_i is
// (-1)^{chi_T(P_i)} times the signed Vandermonde cofactor of the s_i entry.
// Normalized to a primitive integer vector with positive first coordinate.
std::vector<Int> vandermonde_hyperplane(const std::vector<Rat>& branch_xs, const WSubset& T);

struct ComponentDescriptor {
    std::uint32_t subset = 0;    // a representative
    std::uint32_t canonical = 0; // class representative
    std::vector<Int> hyperplane;
    bool even = false;
};

// One descriptor per canonical class; exactly 2^(2g+1) distinct hyperplanes.
std::vector<ComponentDescriptor> enumerate_components(const std::vector<Rat>& branch_xs);

struct ComponentCount {
    long count = 0;
    std::string annotation; // "+1 Veronese component" in the g=3, L=4K case
};

ComponentCount count_components(int g, bool L_is_4K_at_g3 = false);

// Parity of the scroll invariant after the elementary transformations in T.
int elm_parity(int e, const WSubset& T);

// Scroll type of P(pi_*(L tensor eta)) where eta = O(k' g12 - sum_{i in T} P_i),
// |T| = 2k'; L = k g12.  Computed from the h^0 ladder of the twisted bundle.
std::pair<int, int> scroll_of_twist(const HyperellipticCurve& c, const LineBundleSpec& L,
                                    const WSubset& T, int k_prime);

} // namespace hecone

#endif

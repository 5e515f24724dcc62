#ifndef HECONE_VERSAL_HPP
#define HECONE_VERSAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hecone/curve.hpp"
#include "hecone/mpoly.hpp"

namespace hecone {

// First-order deformation of the cone X(C, k g12) in negative degree:
// parameters s_1..s_{k-1}, t_0..t_{2g+2-k}, the perturbed matrix (only the
// z-entries of the first row move), and the perturbations phi'_m.
struct FirstOrderFamily {
    int g = 0, k = 0;
    HyperellipticCurve curve;

    RingPtr ring; // z0..zk, then s1..s_{k-1}, then t0..t_{2g+2-k}
    int num_z = 0, num_s = 0, num_t = 0;

    int z_var(int i) const { return i; }
    int s_var(int i) const { return num_z + (i - 1); } // i in 1..k-1
    int t_var(int i) const { return num_z + num_s + i; }

    std::vector<MPoly> phi_prime; // m = 0..2k-2g-2, bilinear in (params, z)
    // linear relations among the parameters (rows over the s,t block,
    // index = var - num_z); empty when k <= 2g+3
    std::vector<std::vector<Rat>> param_relations;

    // Chain positions m where the displayed formula produces a z-index
    // beyond k whose coefficient is not a relation combination.  Always
    // empty for k <= 2g+2; the displayed gauge (top-row z-perturbations
    // with s_0 = 0) cannot represent those phi'_m for larger k.
    std::vector<int> gauge_overflow;
};

FirstOrderFamily first_order_family(const HyperellipticCurve& c, int k);

struct FirstOrderCheck {
    bool ok = true;
    std::vector<int> failed_m;
};

// The rolling functional equation
//   x phi'_m - phi'_{m+1} + x sum_i a_i s_floor((m+i)/2) x^ceil((m+i)/2) = 0
// for m = 0..2k-2g-3, as an identity in Q[x, params] modulo the parameter
// relations; also checks no coordinate index exceeds k.
FirstOrderCheck verify_first_order(const FirstOrderFamily& fam);

// Adds delta * param * z_zidx to phi'_m (mutation testing support).
// param_idx indexes the s,t block: 0..num_s-1 are s_1..s_{k-1}, then t's.
FirstOrderFamily mutate_family(const FirstOrderFamily& fam, int m, int param_idx, int zidx,
                               const Rat& delta);

// Negative-degree versal base: quadrics in the deformation parameters.
struct BaseSpaceSystem {
    int g = 0, k = 0;
    RingPtr ring; // t-block first, then s-block
    int num_t = 0, num_s = 0;
    std::vector<MPoly> equations;
    std::vector<std::vector<Rat>> param_relations; // over ring vars
    int num_params() const { return num_t + num_s; }
};

// phi'_m(t, s, s) - phi_m(s) = 0 for m = 1..b-1 (w-monomials of phi_m drop).
BaseSpaceSystem base_space_equations(const FirstOrderFamily& fam);

// Closed form for the curve y^2 = 1 - x^(2g+2) embedded with (2g+2) g12:
//   t s_m + sum_{j=1}^{2g+1-m} s_{2g+2-ceil(j/2)} s_{m+ceil(j/2)}
//         + sum_{j=2}^{m} s_{floor(j/2)} s_{m-floor(j/2)},  m = 1..2g+1.
BaseSpaceSystem special_curve_base(int g);

HyperellipticCurve special_curve(int g); // y^2 = 1 - x^(2g+2)

bool check_solution(const BaseSpaceSystem& sys, const std::vector<Rat>& point);

// Hilbert function of (params ring)/(equations) in degrees 0..up_to_degree.
std::vector<long> hilbert_function_check(const BaseSpaceSystem& sys, int up_to_degree = 6);

// Coefficients 0..up_to of (1+T)^e / (1-T).
std::vector<long> ci_hilbert_series(int num_quadrics, int up_to);

struct FFCountResult {
    long num_points = 0;
    long num_smooth = 0;
    bool degenerate = false; // count above the Bezout bound or singular points
};

// Projective F_p-points of the system by exhaustive enumeration; also
// reports how many are smooth (Jacobian rank = #equations there).
FFCountResult count_projective_solutions_ff(const BaseSpaceSystem& sys, std::uint64_t p);

struct PrimeScanResult {
    std::uint64_t prime = 0;
    long num_points = 0;
    long num_smooth = 0;
};

// First prime <= bound where the count equals `expected`, all smooth.
std::optional<PrimeScanResult> scan_primes_for_point_count(const BaseSpaceSystem& sys,
                                                           std::uint64_t bound, long expected);

} // namespace hecone

#endif

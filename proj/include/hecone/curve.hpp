#ifndef HECONE_CURVE_HPP
#define HECONE_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hecone/mpoly.hpp"
#include "hecone/rat.hpp"

namespace hecone {

// ---- dense univariate helpers (coefficient vectors, index = power) ----
using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
int upoly_deg(const UPoly& p); // -1 for zero
Rat upoly_eval(const UPoly& p, const Rat& x);
UPoly upoly_derivative(const UPoly& p);
// quotient and remainder; divisor must be nonzero
std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b); // monic gcd, or zero
UPoly upoly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);
bool upoly_squarefree(const UPoly& p);

// y^2 = F(x) with F of degree 2g+2.  Coefficient list a[0..2g+2]; the
// homogeneous form is F(xb, x) = sum a_i xb^(2g+2-i) x^i.
struct HyperellipticCurve {
    int g = 0;
    std::vector<Rat> a;
    std::optional<std::vector<Rat>> branch_xs;

    int form_degree() const { return 2 * g + 2; }
    Rat F_at(const Rat& x) const;
    UPoly F() const { return a; }
    // F as a polynomial in the shared curve ring, homogeneous or not.
    MPoly F_hom() const;
    MPoly F_inhom() const;
};

// Shared 3-variable ring for curve-side polynomial work: (xb, x, y).
const RingPtr& curve_ring();
extern const int CR_XB, CR_X, CR_Y;

HyperellipticCurve curve_from_roots(int g, const std::vector<Rat>& roots);
HyperellipticCurve curve_from_coeffs(int g, const std::vector<Rat>& coeffs);

// Mumford triple: F = V^2 + U*W, U monic of degree g+1-e, deg V <= g-e,
// deg W = g+1+e.
struct MumfordDivisor {
    UPoly U, V, W;
    int e = 0;

    int degree() const; // number of divisor points = g+1-e
    std::vector<Rat> point_xs;  // x-coordinates of the divisor points
};

MumfordDivisor mumford_empty(const HyperellipticCurve& c);
MumfordDivisor mumford_from_points(const HyperellipticCurve& c,
                                   const std::vector<std::pair<Rat, Rat>>& pts);

// L = k g12 (+ optional Mumford divisor).
struct LineBundleSpec {
    int k = 0;
    std::optional<MumfordDivisor> divisor;

    int degree(const HyperellipticCurve& c) const {
        return divisor ? 2 * k + (c.g + 1 - divisor->e) : 2 * k;
    }
};

struct GradedPiece {
    int nu = 0;
    int dim = 0;
    std::vector<MPoly> basis; // reduced representatives in the curve ring
};

// Basis of H^0(C, L^nu); nonspecial range only (nu*d > 2g-2).
GradedPiece section_basis(const HyperellipticCurve& c, const LineBundleSpec& L, int nu);

// Dimension of the subspace of H^0(L) vanishing on n fibres of the ruling.
int h0_twist(const HyperellipticCurve& c, const LineBundleSpec& L, int n);

// Scroll type (a, b), a >= b, a + b = d - g - 1.
std::pair<int, int> scroll_type(const HyperellipticCurve& c, const LineBundleSpec& L);

// JSON config ingestion:
//   { "g": int, "roots": [rat] | "coeffs": [rat], "k": int,
//     "divisor_points": [[rat, rat]] }
struct CurveConfig {
    HyperellipticCurve curve;
    int k = 0;
    std::vector<std::pair<Rat, Rat>> divisor_points;
};

CurveConfig parse_curve_config(const std::string& json_text);

} // namespace hecone

#endif

#include "hecone/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "hecone/errors.hpp"
#include "hecone/linalg.hpp"

namespace hecone {

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return upoly_trim(std::move(r));
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return upoly_trim(std::move(r));
}

int upoly_deg(const UPoly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat r = 0;
    for (std::size_t i = p.size(); i > 0; --i) r = r * x + p[i - 1];
    return r;
}

UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    return upoly_trim(std::move(r));
}

std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b) {
    UPoly rem = upoly_trim(a), d = upoly_trim(b);
    if (d.empty()) throw InternalError("division by zero polynomial");
    int db = upoly_deg(d);
    UPoly quo;
    while (upoly_deg(rem) >= db) {
        int dr = upoly_deg(rem);
        Rat c = rem[dr] / d[db];
        if (static_cast<int>(quo.size()) < dr - db + 1) quo.resize(dr - db + 1, Rat(0));
        quo[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * d[i];
        rem = upoly_trim(std::move(rem));
    }
    return {upoly_trim(std::move(quo)), rem};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        auto [q, r] = upoly_divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a[upoly_deg(a)];
        for (auto& c : a) c /= lead;
    }
    return a;
}

UPoly upoly_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly li = {Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li = upoly_mul(li, {-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        Rat c = ys[i] / denom;
        for (auto& v : li) v *= c;
        acc = upoly_add(acc, li);
    }
    return acc;
}

bool upoly_squarefree(const UPoly& p) {
    UPoly g = upoly_gcd(p, upoly_derivative(p));
    return upoly_deg(g) <= 0;
}

namespace {
const RingPtr& curve_ring_impl() {
    static RingPtr r = make_ring({"xb", "x", "y"});
    return r;
}
} // namespace

const RingPtr& curve_ring() { return curve_ring_impl(); }
const int CR_XB = 0, CR_X = 1, CR_Y = 2;

Rat HyperellipticCurve::F_at(const Rat& x) const { return upoly_eval(a, x); }

MPoly HyperellipticCurve::F_hom() const {
    MPoly f(curve_ring());
    int n = form_degree();
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        Expo e(3, 0);
        e[CR_XB] = n - i;
        e[CR_X] = i;
        f.add_term(e, a[i]);
    }
    return f;
}

MPoly HyperellipticCurve::F_inhom() const {
    MPoly f(curve_ring());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Expo e(3, 0);
        e[CR_X] = static_cast<int>(i);
        f.add_term(e, a[i]);
    }
    return f;
}

HyperellipticCurve curve_from_roots(int g, const std::vector<Rat>& roots) {
    if (g < 1) throw InvalidCurve("genus must be at least 1");
    if (static_cast<int>(roots.size()) != 2 * g + 2)
        throw InvalidCurve("expected 2g+2 roots");
    std::set<Rat> seen(roots.begin(), roots.end());
    if (seen.size() != roots.size()) throw InvalidCurve("duplicate roots");
    UPoly f = {Rat(1)};
    for (const auto& r : roots) f = upoly_mul(f, {-r, Rat(1)});
    HyperellipticCurve c;
    c.g = g;
    c.a.assign(2 * g + 3, Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i) c.a[i] = f[i];
    c.branch_xs = roots;
    return c;
}

HyperellipticCurve curve_from_coeffs(int g, const std::vector<Rat>& coeffs) {
    if (g < 1) throw InvalidCurve("genus must be at least 1");
    if (static_cast<int>(coeffs.size()) != 2 * g + 3)
        throw InvalidCurve("expected 2g+3 coefficients a_0..a_{2g+2}");
    HyperellipticCurve c;
    c.g = g;
    c.a = coeffs;
    // squarefree as a binary form: check both affine charts
    UPoly f1 = upoly_trim(c.a);
    if (f1.empty()) throw InvalidCurve("F is zero");
    UPoly f2(c.a.rbegin(), c.a.rend());
    f2 = upoly_trim(std::move(f2));
    if (!upoly_squarefree(f1) || !upoly_squarefree(f2))
        throw InvalidCurve("F is not squarefree");
    return c;
}

int MumfordDivisor::degree() const { return static_cast<int>(point_xs.size()); }

MumfordDivisor mumford_empty(const HyperellipticCurve& c) {
    MumfordDivisor m;
    m.U = {Rat(1)};
    m.V = {};
    m.W = c.a;
    m.e = c.g + 1;
    return m;
}

MumfordDivisor mumford_from_points(const HyperellipticCurve& c,
                                   const std::vector<std::pair<Rat, Rat>>& pts) {
    std::set<Rat> xs;
    std::vector<Rat> xv, yv;
    for (const auto& [x, y] : pts) {
        if (!xs.insert(x).second)
            throw NotImplemented("repeated divisor x-coordinates are not supported");
        if (y * y != c.F_at(x)) throw InvalidPoint("point does not lie on the curve");
        xv.push_back(x);
        yv.push_back(y);
    }
    int e = c.g + 1 - static_cast<int>(pts.size());
    if (e < 0) throw InvalidDivisor("too many divisor points (degree exceeds g+1)");
    MumfordDivisor m;
    m.e = e;
    m.point_xs = xv;
    m.U = {Rat(1)};
    for (const auto& x : xv) m.U = upoly_mul(m.U, {-x, Rat(1)});
    m.V = pts.empty() ? UPoly{} : upoly_interpolate(xv, yv);
    if (upoly_deg(m.V) > c.g - e) throw InternalError("interpolant degree exceeds g-e");
    UPoly num = upoly_sub(c.a, upoly_mul(m.V, m.V));
    auto [q, r] = upoly_divrem(num, m.U);
    if (!r.empty()) throw InternalError("F - V^2 is not divisible by U");
    m.W = q;
    if (upoly_deg(m.W) != c.g + 1 + e) throw InternalError("deg W != g+1+e");
    return m;
}

namespace {

// Column index table for reduced curve-function representatives
// p(x) + y q(x); used to RREF spans of sections.
struct ReprIndexer {
    int max_px, max_qx;
    int cols() const { return (max_px + 1) + (max_qx + 1); }
    int index(int ydeg, int xdeg) const {
        return ydeg == 0 ? xdeg : (max_px + 1) + xdeg;
    }
};

std::vector<Rat> repr_vector(const MPoly& p, const ReprIndexer& ix) {
    std::vector<Rat> v(ix.cols(), Rat(0));
    for (const auto& [e, c] : p.terms()) {
        if (e[CR_XB] != 0) throw InternalError("repr_vector expects inhomogeneous input");
        if (e[CR_Y] > 1) throw InternalError("repr_vector expects y-reduced input");
        v[ix.index(e[CR_Y], e[CR_X])] += c;
    }
    return v;
}

} // namespace

GradedPiece section_basis(const HyperellipticCurve& c, const LineBundleSpec& L, int nu) {
    const int g = c.g;
    const int d = L.degree(c);
    if (nu < 1) throw Unsupported("section_basis needs nu >= 1");
    if (nu * d <= 2 * g - 2) throw Unsupported("special range: nu*d <= 2g-2");
    const RingPtr& R = curve_ring();
    GradedPiece piece;
    piece.nu = nu;

    if (!L.divisor) {
        // monomial basis for (nu*k) g12
        int K = nu * L.k;
        for (int i = 0; i <= K; ++i) {
            Expo e(3, 0);
            e[CR_XB] = K - i;
            e[CR_X] = i;
            piece.basis.push_back(MPoly::monomial(R, e, Rat(1)));
        }
        for (int i = 0; i <= K - g - 1; ++i) {
            Expo e(3, 0);
            e[CR_Y] = 1;
            e[CR_XB] = K - g - 1 - i;
            e[CR_X] = i;
            piece.basis.push_back(MPoly::monomial(R, e, Rat(1)));
        }
        piece.dim = static_cast<int>(piece.basis.size());
        if (piece.dim != nu * d - g + 1)
            throw InternalError("section count disagrees with Riemann-Roch");
        return piece;
    }

    // general L = k g12 + D: products of the degree-1 basis z_i = U x^i,
    // w_i = (y+V) x^i, reduced mod y^2 - F and row-reduced.
    const MumfordDivisor& M = *L.divisor;
    const int e = M.e;
    const int k = L.k;
    MPoly Fx = c.F_inhom();
    MPoly Ux(R), Vx(R);
    for (std::size_t i = 0; i < M.U.size(); ++i) {
        Expo ee(3, 0);
        ee[CR_X] = static_cast<int>(i);
        Ux.add_term(ee, M.U[i]);
    }
    for (std::size_t i = 0; i < M.V.size(); ++i) {
        Expo ee(3, 0);
        ee[CR_X] = static_cast<int>(i);
        Vx.add_term(ee, M.V[i]);
    }
    MPoly y = MPoly::variable(R, CR_Y);
    MPoly x = MPoly::variable(R, CR_X);
    std::vector<MPoly> deg1;
    for (int i = 0; i <= k; ++i) deg1.push_back(Ux * x.pow(i));
    for (int i = 0; i <= k - e; ++i) deg1.push_back((y + Vx) * x.pow(i));

    // nu-fold products (combinations with repetition), reduced
    std::vector<std::vector<int>> combos;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            combos.push_back(cur);
            return;
        }
        for (int i = start; i < static_cast<int>(deg1.size()); ++i) {
            cur.push_back(i);
            rec(i, left - 1);
            cur.pop_back();
        }
    };
    rec(0, nu);

    std::vector<MPoly> prods;
    int max_px = 0, max_qx = 0;
    for (const auto& combo : combos) {
        MPoly p(R, Rat(1));
        for (int i : combo) p = p * deg1[i];
        p = reduce_y2(p, CR_Y, Fx);
        for (const auto& [ee, cc] : p.terms()) {
            if (ee[CR_Y] == 0)
                max_px = std::max(max_px, ee[CR_X]);
            else
                max_qx = std::max(max_qx, ee[CR_X]);
        }
        prods.push_back(std::move(p));
    }
    ReprIndexer ix{max_px, max_qx};
    // incremental elimination: keep the products that extend the span
    std::size_t want = static_cast<std::size_t>(nu * d - g + 1);
    std::map<int, std::vector<Rat>> echelon; // lead column -> reduced row
    std::vector<MPoly> chosen;
    for (const auto& prod : prods) {
        std::vector<Rat> v = repr_vector(prod, ix);
        int lead = -1;
        for (int j = 0; j < ix.cols(); ++j) {
            if (v[j] == 0) continue;
            auto it = echelon.find(j);
            if (it == echelon.end()) {
                lead = j;
                break;
            }
            Rat f = v[j];
            for (int l = j; l < ix.cols(); ++l) v[l] -= f * it->second[l];
        }
        if (lead >= 0) {
            Rat inv = Rat(1) / v[lead];
            for (auto& x : v) x *= inv;
            echelon.emplace(lead, std::move(v));
            chosen.push_back(prod);
            if (chosen.size() == want) break;
        }
    }
    if (chosen.size() != want)
        throw InternalError("section span smaller than Riemann-Roch predicts");
    piece.basis = std::move(chosen);
    piece.dim = static_cast<int>(want);
    return piece;
}

int h0_twist(const HyperellipticCurve& c, const LineBundleSpec& L, int n) {
    if (n < 0) throw InvalidInput("twist count must be >= 0");
    GradedPiece b = section_basis(c, L, 1);
    // sections as p(x) + y q(x); for kg12 dehomogenize xb -> 1
    std::vector<MPoly> secs;
    const RingPtr& R = curve_ring();
    MPoly one(R, Rat(1));
    for (const auto& s : b.basis) {
        std::vector<MPoly> imgs = {one, MPoly::variable(R, CR_X), MPoly::variable(R, CR_Y)};
        secs.push_back(s.substitute(R, imgs));
    }
    // fibre values: distinct integers avoiding divisor x-coordinates
    std::set<Rat> avoid;
    if (L.divisor)
        for (const auto& x : L.divisor->point_xs) avoid.insert(x);
    std::vector<Rat> cs;
    long v = 1;
    while (static_cast<int>(cs.size()) < n) {
        Rat cand(v++);
        if (!avoid.count(cand)) cs.push_back(cand);
    }
    QMatrix cond(2 * n, secs.size());
    for (std::size_t j = 0; j < secs.size(); ++j) {
        MPoly p = secs[j].coefficient_of(CR_Y, 0);
        MPoly q = secs[j].coefficient_of(CR_Y, 1);
        for (int i = 0; i < n; ++i) {
            cond.at(2 * i, j) = p.eval({Rat(1), cs[i], Rat(0)});
            cond.at(2 * i + 1, j) = q.eval({Rat(1), cs[i], Rat(0)});
        }
    }
    return static_cast<int>(secs.size() - cond.rank());
}

std::pair<int, int> scroll_type(const HyperellipticCurve& c, const LineBundleSpec& L) {
    const int g = c.g;
    const int d = L.degree(c);
    if (d < 2 * g + 3) throw Unsupported("scroll_type needs d >= 2g+3");
    int a = -1;
    for (int n = 0; n <= d; ++n) {
        if (h0_twist(c, L, n) > 0)
            a = n;
        else
            break;
    }
    int b = d - g - 1 - a;
    if (a < b) throw InternalError("scroll type ordering violated");
    if (!L.divisor && (a != L.k || b != L.k - g - 1))
        throw InternalError("kg12 scroll type disagrees with (k, k-g-1)");
    return {a, b};
}

namespace {

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw InvalidInput("rational values must be integers or 'p/q' strings");
}

} // namespace

CurveConfig parse_curve_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("g")) throw InvalidInput("config needs 'g'");
    int g = j["g"].get<int>();
    bool has_roots = j.contains("roots"), has_coeffs = j.contains("coeffs");
    if (has_roots == has_coeffs)
        throw InvalidInput("config needs exactly one of 'roots' or 'coeffs'");
    CurveConfig cfg;
    if (has_roots) {
        std::vector<Rat> roots;
        for (const auto& r : j["roots"]) roots.push_back(rat_from_json(r));
        cfg.curve = curve_from_roots(g, roots);
    } else {
        std::vector<Rat> coeffs;
        for (const auto& r : j["coeffs"]) coeffs.push_back(rat_from_json(r));
        cfg.curve = curve_from_coeffs(g, coeffs);
    }
    cfg.k = j.value("k", 0);
    if (j.contains("divisor_points"))
        for (const auto& p : j["divisor_points"]) {
            if (!p.is_array() || p.size() != 2)
                throw InvalidInput("divisor points must be [x, y] pairs");
            cfg.divisor_points.emplace_back(rat_from_json(p[0]), rat_from_json(p[1]));
        }
    return cfg;
}

} // namespace hecone

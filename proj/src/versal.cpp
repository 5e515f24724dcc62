#include "hecone/versal.hpp"

#include <algorithm>
#include <map>

#include "hecone/cone.hpp"
#include "hecone/errors.hpp"
#include "hecone/fp.hpp"
#include "hecone/linalg.hpp"

namespace hecone {

namespace {

inline int floor2(int m) { return m / 2; } // nonnegative arguments only
inline int ceil2(int m) { return (m + 1) / 2; }

} // namespace

HyperellipticCurve special_curve(int g) {
    std::vector<Rat> a(2 * g + 3, Rat(0));
    a[0] = 1;
    a[2 * g + 2] = -1;
    return curve_from_coeffs(g, a);
}

FirstOrderFamily first_order_family(const HyperellipticCurve& c, int k) {
    const int g = c.g;
    if (k <= g + 1) throw Unsupported("first_order_family needs k > g+1");
    FirstOrderFamily fam;
    fam.g = g;
    fam.k = k;
    fam.curve = c;
    fam.num_z = k + 1;
    fam.num_s = k - 1;
    fam.num_t = std::max(0, 2 * g + 3 - k);
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back("z" + std::to_string(i));
    for (int i = 1; i <= k - 1; ++i) names.push_back("s" + std::to_string(i));
    for (int i = 0; i < fam.num_t; ++i) names.push_back("t" + std::to_string(i));
    fam.ring = make_ring(std::move(names));

    auto a_of = [&](int i) { return (i < 0 || i > 2 * g + 2) ? Rat(0) : c.a[i]; };
    auto s_of = [&](int i) -> MPoly {
        if (i < 1 || i > k - 1) return MPoly(fam.ring); // s_0 = 0, s_j = 0 for j >= k
        return MPoly::variable(fam.ring, fam.s_var(i));
    };

    for (int j = 1; j <= k - 2 * g - 3; ++j) {
        std::vector<Rat> rel(fam.num_s + fam.num_t, Rat(0));
        for (int i = 0; i <= 2 * g + 2; ++i) {
            int idx = i + j;
            if (idx >= 1 && idx <= k - 1) rel[idx - 1] += a_of(i);
        }
        fam.param_relations.push_back(std::move(rel));
    }

    const int b = 2 * k - 2 * g - 2;
    const int nparams = fam.num_s + fam.num_t;
    for (int m = 0; m <= b; ++m) {
        MPoly phi(fam.ring);
        // coefficients of z-indices beyond k, as covectors over the parameters
        std::map<int, std::vector<Rat>> overflow;
        auto add_term = [&](const MPoly& param, int zidx, const Rat& coef) {
            if (param.is_zero() || coef == 0) return;
            if (zidx < 0) throw InternalError("negative z index in phi'_m");
            if (zidx <= k) {
                phi += param * MPoly::variable(fam.ring, fam.z_var(zidx)) * coef;
            } else {
                auto& vec = overflow[zidx];
                vec.resize(nparams, Rat(0));
                for (const auto& [e, cc] : param.terms())
                    for (int v = 0; v < nparams; ++v)
                        if (e[fam.num_z + v] == 1) vec[v] += cc * coef;
            }
        };
        for (int i = 0; i <= 2 * g + 2 - k; ++i)
            add_term(MPoly::variable(fam.ring, fam.t_var(i)), m + i, Rat(1));
        for (int j = 0; j <= 2 * g + 2; ++j)
            for (int i = m + j; i <= 2 * g + 2; ++i)
                add_term(s_of(i - ceil2(j)), m + ceil2(j), -a_of(i));
        for (int j = 1; j <= m - 1; ++j)
            for (int i = 0; i <= m - j - 1; ++i)
                add_term(s_of(i + floor2(j)), m - floor2(j), a_of(i));

        // out-of-range coefficients that are relation combinations vanish on
        // the parameter space and are dropped; anything else means the
        // displayed gauge cannot represent this phi'_m (possible for k > 2g+2)
        bool bad = false;
        for (const auto& [zidx, vec] : overflow) {
            QMatrix aug(fam.param_relations.size() + 1, nparams);
            for (std::size_t r = 0; r < fam.param_relations.size(); ++r)
                for (int v = 0; v < nparams; ++v) aug.at(r, v) = fam.param_relations[r][v];
            for (int v = 0; v < nparams; ++v) aug.at(fam.param_relations.size(), v) = vec[v];
            QMatrix base(fam.param_relations.size(), nparams);
            for (std::size_t r = 0; r < fam.param_relations.size(); ++r)
                for (int v = 0; v < nparams; ++v) base.at(r, v) = fam.param_relations[r][v];
            if (aug.rank() != base.rank()) bad = true;
        }
        if (bad) fam.gauge_overflow.push_back(m);
        fam.phi_prime.push_back(std::move(phi));
    }
    if (k <= 2 * g + 2 && !fam.gauge_overflow.empty())
        throw InternalError("unexpected index overflow for k <= 2g+2");
    return fam;
}

namespace {

// covector of a parameter-linear polynomial over the (s, t) block
bool reduce_by_relations(const FirstOrderFamily& fam, const MPoly& expr) {
    // expr lives in Q[x, params]; extract, per x-power, the covector over the
    // parameters and test membership in the relation span
    if (fam.param_relations.empty()) return expr.is_zero();
    const int nparams = fam.num_s + fam.num_t;
    QMatrix rel(fam.param_relations.size(), nparams);
    for (std::size_t r = 0; r < fam.param_relations.size(); ++r)
        for (int c = 0; c < nparams; ++c) rel.at(r, c) = fam.param_relations[r][c];
    std::size_t base_rank = rel.rank();

    std::map<int, std::vector<Rat>> by_xpow; // x power -> covector
    for (const auto& [e, c] : expr.terms()) {
        int xp = e[0];
        int pvar = -1;
        for (std::size_t v = 1; v < e.size(); ++v) {
            if (e[v] == 1 && pvar == -1)
                pvar = static_cast<int>(v) - 1;
            else if (e[v] != 0)
                return false; // not linear in the parameters
        }
        if (pvar < 0) return false;
        auto& vec = by_xpow[xp];
        vec.resize(nparams, Rat(0));
        vec[pvar] += c;
    }
    for (const auto& [xp, vec] : by_xpow) {
        QMatrix aug(fam.param_relations.size() + 1, nparams);
        for (std::size_t r = 0; r < fam.param_relations.size(); ++r)
            for (int c = 0; c < nparams; ++c) aug.at(r, c) = fam.param_relations[r][c];
        for (int c = 0; c < nparams; ++c) aug.at(fam.param_relations.size(), c) = vec[c];
        if (aug.rank() != base_rank) return false;
    }
    return true;
}

} // namespace

FirstOrderCheck verify_first_order(const FirstOrderFamily& fam) {
    const int g = fam.g, k = fam.k;
    const int b = 2 * k - 2 * g - 2;
    // work in Q[x, s..., t...]
    std::vector<std::string> names = {"x"};
    for (int i = 1; i <= k - 1; ++i) names.push_back("s" + std::to_string(i));
    for (int i = 0; i < fam.num_t; ++i) names.push_back("t" + std::to_string(i));
    RingPtr R = make_ring(std::move(names));
    MPoly x = MPoly::variable(R, 0);

    // z_i -> x^i, parameters map to themselves
    std::vector<MPoly> images;
    for (int i = 0; i <= k; ++i) images.push_back(x.pow(i));
    for (int v = 0; v < fam.num_s + fam.num_t; ++v)
        images.push_back(MPoly::variable(R, 1 + v));

    auto a_of = [&](int i) { return (i < 0 || i > 2 * g + 2) ? Rat(0) : fam.curve.a[i]; };
    auto s_img = [&](int i) -> MPoly {
        if (i < 1 || i > k - 1) return MPoly(R);
        return MPoly::variable(R, 1 + (i - 1));
    };

    FirstOrderCheck out;
    if (!fam.gauge_overflow.empty()) {
        out.ok = false;
        out.failed_m = fam.gauge_overflow;
        return out;
    }
    for (int m = 0; m < b; ++m) {
        MPoly lhs = x * fam.phi_prime[m].substitute(R, images) -
                    fam.phi_prime[m + 1].substitute(R, images);
        for (int i = 0; i <= 2 * g + 2; ++i) {
            if (a_of(i) == 0) continue;
            MPoly s = s_img(floor2(m + i));
            if (s.is_zero()) continue;
            lhs += x * s * x.pow(ceil2(m + i)) * a_of(i);
        }
        bool ok = fam.param_relations.empty() ? lhs.is_zero() : reduce_by_relations(fam, lhs);
        if (!ok) {
            out.ok = false;
            out.failed_m.push_back(m);
        }
    }
    return out;
}

FirstOrderFamily mutate_family(const FirstOrderFamily& fam, int m, int param_idx, int zidx,
                               const Rat& delta) {
    FirstOrderFamily out = fam;
    MPoly extra = MPoly::variable(out.ring, out.num_z + param_idx) *
                  MPoly::variable(out.ring, out.z_var(zidx)) * delta;
    out.phi_prime.at(m) += extra;
    return out;
}

BaseSpaceSystem base_space_equations(const FirstOrderFamily& fam) {
    auto chk = verify_first_order(fam);
    if (!chk.ok) throw InternalError("family fails the first-order identity");
    const int g = fam.g, k = fam.k;
    const int b = 2 * k - 2 * g - 2;

    BaseSpaceSystem sys;
    sys.g = g;
    sys.k = k;
    sys.num_t = fam.num_t;
    sys.num_s = fam.num_s;
    std::vector<std::string> names;
    for (int i = 0; i < fam.num_t; ++i) names.push_back(fam.num_t == 1 ? "t" : "t" + std::to_string(i));
    for (int i = 1; i <= k - 1; ++i) names.push_back("s" + std::to_string(i));
    sys.ring = make_ring(std::move(names));

    auto t_out = [&](int i) { return MPoly::variable(sys.ring, i); };
    auto s_out = [&](int i) -> MPoly {
        if (i < 1 || i > k - 1) return MPoly(sys.ring);
        return MPoly::variable(sys.ring, fam.num_t + (i - 1));
    };

    // z_i -> s_i with s_0 = s_k = 0, parameters pass through
    std::vector<MPoly> images;
    for (int i = 0; i <= k; ++i) images.push_back(s_out(i));
    for (int i = 1; i <= k - 1; ++i) images.push_back(s_out(i));
    for (int i = 0; i < fam.num_t; ++i) images.push_back(t_out(i));

    auto a_of = [&](int i) { return (i < 0 || i > 2 * g + 2) ? Rat(0) : fam.curve.a[i]; };
    for (int m = 1; m <= b - 1; ++m) {
        MPoly eq = fam.phi_prime[m].substitute(sys.ring, images);
        // - phi_m(s): w-monomials drop, z_j -> s_j
        for (int i = 0; i <= 2 * g + 2; ++i) {
            if (a_of(i) == 0) continue;
            MPoly p = s_out(floor2(m + i)) * s_out(ceil2(m + i));
            eq += p * a_of(i);
        }
        sys.equations.push_back(std::move(eq));
    }
    for (const auto& rel : fam.param_relations) {
        // reorder (s-block, t-block) -> (t-block, s-block)
        std::vector<Rat> r(sys.num_params(), Rat(0));
        for (int i = 0; i < fam.num_s; ++i) r[fam.num_t + i] = rel[i];
        for (int i = 0; i < fam.num_t; ++i) r[i] = rel[fam.num_s + i];
        sys.param_relations.push_back(std::move(r));
    }
    return sys;
}

BaseSpaceSystem special_curve_base(int g) {
    if (g < 2) throw Unsupported("special_curve_base needs g >= 2");
    const int k = 2 * g + 2;
    BaseSpaceSystem sys;
    sys.g = g;
    sys.k = k;
    sys.num_t = 1;
    sys.num_s = 2 * g + 1;
    std::vector<std::string> names = {"t"};
    for (int i = 1; i <= 2 * g + 1; ++i) names.push_back("s" + std::to_string(i));
    sys.ring = make_ring(std::move(names));
    MPoly t = MPoly::variable(sys.ring, 0);
    auto s = [&](int i) -> MPoly {
        if (i < 1 || i > 2 * g + 1) throw InternalError("special curve display index out of range");
        return MPoly::variable(sys.ring, i);
    };
    for (int m = 1; m <= 2 * g + 1; ++m) {
        MPoly eq = t * s(m);
        for (int j = 1; j <= 2 * g + 1 - m; ++j) eq += s(2 * g + 2 - ceil2(j)) * s(m + ceil2(j));
        for (int j = 2; j <= m; ++j) eq += s(floor2(j)) * s(m - floor2(j));
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

bool check_solution(const BaseSpaceSystem& sys, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != sys.num_params())
        throw InvalidInput("point has the wrong number of coordinates");
    for (const auto& eq : sys.equations)
        if (eq.eval(point) != 0) return false;
    return true;
}

std::vector<long> hilbert_function_check(const BaseSpaceSystem& sys, int up_to_degree) {
    RingPtr R = sys.ring;
    std::vector<long> out;
    for (int m = 0; m <= up_to_degree; ++m) {
        auto monos = monomials_of_degree(R, m);
        long rm = static_cast<long>(monos.size());
        if (m < 2) {
            out.push_back(rm);
            continue;
        }
        std::map<Expo, int> row_id;
        auto cof = monomials_of_degree(R, m - 2);
        std::vector<SparseRow> cols;
        for (const auto& eq : sys.equations)
            for (const auto& mono : cof) {
                SparseRow col;
                for (const auto& [e, c] : eq.terms()) {
                    Expo t = e;
                    for (std::size_t v = 0; v < t.size(); ++v) t[v] += mono[v];
                    auto it = row_id.find(t);
                    int id;
                    if (it == row_id.end()) {
                        id = static_cast<int>(row_id.size());
                        row_id.emplace(t, id);
                    } else {
                        id = it->second;
                    }
                    col.emplace_back(id, c);
                }
                cols.push_back(std::move(col));
            }
        std::vector<SparseRow> rows(row_id.size());
        for (std::size_t ci = 0; ci < cols.size(); ++ci)
            for (const auto& [r, c] : cols[ci]) rows[r].emplace_back(static_cast<int>(ci), c);
        SparseMatQ M(static_cast<int>(cols.size()));
        for (auto& r : rows) M.add_row(std::move(r));
        out.push_back(rm - static_cast<long>(M.rank_exact()));
    }
    return out;
}

std::vector<long> ci_hilbert_series(int num_quadrics, int up_to) {
    // (1+T)^e / (1-T): partial sums of binomial coefficients
    std::vector<long> binom(up_to + 1, 0);
    for (int i = 0; i <= up_to; ++i) {
        if (i > num_quadrics) break;
        long b = 1;
        for (int j = 0; j < i; ++j) b = b * (num_quadrics - j) / (j + 1);
        binom[i] = b;
    }
    std::vector<long> out(up_to + 1, 0);
    long acc = 0;
    for (int i = 0; i <= up_to; ++i) {
        acc += binom[i];
        out[i] = acc;
    }
    return out;
}

namespace {

struct CompiledSystem {
    int nvar;
    struct Term {
        std::uint64_t c;
        std::vector<std::pair<int, int>> pows; // (var, exponent)
    };
    std::vector<std::vector<Term>> eqs;
    std::vector<std::vector<std::vector<Term>>> jac; // jac[eq][var]
};

std::vector<CompiledSystem::Term> compile_poly(const MPoly& p, const FpContext& F) {
    std::vector<CompiledSystem::Term> out;
    for (const auto& [e, c] : p.terms()) {
        CompiledSystem::Term t;
        std::uint64_t cc;
        if (!F.from_rat(c, cc)) throw BadPrime("denominator vanishes mod p");
        if (cc == 0) continue;
        t.c = cc;
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) t.pows.emplace_back(static_cast<int>(v), e[v]);
        out.push_back(std::move(t));
    }
    return out;
}

std::uint64_t eval_terms(const std::vector<CompiledSystem::Term>& terms,
                         const std::vector<std::uint64_t>& x, const FpContext& F) {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
        std::uint64_t v = t.c;
        for (const auto& [var, e] : t.pows)
            for (int i = 0; i < e; ++i) v = F.mul(v, x[var]);
        acc = F.add(acc, v);
    }
    return acc;
}

} // namespace

FFCountResult count_projective_solutions_ff(const BaseSpaceSystem& sys, std::uint64_t p) {
    FpContext F(p);
    const int n = sys.num_params();
    const int neq = static_cast<int>(sys.equations.size());
    // clear denominators; p must not divide any equation's content
    std::vector<MPoly> eqs;
    for (const auto& eq : sys.equations) {
        std::vector<Rat> cs;
        for (const auto& [e, c] : eq.terms()) cs.push_back(c);
        Int l = denominator_lcm(cs);
        Int content = 0;
        MPoly scaled = eq * Rat(l);
        for (const auto& [e, c] : scaled.terms())
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), Int(c.get_num()).get_mpz_t());
        if (content % Int(static_cast<unsigned long>(p)) == 0)
            throw BadPrime("prime divides the content of an equation");
        eqs.push_back(std::move(scaled));
    }

    CompiledSystem cs;
    cs.nvar = n;
    for (const auto& eq : eqs) {
        cs.eqs.push_back(compile_poly(eq, F));
        std::vector<std::vector<CompiledSystem::Term>> row;
        for (int v = 0; v < n; ++v) row.push_back(compile_poly(eq.derivative(v), F));
        cs.jac.push_back(std::move(row));
    }

    FFCountResult res;
    std::vector<std::uint64_t> x(n, 0);
    for (int lead = 0; lead < n; ++lead) {
        std::fill(x.begin(), x.end(), 0);
        x[lead] = 1;
        // enumerate x[lead+1..n-1] over F_p
        const int free = n - lead - 1;
        std::vector<std::uint64_t> odo(free, 0);
        while (true) {
            for (int i = 0; i < free; ++i) x[lead + 1 + i] = odo[i];
            bool solves = true;
            for (const auto& eq : cs.eqs)
                if (eval_terms(eq, x, F) != 0) {
                    solves = false;
                    break;
                }
            if (solves) {
                ++res.num_points;
                FpMatrix J(F, neq, n);
                for (int i = 0; i < neq; ++i)
                    for (int v = 0; v < n; ++v) J.at(i, v) = eval_terms(cs.jac[i][v], x, F);
                if (J.rank() == static_cast<std::size_t>(neq)) ++res.num_smooth;
            }
            int pos = 0;
            while (pos < free && ++odo[pos] == p) odo[pos++] = 0;
            if (pos == free) break;
        }
    }
    long bezout = 1;
    for (int i = 0; i < neq; ++i) bezout *= 2;
    res.degenerate = res.num_points > bezout || res.num_smooth < res.num_points;
    return res;
}

std::optional<PrimeScanResult> scan_primes_for_point_count(const BaseSpaceSystem& sys,
                                                           std::uint64_t bound, long expected) {
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (!is_prime_u64(p)) continue;
        FFCountResult r;
        try {
            r = count_projective_solutions_ff(sys, p);
        } catch (const BadPrime&) {
            continue;
        }
        if (!r.degenerate && r.num_points == expected && r.num_smooth == expected)
            return PrimeScanResult{p, r.num_points, r.num_smooth};
    }
    return std::nullopt;
}

} // namespace hecone

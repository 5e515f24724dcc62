#include "hecone/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hecone/errors.hpp"

namespace hecone {

std::string FinAbGroup::to_string() const {
    std::string s;
    if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
    for (const auto& f : invariant_factors) {
        if (!s.empty()) s += " + ";
        s += "Z/" + f.get_str();
    }
    if (s.empty()) s = "0";
    return s;
}

FinAbGroup cokernel_group(const ZMatrix& relations, std::size_t num_generators) {
    if (relations.cols() != num_generators) throw InternalError("presentation shape mismatch");
    SmithResult snf = smith_normal_form(relations);
    FinAbGroup out;
    std::size_t n = std::min(snf.D.rows(), snf.D.cols());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& di = snf.D.at(i, i);
        if (di == 0) continue;
        ++nonzero;
        if (di != 1 && di != -1) out.invariant_factors.push_back(di < 0 ? Int(-di) : di);
    }
    out.free_rank = static_cast<long>(num_generators - nonzero);
    return out;
}

FinAbGroup circle_bundle_h1(int g, long euler_number) {
    // generators a_1, b_1, ..., a_g, b_g, gamma; relation e * gamma = 0
    ZMatrix rel(1, 2 * g + 1);
    rel.at(0, 2 * g) = euler_number;
    return cokernel_group(rel, 2 * g + 1);
}

FinAbGroup link_homology(int g) {
    if (g < 2) throw Unsupported("link_homology needs g >= 2");
    return circle_bundle_h1(g, -(4L * g + 4));
}

MilnorFiberReport milnor_fiber_homology(int g, int e) {
    if (g < 2) throw Unsupported("milnor_fiber_homology needs g >= 2");
    if (e < 0 || e > g + 1) throw Unsupported("needs 0 <= e <= g+1");
    MilnorFiberReport rep;
    rep.g = g;
    rep.e = e;
    rep.even_case = ((g + 1 + e) % 2 == 0);
    const int eps = rep.even_case ? 0 : 1;

    // H_2(S) has basis E = E_0 + floor((g+1+e)/2) f and f; intersecting
    // with C gives f -> 2, E -> 2g+2-eps.  H_1(F) is the cokernel of
    // H_2(S) -> H^2(C) = Z, presented on one generator by the two images.
    {
        ZMatrix pres(2, 1);
        pres.at(0, 0) = 2;               // f . C
        pres.at(1, 0) = 2 * g + 2 - eps; // E . C
        rep.h1 = cokernel_group(pres, 1);
    }
    rep.h2_rank = 2L * g + 1;

    // H^2(F): 0 -> H_2(C)=Z -> H^2(S)=Z^2 -> H^2(F) -> H_1(C)=Z^2g -> 0,
    // the first map the transpose of the intersection map
    {
        ZMatrix pres(1, 2);
        pres.at(0, 0) = 2;
        pres.at(0, 1) = 2 * g + 2 - eps;
        FinAbGroup ck = cokernel_group(pres, 2);
        rep.h2_rel = ck;
        rep.h2_rel.free_rank += 2L * g;
    }

    // kernel generator of H_2(S) -> H^2(C) and its self-intersection;
    // E.E = g+1-eps, E.f = 1, f.f = 0
    long EE = g + 1 - eps;
    if (rep.even_case) {
        // v = E - (g+1) f
        rep.min_self_intersection = EE - 2 * (g + 1);
    } else {
        // v = 2E - (2g+1) f
        rep.min_self_intersection = 4 * EE - 4 * (2 * g + 1);
    }
    return rep;
}

Rat q_value(int g, long m) {
    long h8 = 8L * g + 8;
    Rat q(m * (m - 6L * g - 2), h8);
    q.canonicalize();
    // representative in [0,1)
    Int num = q.get_num(), den = q.get_den();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q - Rat(fl);
}

std::vector<IsotropicSubgroup> isotropic_subgroups(int g) {
    const long N = 4L * g + 4;
    std::vector<IsotropicSubgroup> out;
    for (long r = 1; r <= N; ++r) {
        if (N % r != 0) continue;
        long gen = N / r;
        bool iso = true;
        for (long j = 0; j < r && iso; ++j)
            if (q_value(g, gen * j) != 0) iso = false;
        if (iso) out.push_back({r, gen});
    }
    return out;
}

bool isotropic_criterion(int g, long r) {
    const long N = 4L * g + 4;
    if (r == 1) return true;
    if (N % (r * r) != 0) return false;
    if ((2L * g - 2) % r != 0) return false;
    long s = N / (r * r);
    long u = (2L * g - 2) / r;
    return ((s * (1 + r)) % 2 + 2) % 2 == ((u % 2) + 2) % 2;
}

long orthogonal_group_order(int g, long I_order) {
    const long N = 4L * g + 4;
    if (I_order < 1 || N % I_order != 0) throw InvalidInput("I_order must divide 4g+4");
    // check I is isotropic
    long igen = N / I_order;
    for (long j = 0; j < I_order; ++j)
        if (q_value(g, igen * j) != 0) throw InvalidInput("subgroup is not isotropic");

    auto bilinear_zero = [&](long m, long n) {
        Rat b = q_value(g, m + n) - q_value(g, m) - q_value(g, n);
        return b.get_den() == 1; // zero mod 1
    };

    if (I_order == 1) {
        long count = 0;
        for (long dd = 1; dd < N; ++dd) {
            if (std::gcd(dd, N) != 1) continue;
            bool pres = true;
            for (long m = 0; m < N && pres; ++m)
                if (q_value(g, dd * m) != q_value(g, m)) pres = false;
            if (pres) ++count;
        }
        return count;
    }

    // I-perp = { m : b(m, igen) = 0 mod 1 }
    std::vector<long> perp;
    for (long m = 0; m < N; ++m)
        if (bilinear_zero(m, igen)) perp.push_back(m);
    // I-perp is cyclic; find its generator (smallest positive element)
    long gamma = 0;
    for (long m : perp)
        if (m != 0) {
            gamma = m;
            break;
        }
    if (gamma == 0) throw InternalError("I-perp is trivial");
    long quot = static_cast<long>(perp.size()) / I_order; // |I-perp / I|
    // induced q_I on I-perp/I, classes represented by j*gamma, j = 0..quot-1
    auto qI = [&](long j) { return q_value(g, (j % quot) * gamma); };
    // well-definedness: shifting by I must not change q
    for (long j = 0; j < quot; ++j)
        if (q_value(g, j * gamma + igen) != q_value(g, j * gamma))
            throw InternalError("q_I is not well defined on I-perp/I");
    long count = 0;
    for (long dd = 1; dd <= quot; ++dd) {
        if (std::gcd(dd, quot) != 1) continue;
        bool pres = true;
        for (long j = 0; j < quot && pres; ++j)
            if (qI(dd * j) != qI(j)) pres = false;
        if (pres) ++count;
    }
    return count;
}

long smoothing_data_count(int g) {
    if (g % 2 != 0)
        throw Unsupported("smoothing data count is stated for even g only "
                          "(O(q_I) may be nontrivial otherwise)");
    auto iso = isotropic_subgroups(g);
    std::set<long> orders;
    for (const auto& s : iso) orders.insert(s.order);
    if (orders != std::set<long>{1, 2})
        throw InternalError("unexpected isotropic subgroup orders for even g");
    if (orthogonal_group_order(g, 1) != 1 || orthogonal_group_order(g, 2) != 1)
        throw InternalError("orthogonal group is nontrivial; counting argument breaks");
    long count = 1;
    for (int i = 0; i < 2 * g; ++i) count *= 2;
    return 1 + count;
}

std::vector<int> j_invariant(const WSubset& T, const std::vector<std::pair<int, int>>& discs) {
    const int n = T.n;
    const int g2 = n - 2; // 2g
    if (static_cast<int>(discs.size()) != g2)
        throw InvalidInput("need 2g discs");
    for (int i = 0; i < g2; ++i) {
        auto [a, b] = discs[i];
        if (a != i || b != i + 1)
            throw InvalidInput("discs must form the standard chain {P_i, P_i+1}");
        if (a < 0 || b >= n) throw InvalidInput("disc index out of range");
    }
    std::vector<int> out(g2, 0);
    for (int i = 0; i < g2; ++i) {
        int c = 0;
        if ((T.mask >> discs[i].first) & 1u) ++c;
        if ((T.mask >> discs[i].second) & 1u) ++c;
        out[i] = c % 2;
    }
    return out;
}

} // namespace hecone

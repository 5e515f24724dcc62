#include "hecone/components.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecone/errors.hpp"
#include "hecone/linalg.hpp"

namespace hecone {

std::vector<Int> vandermonde_hyperplane(const std::vector<Rat>& branch_xs, const WSubset& T) {
    const int n = static_cast<int>(branch_xs.size());
    if (T.n != n) throw InvalidInput("subset size does not match the branch count");
    std::set<Rat> seen(branch_xs.begin(), branch_xs.end());
    if (static_cast<int>(seen.size()) != n) throw InvalidCurve("branch x-coordinates not distinct");

    // cofactor of the s_i entry: (-1)^(i+n) det Vandermonde(nodes without i)
    std::vector<Rat> coeffs(n);
    for (int i = 0; i < n; ++i) {
        Rat det = 1;
        std::vector<Rat> rest;
        for (int j = 0; j < n; ++j)
            if (j != i) rest.push_back(branch_xs[j]);
        for (std::size_t a = 0; a < rest.size(); ++a)
            for (std::size_t b = a + 1; b < rest.size(); ++b) det *= rest[b] - rest[a];
        int sign = ((i + n + 1) % 2 == 0) ? 1 : -1; // (-1)^(row+col) with 1-based indices
        Rat c = det * sign;
        if ((T.mask >> i) & 1u) c = -c;
        if (c == 0) throw InternalError("Vandermonde cofactor vanished");
        coeffs[i] = c;
    }
    return primitive_integer_vector(coeffs);
}

std::vector<ComponentDescriptor> enumerate_components(const std::vector<Rat>& branch_xs) {
    const int n = static_cast<int>(branch_xs.size());
    if (n % 2 != 0 || n < 4) throw InvalidInput("need 2g+2 branch points");
    std::map<std::uint32_t, ComponentDescriptor> classes;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        WSubset T{mask, n};
        std::uint32_t canon = T.canonical();
        if (classes.count(canon)) continue;
        ComponentDescriptor d;
        d.subset = mask;
        d.canonical = canon;
        d.hyperplane = vandermonde_hyperplane(branch_xs, T);
        d.even = T.even();
        classes.emplace(canon, std::move(d));
    }
    std::vector<ComponentDescriptor> out;
    for (auto& [c, d] : classes) out.push_back(std::move(d));
    // distinctness of the normalized hyperplanes
    std::set<std::vector<Int>> uniq;
    for (const auto& d : out) uniq.insert(d.hyperplane);
    if (uniq.size() != out.size())
        throw InternalError("hyperplanes fail to separate subset classes");
    long expected = 1L << (n - 1);
    if (static_cast<long>(out.size()) != expected)
        throw InternalError("component class count is not 2^(2g+1)");
    return out;
}

ComponentCount count_components(int g, bool L_is_4K_at_g3) {
    if (g < 2) throw Unsupported("count_components needs g >= 2");
    ComponentCount c;
    c.count = 1L << (2 * g + 1);
    if (g == 3 && L_is_4K_at_g3) c.annotation = "+1 Veronese component";
    return c;
}

int elm_parity(int e, const WSubset& T) { return ((e % 2) + (T.size() % 2)) % 2; }

std::pair<int, int> scroll_of_twist(const HyperellipticCurve& c, const LineBundleSpec& L,
                                    const WSubset& T, int k_prime) {
    const int g = c.g;
    if (L.divisor) throw Unsupported("scroll_of_twist supports L = k g12");
    if (T.size() != 2 * k_prime) throw InvalidInput("|T| must equal 2k'");
    if (!c.branch_xs) throw Unsupported("needs rational branch points");
    const int d = L.degree(c);

    // sections of L tensor eta twisted down n times: pairs (p, q) with
    // deg p <= K, deg q <= K-g-1, p vanishing on the x-coordinates indexed
    // by T and both p, q vanishing at n extra fibres
    const int K = L.k + k_prime;
    std::vector<Rat> txs;
    for (int i = 0; i < T.n; ++i)
        if ((T.mask >> i) & 1u) txs.push_back((*c.branch_xs)[i]);

    auto h0 = [&](int nn) -> int {
        std::vector<Rat> extra;
        Rat v = 1;
        std::set<Rat> avoid(c.branch_xs->begin(), c.branch_xs->end());
        while (static_cast<int>(extra.size()) < nn) {
            if (!avoid.count(v)) extra.push_back(v);
            v += 1;
        }
        int dp = K, dq = K - g - 1;
        if (dp < 0) return 0;
        int cols = (dp + 1) + (dq >= 0 ? dq + 1 : 0);
        std::vector<std::vector<Rat>> rows;
        auto prow = [&](const Rat& x0, bool on_q) {
            std::vector<Rat> r(cols, Rat(0));
            Rat pw = 1;
            if (!on_q) {
                for (int i = 0; i <= dp; ++i) {
                    r[i] = pw;
                    pw *= x0;
                }
            } else if (dq >= 0) {
                for (int i = 0; i <= dq; ++i) {
                    r[dp + 1 + i] = pw;
                    pw *= x0;
                }
            }
            return r;
        };
        for (const auto& x0 : txs) rows.push_back(prow(x0, false));
        for (const auto& x0 : extra) {
            rows.push_back(prow(x0, false));
            rows.push_back(prow(x0, true));
        }
        QMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        return cols - static_cast<int>(m.rank());
    };

    int a = -1;
    for (int nn = 0;; ++nn) {
        if (h0(nn) > 0)
            a = nn;
        else
            break;
    }
    int b = d - g - 1 - a;
    if (a < b) throw InternalError("twisted scroll type ordering violated");
    if (a > d / 2) throw InternalError("twisted scroll type exceeds d/2");
    return {a, b};
}

} // namespace hecone

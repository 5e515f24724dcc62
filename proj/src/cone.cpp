#include "hecone/cone.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hecone/errors.hpp"
#include "hecone/linalg.hpp"

namespace hecone {

namespace {

inline int floor2(int m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }
inline int ceil2(int m) { return floor2(m + 1); } // ceil(m/2) = floor((m+1)/2)

RingPtr cone_ring(int num_z, int num_w) {
    std::vector<std::string> names;
    for (int i = 0; i < num_z; ++i) names.push_back("z" + std::to_string(i));
    for (int i = 0; i < num_w; ++i) names.push_back("w" + std::to_string(i));
    return make_ring(std::move(names));
}

} // namespace

MPoly RollingFactorsPresentation::top(int col) const {
    return MPoly::variable(ring, top_var(col));
}

MPoly RollingFactorsPresentation::bot(int col) const {
    return MPoly::variable(ring, bot_var(col));
}

int RollingFactorsPresentation::top_var(int col) const {
    const ScrollColumn& c = cols.at(col);
    return c.is_w ? w_var(c.idx) : z_var(c.idx);
}

int RollingFactorsPresentation::bot_var(int col) const {
    const ScrollColumn& c = cols.at(col);
    return c.is_w ? w_var(c.idx + 1) : z_var(c.idx + 1);
}

const MPoly& RollingFactorsPresentation::generator(int i) const {
    if (i < static_cast<int>(minors.size())) return minors[i];
    return phis.at(i - minors.size());
}

std::string RollingFactorsPresentation::gen_name(int i) const {
    if (i < static_cast<int>(minors.size())) {
        auto [p, q] = minor_pairs[i];
        return "m_" + std::to_string(p) + "_" + std::to_string(q);
    }
    return "phi_" + std::to_string(i - minors.size());
}

int RollingFactorsPresentation::minor_index(int p, int q) const {
    // column-pair lex order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    const int n = num_cols();
    if (!(0 <= p && p < q && q < n)) throw InternalError("bad minor pair");
    return p * n - p * (p + 1) / 2 + (q - p - 1);
}

namespace {

void build_matrix_and_minors(RollingFactorsPresentation& pres) {
    const int n = pres.num_cols();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            pres.minor_pairs.emplace_back(p, q);
            pres.minors.push_back(pres.top(p) * pres.bot(q) - pres.bot(p) * pres.top(q));
        }
}

// rolling[m] built from column -> cofactor contributions
using RollingMap = std::map<int, MPoly>;

void push_rolling(RollingMap& m, int col, const MPoly& cof) {
    auto it = m.find(col);
    if (it == m.end())
        m.emplace(col, cof);
    else
        it->second += cof;
}

void finalize_rolling(RollingFactorsPresentation& pres, std::vector<RollingMap> maps) {
    for (auto& rm : maps) {
        std::vector<std::pair<int, MPoly>> entry;
        for (auto& [col, cof] : rm)
            if (!cof.is_zero()) entry.emplace_back(col, std::move(cof));
        pres.rolling.push_back(std::move(entry));
    }
}

} // namespace

RollingFactorsPresentation cone_equations_kg12(const HyperellipticCurve& c, int k) {
    const int g = c.g;
    if (k <= g + 1) throw Unsupported("cone_equations_kg12 needs k > g+1");
    RollingFactorsPresentation pres;
    pres.kind = ConeKind::CurveKG12;
    pres.g = g;
    pres.k = k;
    pres.d = 2 * k;
    pres.e = g + 1;
    pres.curve = c;
    pres.num_z = k + 1;
    pres.num_w = k - g;
    pres.ring = cone_ring(pres.num_z, pres.num_w);
    for (int i = 0; i <= k - 1; ++i) pres.cols.push_back({false, i});
    for (int i = 0; i <= k - g - 2; ++i) pres.cols.push_back({true, i});
    build_matrix_and_minors(pres);

    const int b = 2 * k - 2 * g - 2;
    auto zv = [&](int i) { return MPoly::variable(pres.ring, pres.z_var(i)); };
    auto wv = [&](int i) { return MPoly::variable(pres.ring, pres.w_var(i)); };
    std::vector<RollingMap> maps;
    for (int m = 0; m <= b; ++m) {
        MPoly phi = wv(floor2(m)) * wv(ceil2(m));
        for (int i = 0; i <= 2 * g + 2; ++i)
            phi -= (zv(floor2(m + i)) * zv(ceil2(m + i))) * c.a[i];
        pres.phis.push_back(phi);
        if (m < b) {
            RollingMap rm;
            push_rolling(rm, k + floor2(m), wv(ceil2(m))); // w-column floor(m/2)
            for (int i = 0; i <= 2 * g + 2; ++i)
                if (c.a[i] != 0)
                    push_rolling(rm, floor2(m + i), zv(ceil2(m + i)) * Rat(-c.a[i]));
            maps.push_back(std::move(rm));
        }
    }
    finalize_rolling(pres, std::move(maps));

    // parametrization z_i = xb^(k-i) x^i, w_i = y xb^(k-g-1-i) x^i
    const RingPtr& R = curve_ring();
    for (int i = 0; i <= k; ++i) {
        Expo e(3, 0);
        e[CR_XB] = k - i;
        e[CR_X] = i;
        pres.param.push_back(MPoly::monomial(R, e, Rat(1)));
    }
    for (int i = 0; i <= k - g - 1; ++i) {
        Expo e(3, 0);
        e[CR_Y] = 1;
        e[CR_XB] = k - g - 1 - i;
        e[CR_X] = i;
        pres.param.push_back(MPoly::monomial(R, e, Rat(1)));
    }
    pres.param_homogeneous = true;
    return pres;
}

RollingFactorsPresentation cone_equations_general(const HyperellipticCurve& c,
                                                  const MumfordDivisor& M, int k) {
    const int g = c.g;
    const int e = M.e;
    const int d = 2 * k + (g + 1 - e);
    if (d < 2 * g + 3) throw Unsupported("cone_equations_general needs d >= 2g+3");
    // F = V^2 + U W identically
    if (upoly_sub(c.a, upoly_add(upoly_mul(M.V, M.V), upoly_mul(M.U, M.W))) != UPoly{})
        throw InvalidDivisor("F != V^2 + U*W");
    if (upoly_deg(M.W) != g + 1 + e) throw InvalidDivisor("deg W != g+1+e");

    RollingFactorsPresentation pres;
    pres.kind = ConeKind::CurveGeneral;
    pres.g = g;
    pres.k = k;
    pres.d = d;
    pres.e = -1; // scroll invariant of the embedding is not tracked here
    pres.curve = c;
    pres.mumford = M;
    pres.num_z = k + 1;
    pres.num_w = k - e + 1;
    pres.ring = cone_ring(pres.num_z, pres.num_w);
    for (int i = 0; i <= k - 1; ++i) pres.cols.push_back({false, i});
    for (int i = 0; i <= k - e - 1; ++i) pres.cols.push_back({true, i});
    if (pres.num_cols() != d - g - 1) throw InternalError("scroll width mismatch");
    build_matrix_and_minors(pres);

    auto zv = [&](int i) { return MPoly::variable(pres.ring, pres.z_var(i)); };
    auto wv = [&](int i) { return MPoly::variable(pres.ring, pres.w_var(i)); };
    auto Ucoef = [&](int i) { return i < static_cast<int>(M.U.size()) ? M.U[i] : Rat(0); };
    auto Vcoef = [&](int i) { return i < static_cast<int>(M.V.size()) ? M.V[i] : Rat(0); };
    auto Wcoef = [&](int i) { return i < static_cast<int>(M.W.size()) ? M.W[i] : Rat(0); };

    const int b = d - 2 * g - 2;
    std::vector<RollingMap> maps;
    for (int m = 0; m <= b; ++m) {
        MPoly phi(pres.ring);
        for (int i = 0; i <= g + 1 - e; ++i)
            phi += (wv(floor2(m + i)) * wv(ceil2(m + i))) * Ucoef(i);
        for (int i = 0; i <= g - e; ++i)
            phi -= (wv(floor2(m + i)) * zv(ceil2(m + i))) * (Rat(2) * Vcoef(i));
        for (int i = 0; i <= g + 1 + e; ++i)
            phi -= (zv(floor2(m + i)) * zv(ceil2(m + i))) * Wcoef(i);
        pres.phis.push_back(phi);
        if (m < b) {
            RollingMap rm;
            for (int i = 0; i <= g + 1 - e; ++i)
                if (Ucoef(i) != 0)
                    push_rolling(rm, k + floor2(m + i), wv(ceil2(m + i)) * Ucoef(i));
            for (int i = 0; i <= g - e; ++i) {
                if (Vcoef(i) == 0) continue;
                if ((m + i) % 2 == 0) {
                    // w_a z_a -> roll the z factor
                    push_rolling(rm, (m + i) / 2, wv((m + i) / 2) * (Rat(-2) * Vcoef(i)));
                } else {
                    // w_a z_{a+1} -> roll the w factor
                    push_rolling(rm, k + (m + i - 1) / 2, zv((m + i + 1) / 2) * (Rat(-2) * Vcoef(i)));
                }
            }
            for (int i = 0; i <= g + 1 + e; ++i)
                if (Wcoef(i) != 0)
                    push_rolling(rm, floor2(m + i), zv(ceil2(m + i)) * Rat(-Wcoef(i)));
            maps.push_back(std::move(rm));
        }
    }
    finalize_rolling(pres, std::move(maps));

    // parametrization z_i = U x^i, w_i = (y+V) x^i (inhomogeneous)
    const RingPtr& R = curve_ring();
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
    MPoly x = MPoly::variable(R, CR_X);
    MPoly y = MPoly::variable(R, CR_Y);
    for (int i = 0; i <= k; ++i) pres.param.push_back(Ux * x.pow(i));
    for (int i = 0; i <= k - e; ++i) pres.param.push_back((y + Vx) * x.pow(i));
    pres.param_homogeneous = false;
    return pres;
}

RollingFactorsPresentation hyperplane_section_equations(int g, int d, const UPoly& F) {
    if (!(d > 2 * g + 2)) throw Unsupported("points cone needs d > 2g+2");
    if (static_cast<int>(F.size()) != d + 1)
        throw InvalidInput("F must have coefficients a_0..a_d");
    UPoly f1 = upoly_trim(F);
    if (f1.empty()) throw InvalidCurve("F is zero");
    UPoly f2(F.rbegin(), F.rend());
    f2 = upoly_trim(std::move(f2));
    if (!upoly_squarefree(f1) || !upoly_squarefree(f2))
        throw InvalidCurve("F is not squarefree");

    RollingFactorsPresentation pres;
    pres.kind = ConeKind::Points;
    pres.g = g;
    pres.d = d;
    pres.points_form = F;
    pres.num_z = d - g;
    pres.num_w = 0;
    pres.ring = cone_ring(pres.num_z, 0);
    for (int i = 0; i <= d - g - 2; ++i) pres.cols.push_back({false, i});
    build_matrix_and_minors(pres);

    auto zv = [&](int i) { return MPoly::variable(pres.ring, pres.z_var(i)); };
    const int b = d - 2 * g - 2;
    std::vector<RollingMap> maps;
    for (int m = 0; m <= b; ++m) {
        MPoly phi(pres.ring);
        for (int i = 0; i <= d; ++i)
            phi += (zv(floor2(m + i)) * zv(ceil2(m + i))) * F[i];
        pres.phis.push_back(phi);
        if (m < b) {
            RollingMap rm;
            for (int i = 0; i <= d; ++i)
                if (F[i] != 0) push_rolling(rm, floor2(m + i), zv(ceil2(m + i)) * F[i]);
            maps.push_back(std::move(rm));
        }
    }
    finalize_rolling(pres, std::move(maps));

    // symbolic parametrization z_i = xb^(d-g-1-i) x^i
    const RingPtr& R = curve_ring();
    for (int i = 0; i <= d - g - 1; ++i) {
        Expo e(3, 0);
        e[CR_XB] = d - g - 1 - i;
        e[CR_X] = i;
        pres.param.push_back(MPoly::monomial(R, e, Rat(1)));
    }
    pres.param_homogeneous = true;
    return pres;
}

RollingFactorsPresentation points_cone_from_roots(int g, const std::vector<Rat>& roots) {
    const int d = static_cast<int>(roots.size());
    std::set<Rat> seen(roots.begin(), roots.end());
    if (seen.size() != roots.size()) throw InvalidCurve("duplicate points");
    UPoly F = {Rat(1)};
    for (const auto& r : roots) F = upoly_mul(F, {-r, Rat(1)});
    F.resize(d + 1, Rat(0));
    auto pres = hyperplane_section_equations(g, d, F);
    pres.points_xs = roots;
    return pres;
}

bool verify_parametrization(const RollingFactorsPresentation& pres) {
    const RingPtr& R = curve_ring();
    if (pres.kind == ConeKind::Points) {
        // minors die identically; each phi_m maps to a monomial multiple of F
        MPoly Fh(R);
        for (int i = 0; i <= pres.d; ++i) {
            if (pres.points_form[i] == 0) continue;
            Expo e(3, 0);
            e[CR_XB] = pres.d - i;
            e[CR_X] = i;
            Fh.add_term(e, pres.points_form[i]);
        }
        for (const auto& m : pres.minors)
            if (!m.substitute(R, pres.param).is_zero()) return false;
        for (std::size_t m = 0; m < pres.phis.size(); ++m) {
            Expo e(3, 0);
            e[CR_XB] = pres.d - 2 * pres.g - 2 - static_cast<int>(m);
            e[CR_X] = static_cast<int>(m);
            if (pres.phis[m].substitute(R, pres.param) != MPoly::monomial(R, e, Rat(1)) * Fh)
                return false;
        }
        // with rational roots, also evaluate every generator at every point
        if (pres.points_xs) {
            for (const auto& r : *pres.points_xs) {
                std::vector<Rat> pt = {Rat(1), r, Rat(0)};
                for (int i = 0; i < pres.num_gens(); ++i) {
                    if (pres.generator(i).substitute(R, pres.param).eval(pt) != 0) return false;
                }
            }
        }
        return true;
    }
    MPoly F = pres.param_homogeneous ? pres.curve.F_hom() : pres.curve.F_inhom();
    for (int i = 0; i < pres.num_gens(); ++i) {
        MPoly img = pres.generator(i).substitute(R, pres.param);
        if (!reduce_y2(img, CR_Y, F).is_zero()) return false;
    }
    return true;
}

bool verify_rolling_property(const RollingFactorsPresentation& pres) {
    for (std::size_t m = 0; m < pres.rolling.size(); ++m) {
        MPoly tops(pres.ring), bots(pres.ring);
        for (const auto& [col, cof] : pres.rolling[m]) {
            tops += pres.top(col) * cof;
            bots += pres.bot(col) * cof;
        }
        if (tops != pres.phis[m] || bots != pres.phis[m + 1]) return false;
    }
    return true;
}

bool syzygy_check(const RollingFactorsPresentation& pres, const SyzygyVector& s) {
    if (static_cast<int>(s.coeff.size()) != pres.num_gens()) return false;
    MPoly acc(pres.ring);
    for (int i = 0; i < pres.num_gens(); ++i)
        if (!s.coeff[i].is_zero()) acc += s.coeff[i] * pres.generator(i);
    return acc.is_zero();
}

namespace {

// adds c * e_{minor(p,q)} with orientation minor(p,q) = -minor(q,p)
void add_minor_slot(const RollingFactorsPresentation& pres, SyzygyVector& v, int p, int q,
                    const MPoly& c) {
    if (p == q) return;
    if (p < q)
        v.coeff[pres.minor_index(p, q)] += c;
    else
        v.coeff[pres.minor_index(q, p)] -= c;
}

SyzygyVector zero_syzygy(const RollingFactorsPresentation& pres) {
    SyzygyVector v;
    v.coeff.assign(pres.num_gens(), MPoly(pres.ring));
    return v;
}

// rolled relation: top_col * phi_{m+1} - bot_col * phi_m - sum_a c_a * minor(col, a)
SyzygyVector rolled_syzygy(const RollingFactorsPresentation& pres, int col, int m) {
    SyzygyVector v = zero_syzygy(pres);
    const int nm = static_cast<int>(pres.minors.size());
    v.coeff[nm + m + 1] += pres.top(col);
    v.coeff[nm + m] -= pres.bot(col);
    for (const auto& [a, cof] : pres.rolling[m]) add_minor_slot(pres, v, col, a, -cof);
    return v;
}

// determinantal triple, top row: top_r e_{m(p,q)} - top_q e_{m(p,r)} + top_p e_{m(q,r)}
SyzygyVector det_syzygy(const RollingFactorsPresentation& pres, int p, int q, int r,
                        bool use_top) {
    SyzygyVector v = zero_syzygy(pres);
    auto entry = [&](int col) { return use_top ? pres.top(col) : pres.bot(col); };
    add_minor_slot(pres, v, p, q, entry(r));
    add_minor_slot(pres, v, p, r, -entry(q));
    add_minor_slot(pres, v, q, r, entry(p));
    return v;
}

} // namespace

std::vector<SyzygyVector> hand_syzygies(const RollingFactorsPresentation& pres) {
    std::vector<SyzygyVector> out;
    const int n = pres.num_cols();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                out.push_back(det_syzygy(pres, p, q, r, true));
                out.push_back(det_syzygy(pres, p, q, r, false));
            }
    for (int col = 0; col < n; ++col)
        for (std::size_t m = 0; m < pres.rolling.size(); ++m)
            out.push_back(rolled_syzygy(pres, col, static_cast<int>(m)));
    return out;
}

namespace {

// dense index of degree-deg monomials of a ring, built lazily
struct MonomialIndex {
    std::map<Expo, int> index;
    int add(const Expo& e) {
        auto it = index.find(e);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(index.size());
        index.emplace(e, id);
        return id;
    }
};

} // namespace

std::vector<SyzygyVector> syzygy_basis(const RollingFactorsPresentation& pres,
                                       int total_degree) {
    const int ngen = pres.num_gens();
    const int nvar = static_cast<int>(pres.ring->arity());
    const int codeg = total_degree - 2; // generators are quadratic
    if (codeg != 1)
        throw Unsupported("syzygy_basis computes linear first syzygies (degree 3)");

    MonomialIndex rows;
    // columns: (generator, variable)
    std::vector<SparseRow> cols(ngen * nvar);
    for (int gi = 0; gi < ngen; ++gi) {
        const MPoly& gen = pres.generator(gi);
        for (int v = 0; v < nvar; ++v) {
            SparseRow& col = cols[gi * nvar + v];
            for (const auto& [e, c] : gen.terms()) {
                Expo m = e;
                m[v] += 1;
                col.emplace_back(rows.add(m), c);
            }
        }
    }
    const int nrows = static_cast<int>(rows.index.size());
    // transpose into a row-major sparse matrix
    std::vector<SparseRow> rowdata(nrows);
    for (int cidx = 0; cidx < ngen * nvar; ++cidx)
        for (const auto& [r, c] : cols[cidx]) rowdata[r].emplace_back(cidx, c);
    SparseMatQ M(ngen * nvar);
    for (auto& r : rowdata) M.add_row(std::move(r));

    auto kernel = M.kernel_basis();
    std::vector<SyzygyVector> out;
    for (const auto& vec : kernel) {
        SyzygyVector s = zero_syzygy(pres);
        for (int gi = 0; gi < ngen; ++gi)
            for (int v = 0; v < nvar; ++v) {
                const Rat& c = vec[gi * nvar + v];
                if (c != 0) s.coeff[gi] += MPoly::variable(pres.ring, v) * c;
            }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Rat> syzygy_to_flat(const RollingFactorsPresentation& pres, const SyzygyVector& s) {
    const int nvar = static_cast<int>(pres.ring->arity());
    std::vector<Rat> v(pres.num_gens() * nvar, Rat(0));
    for (int gi = 0; gi < pres.num_gens(); ++gi)
        for (const auto& [e, c] : s.coeff[gi].terms()) {
            int var = -1;
            for (int j = 0; j < nvar; ++j) {
                if (e[j] == 1)
                    var = var < 0 ? j : -2;
                else if (e[j] != 0)
                    var = -2;
            }
            if (var < 0) throw InternalError("syzygy coefficient is not linear");
            v[gi * nvar + var] += c;
        }
    return v;
}

bool syzygy_in_span(const RollingFactorsPresentation& pres,
                    const std::vector<SyzygyVector>& basis, const SyzygyVector& s) {
    const int nvar = static_cast<int>(pres.ring->arity());
    const std::size_t dim = pres.num_gens() * nvar;
    QMatrix m(basis.size() + 1, dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto v = syzygy_to_flat(pres, basis[i]);
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = v[j];
    }
    QMatrix m0(basis.size(), dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m0.at(i, j) = m.at(i, j);
    auto v = syzygy_to_flat(pres, s);
    for (std::size_t j = 0; j < dim; ++j) m.at(basis.size(), j) = v[j];
    return m.rank() == m0.rank();
}

std::vector<Expo> monomials_of_degree(const RingPtr& ring, int q) {
    std::vector<Expo> out;
    Expo cur(ring->arity(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == ring->arity()) {
            cur[pos] = left;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    if (ring->arity() == 0) return out;
    rec(0, q);
    std::sort(out.begin(), out.end());
    return out;
}

SparseMatQ multiplication_matrix(const RollingFactorsPresentation& pres, int cofactor_degree) {
    const int ngen = pres.num_gens();
    auto monos = monomials_of_degree(pres.ring, cofactor_degree);
    const int nmono = static_cast<int>(monos.size());
    MonomialIndex rows;
    std::vector<SparseRow> cols(static_cast<std::size_t>(ngen) * nmono);
    for (int gi = 0; gi < ngen; ++gi) {
        const MPoly& gen = pres.generator(gi);
        for (int mi = 0; mi < nmono; ++mi) {
            SparseRow& col = cols[static_cast<std::size_t>(gi) * nmono + mi];
            for (const auto& [e, c] : gen.terms()) {
                Expo m = e;
                for (std::size_t t = 0; t < m.size(); ++t) m[t] += monos[mi][t];
                col.emplace_back(rows.add(m), c);
            }
        }
    }
    const int nrows = static_cast<int>(rows.index.size());
    std::vector<SparseRow> rowdata(nrows);
    for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        for (const auto& [r, c] : cols[cidx]) rowdata[r].emplace_back(static_cast<int>(cidx), c);
    SparseMatQ M(ngen * nmono);
    for (auto& r : rowdata) M.add_row(std::move(r));
    return M;
}

RelationIdentityReport verify_relation_identities(const RollingFactorsPresentation& pres) {
    RelationIdentityReport rep;
    const int n = pres.num_cols();
    const int ngen = pres.num_gens();
    const int nm = static_cast<int>(pres.minors.size());

    auto vec_eq = [&](const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
        for (int i = 0; i < ngen; ++i)
            if (a[i] != b[i]) return false;
        return true;
    };

    for (int m = 0; m < static_cast<int>(pres.rolling.size()); ++m) {
        // every rolled relation must be an exact syzygy
        for (int col = 0; col < n; ++col) {
            if (!syzygy_check(pres, rolled_syzygy(pres, col, m))) {
                rep.ok = false;
                rep.failures.push_back({col, col, m});
            }
            ++rep.checked;
        }
        for (int gamma = 0; gamma < n; ++gamma)
            for (int delta = gamma + 1; delta < n; ++delta) {
                // top_delta R_gamma - top_gamma R_delta
                //   == m(gamma,delta) e_{phi_m} - phi_m e_{m(gamma,delta)}
                //      + sum_a c_a V_top(gamma,delta,a)
                SyzygyVector Rg = rolled_syzygy(pres, gamma, m);
                SyzygyVector Rd = rolled_syzygy(pres, delta, m);
                std::vector<MPoly> lhs(ngen, MPoly(pres.ring));
                MPoly td = pres.top(delta), tg = pres.top(gamma);
                for (int i = 0; i < ngen; ++i) lhs[i] = td * Rg.coeff[i] - tg * Rd.coeff[i];

                SyzygyVector rhs_v = zero_syzygy(pres);
                const MPoly& phim = pres.phis[m];
                MPoly mgd = pres.minors[pres.minor_index(gamma, delta)];
                rhs_v.coeff[nm + m] += mgd;
                add_minor_slot(pres, rhs_v, gamma, delta, -phim);
                std::vector<MPoly> rhs = rhs_v.coeff;
                for (const auto& [a, cof] : pres.rolling[m]) {
                    if (a == gamma || a == delta) continue; // degenerate triples vanish
                    SyzygyVector V = zero_syzygy(pres);
                    add_minor_slot(pres, V, gamma, delta, pres.top(a));
                    add_minor_slot(pres, V, gamma, a, -pres.top(delta));
                    add_minor_slot(pres, V, delta, a, pres.top(gamma));
                    for (int i = 0; i < ngen; ++i)
                        if (!V.coeff[i].is_zero()) rhs[i] += cof * V.coeff[i];
                }
                ++rep.checked;
                if (!vec_eq(lhs, rhs)) {
                    rep.ok = false;
                    rep.failures.push_back({gamma, delta, m});
                }
            }
    }
    return rep;
}

} // namespace hecone

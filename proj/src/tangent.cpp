#include "hecone/tangent.hpp"

#include <algorithm>
#include <map>

#include "hecone/errors.hpp"
#include "hecone/linalg.hpp"

namespace hecone {

namespace {

// ---- curve-cone model: monomial realization of (O_X)_m for L = k g12 ----
// Basis of O_m (m >= 1): xb^(mk-i) x^i (eps=0, i=0..mk) and
// y xb^(mk-g-1-i) x^i (eps=1, i=0..mk-g-1); O_0 is the constants.
struct CurveModel {
    int g = 0, k = 0;
    std::vector<Rat> a;
    int num_z = 0, num_w = 0;

    int dim(int m) const { return m == 0 ? 1 : 2 * m * k - g + 1; }
    int index(int m, int eps, int i) const { return eps == 0 ? i : (m * k + 1) + i; }
    std::pair<int, int> unrank(int m, int id) const {
        return id <= m * k ? std::pair<int, int>{0, id}
                           : std::pair<int, int>{1, id - m * k - 1};
    }
    std::pair<int, int> coord_data(int var) const {
        return var < num_z ? std::pair<int, int>{0, var}
                           : std::pair<int, int>{1, var - num_z};
    }
    void mult(int m, int eps, int i, int var, std::vector<std::pair<int, Rat>>& out) const {
        auto [ec, ic] = coord_data(var);
        if (eps + ec <= 1) {
            out.emplace_back(index(m + 1, eps + ec, i + ic), Rat(1));
        } else {
            for (int l = 0; l <= 2 * g + 2; ++l)
                if (a[l] != 0) out.emplace_back(index(m + 1, 0, i + ic + l), a[l]);
        }
    }
    bool mu_symmetric() const {
        for (int i = 1; i <= 2 * g + 1; ++i)
            if (a[i] != 0) return false;
        return a[0] != 0 && a[2 * g + 2] != 0;
    }
    int weight_mod() const { return 2 * g + 2; }
    int weight_basis(int eps, int i) const {
        (void)eps;
        return i % weight_mod();
    }
    int weight_coord(int var) const { return coord_data(var).second % weight_mod(); }
};

// ---- points-cone model: evaluation at the d rational points ----
struct PointsModel {
    int g = 0, d = 0, nvar = 0;
    std::vector<std::vector<Rat>> val; // val[j][var] = r_j^var
};

PointsModel make_points_model(const RollingFactorsPresentation& pres) {
    if (!pres.points_xs)
        throw Unsupported("points-cone oracle needs rational roots of F");
    PointsModel pm;
    pm.g = pres.g;
    pm.d = pres.d;
    pm.nvar = pres.num_z;
    for (const auto& r : *pres.points_xs) {
        std::vector<Rat> row(pm.nvar);
        Rat p = 1;
        for (int i = 0; i < pm.nvar; ++i) {
            row[i] = p;
            p *= r;
        }
        pm.val.push_back(std::move(row));
    }
    return pm;
}

// rank of the degree-m monomial evaluations at the points (<= d rows)
long points_piece_dim(const PointsModel& pm, const RingPtr& ring, int m) {
    if (m == 0) return 1;
    auto monos = monomials_of_degree(ring, m);
    QMatrix ev(pm.d, monos.size());
    for (int j = 0; j < pm.d; ++j)
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Rat v = 1;
            for (int var = 0; var < pm.nvar; ++var)
                for (int t = 0; t < monos[c][var]; ++t) v *= pm.val[j][var];
            ev.at(j, c) = v;
        }
    return static_cast<long>(ev.rank());
}

struct AssembledSystem {
    int ncols = 0;
    std::vector<SparseRow> rows;
    std::vector<SparseRow> trivials;
    std::vector<int> block_of_col; // empty when ungraded
    int nblocks = 0;
};

long solve_t1(const AssembledSystem& sys) {
    // spot-check that trivial vectors satisfy the constraints
    auto dot_check = [&](const SparseRow& t) {
        std::vector<Rat> dense(sys.ncols, Rat(0));
        for (const auto& [c, v] : t) dense[c] = v;
        for (const auto& row : sys.rows) {
            Rat s = 0;
            for (const auto& [c, v] : row)
                if (dense[c] != 0) s += v * dense[c];
            if (s != 0) return false;
        }
        return true;
    };
    if (!sys.trivials.empty()) {
        std::vector<std::size_t> picks = {0, sys.trivials.size() / 2, sys.trivials.size() - 1};
        for (std::size_t p : picks)
            if (!dot_check(sys.trivials[p]))
                throw InternalError("trivial normal vector violates a syzygy constraint");
    }

    bool graded = !sys.block_of_col.empty();
    if (graded) {
        auto block_pure = [&](const SparseRow& r, int& blk) {
            blk = -1;
            for (const auto& [c, v] : r) {
                if (blk == -1)
                    blk = sys.block_of_col[c];
                else if (sys.block_of_col[c] != blk)
                    return false;
            }
            return true;
        };
        bool ok = true;
        for (const auto& r : sys.rows) {
            int b;
            if (!block_pure(r, b)) {
                ok = false;
                break;
            }
        }
        if (ok)
            for (const auto& t : sys.trivials) {
                int b;
                if (!block_pure(t, b)) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            // per-block column remap
            std::vector<int> col_local(sys.ncols, -1);
            std::vector<int> block_cols(sys.nblocks, 0);
            for (int c = 0; c < sys.ncols; ++c)
                col_local[c] = block_cols[sys.block_of_col[c]]++;
            long t1 = 0;
            for (int b = 0; b < sys.nblocks; ++b) {
                SparseMatQ C(block_cols[b]);
                for (const auto& r : sys.rows) {
                    if (r.empty() || sys.block_of_col[r.front().first] != b) continue;
                    SparseRow rr;
                    for (const auto& [c, v] : r) rr.emplace_back(col_local[c], v);
                    C.add_row(std::move(rr));
                }
                long nullity = C.rows() == 0 ? block_cols[b]
                                             : static_cast<long>(C.kernel_basis().size());
                SparseMatQ T(block_cols[b]);
                for (const auto& t : sys.trivials) {
                    if (t.empty() || sys.block_of_col[t.front().first] != b) continue;
                    SparseRow rr;
                    for (const auto& [c, v] : t) rr.emplace_back(col_local[c], v);
                    T.add_row(std::move(rr));
                }
                long trank = static_cast<long>(T.rank_exact());
                t1 += nullity - trank;
            }
            return t1;
        }
        // fall through to the ungraded path
    }
    SparseMatQ C(sys.ncols);
    for (const auto& r : sys.rows) C.add_row(r);
    long nullity = C.rows() == 0 ? sys.ncols : static_cast<long>(C.kernel_basis().size());
    SparseMatQ T(sys.ncols);
    for (const auto& t : sys.trivials) T.add_row(t);
    long trank = static_cast<long>(T.rank_exact());
    return nullity - trank;
}

long certified_rank(const SparseMatQ& M, long upper_bound) {
    for (std::size_t i = 0; i < 3 && i < modular_primes().size(); ++i) {
        try {
            long r = static_cast<long>(M.rank_mod_prime(modular_primes()[i]));
            if (r == upper_bound) return r; // rank_p <= rank_Q <= bound
        } catch (const BadPrime&) {
            continue;
        }
    }
    return static_cast<long>(M.rank_exact());
}

long ambient_piece_dim(const RollingFactorsPresentation& pres, int m) {
    if (pres.kind == ConeKind::Points) {
        PointsModel pm = make_points_model(pres);
        return points_piece_dim(pm, pres.ring, m);
    }
    // curve cone, L = k g12
    return m == 0 ? 1 : 2L * m * pres.k - pres.g + 1;
}

SparseRow merge_row(SparseRow r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow out;
    for (auto& [c, v] : r) {
        if (v == 0) continue;
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }),
              out.end());
    return out;
}

} // namespace

RingPiece ring_piece(const RollingFactorsPresentation& pres, int m) {
    if (m <= 0) throw Unsupported("ring_piece needs m >= 1");
    RingPiece out;
    out.m = m;
    if (pres.kind == ConeKind::Points) {
        PointsModel pm = make_points_model(pres);
        out.dim = points_piece_dim(pm, pres.ring, m);
        out.model = "point evaluations";
        long expected = std::min<long>(1L * m * (pres.d - pres.g - 1) + 1, pres.d);
        if (out.dim != expected)
            throw InternalError("points ring piece dimension disagrees with the formula");
        return out;
    }
    if (pres.kind != ConeKind::CurveKG12)
        throw Unsupported("ring_piece supports k*g12 curve cones and points cones");
    out.dim = 1L * m * pres.d - pres.g + 1;
    out.model = "monomials";
    return out;
}

std::vector<SyzygyVector> oracle_syzygies(const RollingFactorsPresentation& pres) {
    auto hand = hand_syzygies(pres);
    for (const auto& s : hand)
        if (!syzygy_check(pres, s)) throw InternalError("hand syzygy fails exact check");

    const int nvar = static_cast<int>(pres.ring->arity());
    const long cols3 = static_cast<long>(pres.num_gens()) * nvar;
    SparseMatQ mult3 = multiplication_matrix(pres, 1);
    long r3 = static_cast<long>(nvar + 2) * (nvar + 1) * nvar / 6; // C(nvar+2,3)
    long bound = r3 - ambient_piece_dim(pres, 3);
    long rank3 = certified_rank(mult3, bound);
    long K = cols3 - rank3;

    SparseMatQ handmat(static_cast<int>(cols3));
    for (const auto& s : hand) {
        auto flat = syzygy_to_flat(pres, s);
        SparseRow row;
        for (long c = 0; c < cols3; ++c)
            if (flat[c] != 0) row.emplace_back(static_cast<int>(c), flat[c]);
        handmat.add_row(std::move(row));
    }
    if (certified_rank(handmat, K) == K) return hand;
    return syzygy_basis(pres);
}

long t1_oracle(const RollingFactorsPresentation& pres, int nu) {
    const int m_lo = 2 + nu;
    if (m_lo < 0) return 0;
    if (pres.kind == ConeKind::CurveGeneral)
        throw Unsupported("t1_oracle supports k*g12 curve cones and points cones");
    if (pres.kind == ConeKind::Points) return t1_oracle_points_extra(pres, nu, {});

    auto syz = oracle_syzygies(pres);
    const int ngen = pres.num_gens();
    const int nvar = static_cast<int>(pres.ring->arity());
    std::vector<std::vector<Rat>> flat;
    flat.reserve(syz.size());
    for (const auto& s : syz) flat.push_back(syzygy_to_flat(pres, s));

    AssembledSystem sys;

    {
        CurveModel M{pres.g, pres.k, pres.curve.a, pres.num_z, pres.num_w};
        const int dlo = M.dim(m_lo);
        sys.ncols = ngen * dlo;
        auto col_id = [&](int alpha, int beta) { return alpha * dlo + beta; };

        std::vector<std::pair<int, Rat>> prods;
        for (std::size_t si = 0; si < flat.size(); ++si) {
            std::map<int, SparseRow> rows_for_syz;
            for (int alpha = 0; alpha < ngen; ++alpha)
                for (int v = 0; v < nvar; ++v) {
                    const Rat& cf = flat[si][alpha * nvar + v];
                    if (cf == 0) continue;
                    for (int beta = 0; beta < dlo; ++beta) {
                        auto [eps, i] = M.unrank(m_lo, beta);
                        prods.clear();
                        M.mult(m_lo, eps, i, v, prods);
                        for (const auto& [tau, c] : prods)
                            rows_for_syz[tau].emplace_back(col_id(alpha, beta), cf * c);
                    }
                }
            for (auto& [tau, row] : rows_for_syz) {
                SparseRow merged = merge_row(std::move(row));
                if (!merged.empty()) sys.rows.push_back(std::move(merged));
            }
        }

        // trivial normal vectors h * d/dx_c, h over a basis of O_(nu+1)
        const int mh = nu + 1;
        if (mh >= 0) {
            std::vector<std::vector<std::pair<int, Rat>>> deriv(ngen * nvar);
            for (int alpha = 0; alpha < ngen; ++alpha)
                for (int c = 0; c < nvar; ++c) {
                    MPoly dg = pres.generator(alpha).derivative(c);
                    auto f = dg; // linear form in coordinates
                    std::vector<std::pair<int, Rat>>& entry = deriv[alpha * nvar + c];
                    for (const auto& [e, cc] : f.terms()) {
                        for (int u = 0; u < nvar; ++u)
                            if (e[u] == 1) entry.emplace_back(u, cc);
                    }
                }
            for (int hb = 0; hb < M.dim(mh); ++hb) {
                auto [heps, hi] = M.unrank(mh, hb);
                for (int c = 0; c < nvar; ++c) {
                    SparseRow t;
                    for (int alpha = 0; alpha < ngen; ++alpha) {
                        for (const auto& [u, cc] : deriv[alpha * nvar + c]) {
                            prods.clear();
                            M.mult(mh, heps, hi, u, prods);
                            for (const auto& [tau, cv] : prods)
                                t.emplace_back(col_id(alpha, tau), cc * cv);
                        }
                    }
                    t = merge_row(std::move(t));
                    if (!t.empty()) sys.trivials.push_back(std::move(t));
                }
            }
        }

        if (M.mu_symmetric()) {
            // Z/(2g+2) torus weights: unknown (alpha, beta) sits in the block
            // wt(beta) - wt(alpha) mod 2g+2
            const int Mod = M.weight_mod();
            std::vector<int> gen_wt(ngen, -1);
            bool graded = true;
            for (int alpha = 0; alpha < ngen && graded; ++alpha) {
                for (const auto& [e, cc] : pres.generator(alpha).terms()) {
                    int w = 0;
                    for (int v = 0; v < nvar; ++v) w += e[v] * M.weight_coord(v);
                    w %= Mod;
                    if (gen_wt[alpha] < 0)
                        gen_wt[alpha] = w;
                    else if (gen_wt[alpha] != w)
                        graded = false;
                }
            }
            if (graded) {
                sys.nblocks = Mod;
                sys.block_of_col.assign(sys.ncols, 0);
                for (int alpha = 0; alpha < ngen; ++alpha)
                    for (int beta = 0; beta < dlo; ++beta) {
                        auto [eps, i] = M.unrank(m_lo, beta);
                        int chi = (M.weight_basis(eps, i) - gen_wt[alpha]) % Mod;
                        if (chi < 0) chi += Mod;
                        sys.block_of_col[col_id(alpha, beta)] = chi;
                    }
            }
        }
        return solve_t1(sys);
    }
}

long t1_oracle_points_extra(const RollingFactorsPresentation& pres, int nu,
                            const std::vector<SyzygyVector>& extra) {
    const int m_lo = 2 + nu;
    if (m_lo < 0) return 0;
    if (pres.kind != ConeKind::Points)
        throw Unsupported("t1_oracle_points_extra needs a points cone");

    auto syz = oracle_syzygies(pres);
    const int ngen = pres.num_gens();
    const int nvar = static_cast<int>(pres.ring->arity());
    std::vector<std::vector<Rat>> flat;
    flat.reserve(syz.size());
    for (const auto& s : syz) flat.push_back(syzygy_to_flat(pres, s));

    AssembledSystem sys;
    PointsModel pm = make_points_model(pres);
    const int d = pm.d;
    // evaluation of every generator derivative at every point
    std::vector<std::vector<Rat>> dval(ngen * nvar, std::vector<Rat>(d, Rat(0)));
    for (int alpha = 0; alpha < ngen; ++alpha)
        for (int c = 0; c < nvar; ++c) {
            MPoly dg = pres.generator(alpha).derivative(c);
            for (int j = 0; j < d; ++j) {
                Rat s = 0;
                for (const auto& [e, cc] : dg.terms())
                    for (int u = 0; u < nvar; ++u)
                        if (e[u] == 1) s += cc * pm.val[j][u];
                dval[alpha * nvar + c][j] = s;
            }
        }

    auto coeff_at_point = [&](const MPoly& p, int j) { return p.eval(pm.val[j]); };

    if (m_lo == 0) {
        sys.ncols = ngen;
        for (const auto& f : flat)
            for (int j = 0; j < d; ++j) {
                SparseRow row;
                for (int alpha = 0; alpha < ngen; ++alpha) {
                    Rat s = 0;
                    for (int v = 0; v < nvar; ++v)
                        if (f[alpha * nvar + v] != 0) s += f[alpha * nvar + v] * pm.val[j][v];
                    if (s != 0) row.emplace_back(alpha, s);
                }
                if (!row.empty()) sys.rows.push_back(std::move(row));
            }
        for (const auto& s : extra)
            for (int j = 0; j < d; ++j) {
                SparseRow row;
                for (int alpha = 0; alpha < ngen; ++alpha) {
                    Rat v = coeff_at_point(s.coeff[alpha], j);
                    if (v != 0) row.emplace_back(alpha, v);
                }
                if (!row.empty()) sys.rows.push_back(std::move(row));
            }
        return solve_t1(sys);
    }

    sys.ncols = ngen * d;
    auto col_id = [&](int alpha, int j) { return alpha * d + j; };
    for (const auto& f : flat)
        for (int j = 0; j < d; ++j) {
            SparseRow row;
            for (int alpha = 0; alpha < ngen; ++alpha) {
                Rat s = 0;
                for (int v = 0; v < nvar; ++v)
                    if (f[alpha * nvar + v] != 0) s += f[alpha * nvar + v] * pm.val[j][v];
                if (s != 0) row.emplace_back(col_id(alpha, j), s);
            }
            if (!row.empty()) sys.rows.push_back(std::move(row));
        }
    for (const auto& s : extra)
        for (int j = 0; j < d; ++j) {
            SparseRow row;
            for (int alpha = 0; alpha < ngen; ++alpha) {
                Rat v = coeff_at_point(s.coeff[alpha], j);
                if (v != 0) row.emplace_back(col_id(alpha, j), v);
            }
            if (!row.empty()) sys.rows.push_back(std::move(row));
        }

    if (m_lo == 1) {
        // membership of each n_alpha in O_1 = span of the coordinate evaluations
        QMatrix A(nvar, d);
        for (int v = 0; v < nvar; ++v)
            for (int j = 0; j < d; ++j) A.at(v, j) = pm.val[j][v];
        auto lnull = A.kernel_basis();
        if (static_cast<int>(lnull.size()) != pm.g)
            throw InternalError("points O_1 has unexpected codimension");
        for (int alpha = 0; alpha < ngen; ++alpha)
            for (const auto& ell : lnull) {
                SparseRow row;
                for (int j = 0; j < d; ++j)
                    if (ell[j] != 0) row.emplace_back(col_id(alpha, j), ell[j]);
                sys.rows.push_back(std::move(row));
            }
    } else {
        // O_(2+nu) with 2+nu >= 2 is all of Q^d; certify once
        if (points_piece_dim(pm, pres.ring, m_lo) != d)
            throw InternalError("points ring piece is not the full evaluation space");
    }

    const int mh = nu + 1;
    if (mh == 0) {
        for (int c = 0; c < nvar; ++c) {
            SparseRow t;
            for (int alpha = 0; alpha < ngen; ++alpha)
                for (int j = 0; j < d; ++j) {
                    const Rat& v = dval[alpha * nvar + c][j];
                    if (v != 0) t.emplace_back(col_id(alpha, j), v);
                }
            if (!t.empty()) sys.trivials.push_back(std::move(t));
        }
    } else if (mh == 1) {
        for (int b = 0; b < nvar; ++b)
            for (int c = 0; c < nvar; ++c) {
                SparseRow t;
                for (int alpha = 0; alpha < ngen; ++alpha)
                    for (int j = 0; j < d; ++j) {
                        Rat v = pm.val[j][b] * dval[alpha * nvar + c][j];
                        if (v != 0) t.emplace_back(col_id(alpha, j), v);
                    }
                if (!t.empty()) sys.trivials.push_back(std::move(t));
            }
    } else if (mh >= 2) {
        for (int j0 = 0; j0 < d; ++j0)
            for (int c = 0; c < nvar; ++c) {
                SparseRow t;
                for (int alpha = 0; alpha < ngen; ++alpha) {
                    const Rat& v = dval[alpha * nvar + c][j0];
                    if (v != 0) t.emplace_back(col_id(alpha, j0), v);
                }
                if (!t.empty()) sys.trivials.push_back(std::move(t));
            }
    }
    return solve_t1(sys);
}

DimTable t1_formula(int g, int d, ConeShape shape) {
    DimTable t;
    if (shape == ConeShape::Curve) {
        if (d <= 2 * g + 2) throw Unsupported("curve T1 formula needs d > 2g+2");
        if (d <= 4 * g - 4) throw Unsupported("T1(1) is unknown in this range (d <= 4g-4)");
        for (int nu = -3; nu <= 1; ++nu) {
            long v = 0;
            // moduli of the pair (curve, line bundle): (3g-3) + g
            if (nu == 0) v = 4L * g - 3;
            if (nu == -1) v = 2L * g + 2;
            t.dims[nu] = v;
        }
        return t;
    }
    if (d <= 2 * g + 2) throw Unsupported("points T1 formula needs 2g+2 < d < 2(d-g-1)");
    for (int nu = -3; nu <= 1; ++nu) {
        long v = 0;
        if (nu == 0) v = 1L * (g - 1) * (d - g - 1);
        if (nu == -1) v = d;
        t.dims[nu] = v;
    }
    return t;
}

long t2_dim(int g, int d, int nu) {
    if (d <= 2 * g + 3) throw Unsupported("T2 formula needs d > 2g+3");
    if (nu == -2) return d - 2L * g - 3;
    if (nu == -1) return 1L * (g - 2) * (d - g - 3);
    return 0;
}

DimTable t2_formula(int g, int d) {
    DimTable t;
    for (int nu = -3; nu <= 1; ++nu) t.dims[nu] = t2_dim(g, d, nu);
    return t;
}

long t2_via_main_lemma(int g, int d, long t1Y_total) {
    long e = 3L * g + d - 2;
    long r = t1Y_total - e;
    if (r < 0) throw InternalError("Main Lemma route yields a negative dimension");
    return r;
}

SmoothingDim smoothing_component_dim(int g, int d) {
    SmoothingDim s;
    s.dim = 7L * g + 4 - d;
    s.correction_may_apply = (d <= 4 * g - 4);
    long lower = std::max(4 * g - 4, 3 * g + 6);
    s.covers_all_components = (g == 6) ? (d > 25) : (d > lower);
    return s;
}

bool syzygies_generate_in_degree4(const RollingFactorsPresentation& pres,
                                  const std::vector<SyzygyVector>& syz3) {
    const int nvar = static_cast<int>(pres.ring->arity());
    const int ngen = pres.num_gens();
    auto monos2 = monomials_of_degree(pres.ring, 2);
    std::map<Expo, int> mono_id;
    for (std::size_t i = 0; i < monos2.size(); ++i) mono_id.emplace(monos2[i], static_cast<int>(i));
    const long cols = static_cast<long>(ngen) * monos2.size();

    SparseMatQ mult4 = multiplication_matrix(pres, 2);
    long r4 = 1;
    for (int t = 0; t < 4; ++t) r4 = r4 * (nvar + 3 - t);
    r4 /= 24; // C(nvar+3, 4)
    long bound = r4 - ambient_piece_dim(pres, 4);
    long rank4 = certified_rank(mult4, bound);
    long nullity4 = cols - rank4;

    SparseMatQ family(static_cast<int>(cols));
    for (const auto& s : syz3) {
        auto f = syzygy_to_flat(pres, s);
        for (int c = 0; c < nvar; ++c) {
            SparseRow row;
            for (int alpha = 0; alpha < ngen; ++alpha)
                for (int v = 0; v < nvar; ++v) {
                    const Rat& cf = f[alpha * nvar + v];
                    if (cf == 0) continue;
                    Expo e(nvar, 0);
                    e[v] += 1;
                    e[c] += 1;
                    row.emplace_back(alpha * static_cast<int>(monos2.size()) + mono_id.at(e), cf);
                }
            family.add_row(std::move(row));
        }
    }
    return certified_rank(family, nullity4) == nullity4;
}

} // namespace hecone

#include "hecone/snf.hpp"

#include <algorithm>

#include "hecone/errors.hpp"

namespace hecone {

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::operator*(const ZMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
    ZMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Int ZMatrix::determinant() const {
    if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
    std::vector<std::vector<Int>> a(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < rows_; ++k) {
        std::size_t piv = k;
        while (piv < rows_ && a[piv][k] == 0) ++piv;
        if (piv == rows_) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i) {
            for (std::size_t j = k + 1; j < cols_; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[rows_ - 1][cols_ - 1] : Int(-a[rows_ - 1][cols_ - 1]);
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) != 0) out.push_back(D.at(i, i));
    return out;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

SmithResult smith_normal_form(const ZMatrix& A) {
    const std::size_t rows = A.rows(), cols = A.cols();
    SmithResult res{A, ZMatrix::identity(rows), ZMatrix::identity(cols)};
    ZMatrix& D = res.D;
    ZMatrix& U = res.U;
    ZMatrix& V = res.V;

    auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // row_i -= q * row_j
        for (std::size_t c = 0; c < cols; ++c) D.at(i, c) -= q * D.at(j, c);
        for (std::size_t c = 0; c < rows; ++c) U.at(i, c) -= q * U.at(j, c);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
        // col_i -= q * col_j
        for (std::size_t r = 0; r < rows; ++r) D.at(r, i) -= q * D.at(r, j);
        for (std::size_t r = 0; r < cols; ++r) V.at(r, i) -= q * V.at(r, j);
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(V.at(r, i), V.at(r, j));
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero |entry| in the remaining block
        std::size_t pi = rows, pj = cols;
        Int best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (D.at(i, j) == 0) continue;
                Int a = int_abs(D.at(i, j));
                if (pi == rows || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break; // block is zero
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                row_op(i, t, q);
                if (D.at(i, t) != 0) {
                    swap_rows(i, t);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                col_op(j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(j, t);
                    clean = false;
                }
            }
        }
        // enforce divisibility d_t | D[i][j] on the rest of the block
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j) {
                if (D.at(i, j) % D.at(t, t) != 0) {
                    row_op(t, i, Int(-1)); // adds row i to row t
                    redo = true;
                }
            }
        if (redo) continue;
        if (D.at(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) D.at(t, c) = -D.at(t, c);
            for (std::size_t c = 0; c < rows; ++c) U.at(t, c) = -U.at(t, c);
        }
        ++t;
    }
    return res;
}

} // namespace hecone

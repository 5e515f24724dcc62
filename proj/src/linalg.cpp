#include "hecone/linalg.hpp"

#include <algorithm>
#include <map>

#include "hecone/errors.hpp"
#include "hecone/fp.hpp"

namespace hecone {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw InternalError("apply: size mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Fraction-free echelon form.  Rows are integer-rescaled up front; the
// Bareiss update keeps every intermediate entry a minor of the original
// matrix.  Returns pivot (row, col) pairs; the echelon matrix is left in a.
struct BareissResult {
    std::vector<std::vector<Int>> a;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

BareissResult bareiss_echelon(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    BareissResult res;
    res.a.assign(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rat> row(cols);
        for (std::size_t j = 0; j < cols; ++j) row[j] = m.at(i, j);
        Int l = denominator_lcm(row);
        for (std::size_t j = 0; j < cols; ++j) res.a[i][j] = row[j].get_num() * (l / row[j].get_den());
    }
    auto& a = res.a;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        std::size_t best_size = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            std::size_t sz = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
            if (piv == rows || sz < best_size) {
                piv = i;
                best_size = sz;
            }
        }
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        res.pivots.emplace_back(r, col);
        ++r;
    }
    return res;
}

} // namespace

std::size_t QMatrix::rank() const {
    return bareiss_echelon(*this).pivots.size();
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
    BareissResult ech = bareiss_echelon(*this);
    std::vector<bool> is_pivot_col(cols_, false);
    for (auto [r, c] : ech.pivots) is_pivot_col[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[f] = 1;
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            auto [r, c] = *it;
            Rat s = 0;
            for (std::size_t j = c + 1; j < cols_; ++j)
                if (ech.a[r][j] != 0 && v[j] != 0) s += Rat(ech.a[r][j]) * v[j];
            v[c] = -s / Rat(ech.a[r][c]);
        }
        auto prim = primitive_integer_vector(v);
        std::vector<Rat> w(cols_);
        for (std::size_t j = 0; j < cols_; ++j) w[j] = Rat(prim[j]);
        basis.push_back(std::move(w));
    }
    return basis;
}

void SparseMatQ::add_row(SparseRow r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& [c, v] : r) {
        if (v == 0) continue;
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second == 0; }),
                 merged.end());
    rows_.push_back(std::move(merged));
}

namespace {

// row -= factor * basis   (sparse merge; both sorted by column)
SparseRow sparse_axpy(const SparseRow& row, const Rat& factor, const SparseRow& basis) {
    SparseRow out;
    out.reserve(row.size() + basis.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < basis.size()) {
        if (j == basis.size() || (i < row.size() && row[i].first < basis[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || basis[j].first < row[i].first) {
            out.emplace_back(basis[j].first, -factor * basis[j].second);
            ++j;
        } else {
            Rat v = row[i].second - factor * basis[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct SparseEchelon {
    std::map<int, SparseRow> basis; // pivot col -> monic reduced row

    // Returns true when the row added a new pivot.
    bool absorb(SparseRow row) {
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = basis.find(lead);
            if (it == basis.end()) {
                Rat inv = Rat(1) / row.front().second;
                for (auto& [c, v] : row) v *= inv;
                basis.emplace(lead, std::move(row));
                return true;
            }
            row = sparse_axpy(row, row.front().second, it->second);
        }
        return false;
    }

    // Back-substitution: clears pivot columns from every basis row so each
    // row touches only its own pivot plus free columns.  Rows are processed
    // in decreasing pivot order; entries sit strictly right of the row's
    // own pivot, so one pass per row suffices.
    void fully_reduce() {
        for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
            SparseRow& row = it->second;
            std::vector<std::pair<int, Rat>> to_clear;
            for (const auto& [c, v] : row)
                if (c != it->first && basis.count(c)) to_clear.emplace_back(c, v);
            for (const auto& [c, v] : to_clear) row = sparse_axpy(row, v, basis.at(c));
        }
    }
};

} // namespace

std::size_t SparseMatQ::rank_exact() const {
    SparseEchelon ech;
    for (const auto& r : rows_) ech.absorb(r);
    return ech.basis.size();
}

std::vector<std::vector<Rat>> SparseMatQ::kernel_basis_exact() const {
    SparseEchelon ech;
    for (const auto& r : rows_) ech.absorb(r);
    ech.fully_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [c, row] : ech.basis) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[f] = 1;
        for (const auto& [pc, row] : ech.basis) {
            for (const auto& [c, val] : row)
                if (c == f) v[pc] = -val;
        }
        auto prim = primitive_integer_vector(v);
        std::vector<Rat> w(cols_);
        for (int j = 0; j < cols_; ++j) w[j] = Rat(prim[j]);
        out.push_back(std::move(w));
    }
    return out;
}

bool SparseMatQ::multiplies_to_zero(const std::vector<Rat>& v) const {
    for (const auto& row : rows_) {
        Rat s = 0;
        for (const auto& [c, val] : row)
            if (v[c] != 0) s += val * v[c];
        if (s != 0) return false;
    }
    return true;
}

namespace {

struct FpEchelon {
    const FpContext& F;
    std::map<int, std::vector<std::pair<int, std::uint64_t>>> basis;

    explicit FpEchelon(const FpContext& ctx) : F(ctx) {}

    void absorb(std::vector<std::pair<int, std::uint64_t>> row) {
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = basis.find(lead);
            if (it == basis.end()) {
                std::uint64_t inv = F.inv(row.front().second);
                for (auto& [c, v] : row) v = F.mul(v, inv);
                basis.emplace(lead, std::move(row));
                return;
            }
            // row -= lead_coeff * basis
            std::uint64_t f = row.front().second;
            const auto& b = it->second;
            std::vector<std::pair<int, std::uint64_t>> out;
            out.reserve(row.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < b.size()) {
                if (j == b.size() || (i < row.size() && row[i].first < b[j].first)) {
                    out.push_back(row[i++]);
                } else if (i == row.size() || b[j].first < row[i].first) {
                    out.emplace_back(b[j].first, F.neg(F.mul(f, b[j].second)));
                    ++j;
                } else {
                    std::uint64_t v = F.sub(row[i].second, F.mul(f, b[j].second));
                    if (v) out.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(out);
        }
    }

    void fully_reduce() {
        for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
            auto& row = it->second;
            std::vector<std::pair<int, std::uint64_t>> to_clear;
            for (const auto& [c, v] : row)
                if (c != it->first && basis.count(c)) to_clear.emplace_back(c, v);
            for (const auto& [c, f] : to_clear) {
                const auto& b = basis.at(c);
                std::vector<std::pair<int, std::uint64_t>> out;
                out.reserve(row.size() + b.size());
                std::size_t i = 0, j = 0;
                while (i < row.size() || j < b.size()) {
                    if (j == b.size() || (i < row.size() && row[i].first < b[j].first)) {
                        out.push_back(row[i++]);
                    } else if (i == row.size() || b[j].first < row[i].first) {
                        out.emplace_back(b[j].first, F.neg(F.mul(f, b[j].second)));
                        ++j;
                    } else {
                        std::uint64_t v2 = F.sub(row[i].second, F.mul(f, b[j].second));
                        if (v2) out.emplace_back(row[i].first, v2);
                        ++i;
                        ++j;
                    }
                }
                row = std::move(out);
            }
        }
    }
};

bool rows_mod_p(const std::vector<SparseRow>& rows, const FpContext& F,
                std::vector<std::vector<std::pair<int, std::uint64_t>>>& out) {
    out.clear();
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::pair<int, std::uint64_t>> fr;
        fr.reserve(r.size());
        for (const auto& [c, v] : r) {
            std::uint64_t u;
            if (!F.from_rat(v, u)) return false;
            if (u) fr.emplace_back(c, u);
        }
        out.push_back(std::move(fr));
    }
    return true;
}

} // namespace

std::size_t SparseMatQ::rank_mod_prime(std::uint64_t p) const {
    FpContext F(p);
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    if (!rows_mod_p(rows_, F, rows)) throw BadPrime("denominator vanishes mod p");
    FpEchelon ech(F);
    for (auto& r : rows) ech.absorb(std::move(r));
    return ech.basis.size();
}

std::size_t SparseMatQ::rank() const {
    return rank_exact();
}

const std::vector<std::uint64_t>& modular_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> ps;
        std::uint64_t c = (1ull << 62) - 1;
        while (ps.size() < 48) {
            if (is_prime_u64(c)) ps.push_back(c);
            --c;
        }
        return ps;
    }();
    return primes;
}

bool rational_reconstruct(const Int& r0_in, const Int& m, Rat& out) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
    Int r0 = m, r1 = r0_in % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    Int den = t1, num = r1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    out = Rat(num) / Rat(den);
    return true;
}

std::vector<std::vector<Rat>> SparseMatQ::kernel_basis() const {
    // Exact elimination is fine for moderate systems.
    std::size_t cells = rows_.size() * static_cast<std::size_t>(cols_);
    if (cols_ <= 160 || cells <= 80000) return kernel_basis_exact();

    // Modular path: kernel mod p with CRT lifting.  Every reconstructed
    // vector is verified exactly, and rank_p <= rank_Q certifies the count.
    const auto& primes = modular_primes();
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    // entries[v][pivot index] accumulated by CRT
    std::vector<std::vector<Int>> acc;
    Int modulus = 1;
    bool have_structure = false;
    std::size_t best_rank = 0;

    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        FpContext F(primes[pi]);
        std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
        if (!rows_mod_p(rows_, F, rows)) continue;
        FpEchelon ech(F);
        for (auto& r : rows) ech.absorb(std::move(r));
        if (have_structure && ech.basis.size() < best_rank) continue; // unlucky prime
        std::vector<int> pcols;
        for (const auto& [c, row] : ech.basis) pcols.push_back(c);
        if (!have_structure || ech.basis.size() > best_rank || pcols != pivot_cols) {
            // (re)start accumulation on this pivot structure
            pivot_cols = pcols;
            best_rank = ech.basis.size();
            free_cols.clear();
            std::vector<bool> is_pivot(cols_, false);
            for (int c : pivot_cols) is_pivot[c] = true;
            for (int c = 0; c < cols_; ++c)
                if (!is_pivot[c]) free_cols.push_back(c);
            acc.assign(free_cols.size(), std::vector<Int>(pivot_cols.size(), Int(0)));
            modulus = 1;
            have_structure = true;
        }
        ech.fully_reduce();
        // CRT-merge this prime's kernel into acc
        Int p(static_cast<unsigned long>(F.p));
        Int newmod = modulus * p;
        for (std::size_t vi = 0; vi < free_cols.size(); ++vi) {
            int f = free_cols[vi];
            std::size_t ri = 0;
            for (const auto& [pc, row] : ech.basis) {
                std::uint64_t entry = 0;
                for (const auto& [c, v] : row)
                    if (c == f) entry = v;
                Int val(static_cast<unsigned long>(F.neg(entry)));
                if (modulus == 1) {
                    acc[vi][ri] = val;
                } else {
                    // combine acc (mod modulus) with val (mod p)
                    Int minv;
                    Int mm = modulus % p;
                    mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
                    Int diff = ((val - acc[vi][ri]) % p + p) % p;
                    acc[vi][ri] = acc[vi][ri] + modulus * ((diff * minv) % p);
                }
                ++ri;
            }
        }
        modulus = newmod;

        // try reconstruction + exact verification
        std::vector<std::vector<Rat>> cand;
        bool ok = true;
        for (std::size_t vi = 0; vi < free_cols.size() && ok; ++vi) {
            std::vector<Rat> v(cols_, Rat(0));
            v[free_cols[vi]] = 1;
            for (std::size_t ri = 0; ri < pivot_cols.size() && ok; ++ri) {
                Rat r;
                if (!rational_reconstruct(acc[vi][ri], modulus, r))
                    ok = false;
                else
                    v[pivot_cols[ri]] = r;
            }
            if (ok) cand.push_back(std::move(v));
        }
        if (ok) {
            for (const auto& v : cand)
                if (!multiplies_to_zero(v)) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            std::vector<std::vector<Rat>> out;
            for (auto& v : cand) {
                auto prim = primitive_integer_vector(v);
                std::vector<Rat> w(cols_);
                for (int j = 0; j < cols_; ++j) w[j] = Rat(prim[j]);
                out.push_back(std::move(w));
            }
            return out;
        }
    }
    return kernel_basis_exact();
}

} // namespace hecone

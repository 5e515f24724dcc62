#ifndef HECONE_LINALG_HPP
#define HECONE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "hecone/rat.hpp"

namespace hecone {

// Dense rational matrix.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static QMatrix identity(std::size_t n);
    QMatrix transpose() const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const; // M v

    // Rank over Q by fraction-free (Bareiss) elimination on an integer
    // rescaling of the rows.
    std::size_t rank() const;

    // Basis of the right null space; size = cols - rank.  Vectors are
    // returned as primitive integer vectors (denominators cleared).
    std::vector<std::vector<Rat>> kernel_basis() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rat>>;

// Sparse rational matrix given by rows; used for the larger graded systems.
class SparseMatQ {
public:
    explicit SparseMatQ(int cols) : cols_(cols) {}
    int cols() const { return cols_; }
    std::size_t rows() const { return rows_.size(); }
    void add_row(SparseRow r);
    const std::vector<SparseRow>& row_list() const { return rows_; }

    std::size_t rank() const;

    // Right null space, certified over Q.  Tries modular elimination with
    // rational reconstruction first (every candidate vector is verified
    // exactly; the count is certified by the mod-p rank bound), and falls
    // back to exact sparse elimination.
    std::vector<std::vector<Rat>> kernel_basis() const;

    // Exact sparse Gaussian elimination (no modular shortcut).
    std::size_t rank_exact() const;
    std::vector<std::vector<Rat>> kernel_basis_exact() const;

    // Lower bound rank computed modulo a 62-bit prime (rank_p <= rank_Q).
    std::size_t rank_mod_prime(std::uint64_t p) const;

    bool multiplies_to_zero(const std::vector<Rat>& v) const;

private:
    int cols_;
    std::vector<SparseRow> rows_;
};

// Rational reconstruction of r mod m: finds p/q with |p|, q <= sqrt(m/2)
// and p = q*r (mod m).  Returns false when no such pair exists.
bool rational_reconstruct(const Int& r, const Int& m, Rat& out);

// Deterministic list of 62-bit primes used by the modular paths.
const std::vector<std::uint64_t>& modular_primes();

} // namespace hecone

#endif

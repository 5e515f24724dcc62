#ifndef HECONE_SNF_HPP
#define HECONE_SNF_HPP

#include <cstddef>
#include <vector>

#include "hecone/rat.hpp"

namespace hecone {

// Dense integer matrix.
class ZMatrix {
public:
    ZMatrix() : rows_(0), cols_(0) {}
    ZMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static ZMatrix identity(std::size_t n);
    ZMatrix operator*(const ZMatrix& o) const;
    bool operator==(const ZMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Int determinant() const; // fraction-free; square matrices only

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithResult {
    ZMatrix D; // diagonal, d1 | d2 | ...
    ZMatrix U; // unimodular, rows x rows
    ZMatrix V; // unimodular, cols x cols
    std::vector<Int> invariant_factors() const; // nonzero diagonal entries
};

// U * A * V = D with the divisibility chain on the diagonal.
SmithResult smith_normal_form(const ZMatrix& A);

} // namespace hecone

#endif

#ifndef HECONE_FP_HPP
#define HECONE_FP_HPP

#include <cstdint>
#include <vector>

#include "hecone/rat.hpp"

namespace hecone {

// Arithmetic in Z/p for a prime p < 2^62.
struct FpContext {
    std::uint64_t p;

    explicit FpContext(std::uint64_t prime);

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t from_int(const Int& z) const;
    // Reduces a rational; fails (returns false) when the denominator is 0 mod p.
    bool from_rat(const Rat& r, std::uint64_t& out) const;
};

bool is_prime_u64(std::uint64_t n);

// Dense matrix over F_p.
class FpMatrix {
public:
    FpMatrix(const FpContext& ctx, std::size_t rows, std::size_t cols)
        : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const; // in-place Gaussian elimination on a copy

private:
    FpContext ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

} // namespace hecone

#endif

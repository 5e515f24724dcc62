#include "hecone/fp.hpp"

#include "hecone/errors.hpp"

namespace hecone {

FpContext::FpContext(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime)) throw BadPrime("modulus " + std::to_string(prime) + " is not prime");
}

std::uint64_t FpContext::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t FpContext::inv(std::uint64_t a) const {
    if (a % p == 0) throw InternalError("division by zero mod p");
    return pow(a, p - 2);
}

std::uint64_t FpContext::from_int(const Int& z) const {
    Int m = z % Int(static_cast<unsigned long>(p));
    if (m < 0) m += Int(static_cast<unsigned long>(p));
    return m.get_ui();
}

bool FpContext::from_rat(const Rat& r, std::uint64_t& out) const {
    std::uint64_t den = from_int(Int(r.get_den()));
    if (den == 0) return false;
    out = mul(from_int(Int(r.get_num())), inv(den));
    return true;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::size_t FpMatrix::rank() const {
    std::vector<std::uint64_t> a = data_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && a[piv * cols_ + col] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[rank * cols_ + j]);
        std::uint64_t inv = ctx_.inv(a[rank * cols_ + col]);
        for (std::size_t j = col; j < cols_; ++j) a[rank * cols_ + j] = ctx_.mul(a[rank * cols_ + j], inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            std::uint64_t f = a[i * cols_ + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                a[i * cols_ + j] = ctx_.sub(a[i * cols_ + j], ctx_.mul(f, a[rank * cols_ + j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace hecone

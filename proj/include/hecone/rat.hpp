#ifndef HECONE_RAT_HPP
#define HECONE_RAT_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace hecone {

// Exact rational scalar.  mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
Rat rat_from_string(const std::string& s);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// lcm of denominators; 1 for an empty range.
Int denominator_lcm(const std::vector<Rat>& v);

// Divides a vector of integers by its gcd and flips signs so the first
// nonzero entry is positive.  All-zero input is returned unchanged.
void make_primitive(std::vector<Int>& v);

// Clears denominators of a rational vector into a primitive integer vector.
std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v);

} // namespace hecone

#endif

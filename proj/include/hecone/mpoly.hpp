#ifndef HECONE_MPOLY_HPP
#define HECONE_MPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecone/rat.hpp"

namespace hecone {

// Variable table shared by all polynomials of one ambient ring.
struct PolyRing {
    std::vector<std::string> vars;

    explicit PolyRing(std::vector<std::string> names) : vars(std::move(names)) {}
    std::size_t arity() const { return vars.size(); }
    int index_of(const std::string& name) const; // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

// Dense exponent vector, one entry per ring variable.
using Expo = std::vector<int>;

// Sparse multivariate polynomial over the rationals.  Terms are kept in a
// map ordered lexicographically on the exponent vector; zero coefficients
// are never stored.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MPoly(RingPtr ring, const Rat& c); // constant polynomial

    static MPoly variable(const RingPtr& ring, int var, int power = 1);
    static MPoly monomial(const RingPtr& ring, Expo e, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(int n) const;
    MPoly derivative(int var) const;

    int degree() const;            // total degree, -1 for 0
    int degree_in(int var) const;  // -1 for 0
    bool is_homogeneous(int deg) const;

    // Substitute polynomials for every variable; values live in `target`.
    MPoly substitute(const RingPtr& target, const std::vector<MPoly>& images) const;

    // Evaluate at a rational point.
    Rat eval(const std::vector<Rat>& point) const;

    // Coefficient of var^k, viewed as polynomial in the remaining variables.
    MPoly coefficient_of(int var, int k) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::map<Expo, Rat> terms_;
};

// Replaces y^2 by F wherever the y-degree exceeds 1.  F must not involve y.
// Idempotent; the result has y-degree <= 1 and is congruent to the input
// modulo (y^2 - F).
MPoly reduce_y2(const MPoly& p, int y_var, const MPoly& F);

} // namespace hecone

#endif

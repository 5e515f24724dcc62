#include "hecone/rat.hpp"

#include "hecone/errors.hpp"

namespace hecone {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad rational literal '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int denominator_lcm(const std::vector<Rat>& v) {
    Int l = 1;
    for (const auto& r : v) {
        Int d = r.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    int lead_sign = 0;
    for (auto& x : v) {
        x /= g;
        if (lead_sign == 0 && x != 0) lead_sign = sgn(x);
    }
    if (lead_sign < 0)
        for (auto& x : v) x = -x;
}

std::vector<Int> primitive_integer_vector(const std::vector<Rat>& v) {
    Int l = denominator_lcm(v);
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.get_num() * (l / r.get_den()));
    make_primitive(out);
    return out;
}

} // namespace hecone

#include "hecone/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "hecone/errors.hpp"

namespace hecone {

int PolyRing::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(std::move(names));
}

MPoly::MPoly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.emplace(Expo(ring_->arity(), 0), c);
}

MPoly MPoly::variable(const RingPtr& ring, int var, int power) {
    Expo e(ring->arity(), 0);
    e[var] = power;
    return monomial(ring, std::move(e), 1);
}

MPoly MPoly::monomial(const RingPtr& ring, Expo e, const Rat& c) {
    MPoly p(ring);
    p.add_term(e, c);
    return p;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != ring_->arity()) throw InternalError("exponent arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(ring_);
    Expo e(ring_ ? ring_->arity() : 0, 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

MPoly MPoly::pow(int n) const {
    if (n < 0) throw InternalError("negative power");
    MPoly r(ring_, Rat(1));
    MPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

int MPoly::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        deg = std::max(deg, t);
    }
    return deg;
}

int MPoly::degree_in(int var) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return deg;
}

bool MPoly::is_homogeneous(int deg) const {
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        if (t != deg) return false;
    }
    return true;
}

MPoly MPoly::substitute(const RingPtr& target, const std::vector<MPoly>& images) const {
    if (images.size() != ring_->arity()) throw InternalError("substitute arity mismatch");
    MPoly out(target);
    for (const auto& [e, c] : terms_) {
        MPoly term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        out += term;
    }
    return out;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != ring_->arity()) throw InternalError("eval arity mismatch");
    Rat out = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= point[i];
        out += t;
    }
    return out;
}

MPoly MPoly::coefficient_of(int var, int k) const {
    MPoly out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Expo d = e;
        d[var] = 0;
        out.add_term(d, c);
    }
    return out;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading (lex-largest) terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = false;
        for (int x : e)
            if (x > 0) has_vars = true;
        if (ac != 1 || !has_vars) os << rat_to_string(ac);
        bool star = (ac != 1) && has_vars;
        if (star) os << "*";
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MPoly reduce_y2(const MPoly& p, int y_var, const MPoly& F) {
    if (F.degree_in(y_var) > 0) throw InternalError("reduce_y2: F involves y");
    MPoly out(p.ring());
    MPoly carry(p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (e[y_var] <= 1) {
            out.add_term(e, c);
        } else {
            Expo d = e;
            int q = e[y_var] / 2;
            d[y_var] = e[y_var] % 2;
            carry += MPoly::monomial(p.ring(), d, c) * F.pow(q);
        }
    }
    if (!carry.is_zero()) out += reduce_y2(carry, y_var, F);
    return out;
}

} // namespace hecone

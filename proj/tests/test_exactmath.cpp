#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecone/cone.hpp"
#include "hecone/curve.hpp"
#include "hecone/linalg.hpp"
#include "hecone/mpoly.hpp"
#include "hecone/snf.hpp"
#include "hecone/versal.hpp"

using namespace hecone;

TEST_CASE("rat parsing and canonical form") {
    CHECK(rat_from_string("3/6") == rat(1, 2));
    CHECK(rat_from_string("-4/2") == rat(-2));
    CHECK(rat_to_string(rat(-3, 9)) == "-1/3");
    CHECK(rat_to_string(rat(7)) == "7");
    CHECK(rat(1, -2) == rat(-1, 2)); // denominator kept positive
}

TEST_CASE("rank: identity, Vandermonde, zero") {
    QMatrix id = QMatrix::identity(3);
    CHECK(id.rank() == 3);

    // 4x4 Vandermonde on nodes 0,1,2,3; the product-of-differences formula
    // gives a nonzero determinant, so the rank must be 4
    std::vector<Rat> nodes = {rat(0), rat(1), rat(2), rat(3)};
    Rat det = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) det *= nodes[j] - nodes[i];
    REQUIRE(det != 0);
    QMatrix v(4, 4);
    for (int i = 0; i < 4; ++i) {
        Rat p = 1;
        for (int j = 0; j < 4; ++j) {
            v.at(i, j) = p;
            p *= nodes[i];
        }
    }
    CHECK(v.rank() == 4);

    QMatrix zero(5, 7);
    CHECK(zero.rank() == 0);
}

TEST_CASE("kernel_basis small cases") {
    QMatrix id = QMatrix::identity(4);
    CHECK(id.kernel_basis().empty());

    QMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][0] != 0);
}

TEST_CASE("rank + nullity = cols on random small matrices") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dim(1, 8), val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rat(val(rng), 1 + (trial % 3));
        auto kb = m.kernel_basis();
        CHECK(m.rank() + kb.size() == c);
        for (const auto& v : kb) {
            auto img = m.apply(v);
            for (const auto& x : img) CHECK(x == 0);
        }
    }
}

TEST_CASE("sparse solver agrees with the dense one") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> dim(2, 10), val(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        SparseMatQ s(static_cast<int>(c));
        for (std::size_t i = 0; i < r; ++i) {
            SparseRow row;
            for (std::size_t j = 0; j < c; ++j) {
                Rat x = rat(val(rng));
                m.at(i, j) = x;
                if (x != 0) row.emplace_back(static_cast<int>(j), x);
            }
            s.add_row(std::move(row));
        }
        CHECK(s.rank_exact() == m.rank());
        CHECK(s.kernel_basis_exact().size() == m.kernel_basis().size());
        CHECK(s.rank_mod_prime(modular_primes()[0]) <= m.rank());
    }
}

TEST_CASE("rational reconstruction round trip") {
    Int m = 1;
    for (int i = 0; i < 4; ++i) m *= Int(modular_primes()[i]);
    std::vector<Rat> samples = {rat(-35, 8), rat(1, 997), rat(123456), rat(0)};
    for (const auto& r : samples) {
        // residue of r mod m
        Int den_inv;
        Int den = r.get_den();
        REQUIRE(mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) != 0);
        Int res = ((r.get_num() % m) * den_inv) % m;
        if (res < 0) res += m;
        Rat back;
        REQUIRE(rational_reconstruct(res, m, back));
        CHECK(back == r);
    }
}

TEST_CASE("smith normal form: gcd/lcm structure and controls") {
    ZMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    auto s = smith_normal_form(a);
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
    CHECK(s.U * a * s.V == s.D);
    CHECK((s.U.determinant() == 1 || s.U.determinant() == -1));
    CHECK((s.V.determinant() == 1 || s.V.determinant() == -1));

    ZMatrix z(3, 4);
    auto sz = smith_normal_form(z);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(sz.D.at(i, j) == 0);
}

TEST_CASE("smith normal form on random matrices keeps the invariants") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = dim(rng), c = dim(rng);
        ZMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = val(rng);
        auto s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        auto inv = s.invariant_factors();
        for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.D.at(i, j) == 0);
        Int du = s.U.determinant();
        CHECK((du == 1 || du == -1));
        Int dv = s.V.determinant();
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("circle bundle presentation for g=2 has factors (12) and rank 4") {
    // presentation matrix of the degree-12 circle bundle over a genus-2 surface
    ZMatrix rel(1, 5);
    rel.at(0, 4) = -12;
    auto s = smith_normal_form(rel);
    auto inv = s.invariant_factors();
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == 12);
}

TEST_CASE("poly reduce mod curve") {
    const RingPtr& R = curve_ring();
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    MPoly F = c.F_hom();
    MPoly y = MPoly::variable(R, CR_Y);

    CHECK(reduce_y2(y * y, CR_Y, F) == F);
    CHECK(reduce_y2(y.pow(3), CR_Y, F) == y * F);

    // (y+V)^2 - 2V(y+V) - U*W with F = V^2 + U*W reduces to zero
    auto M = mumford_from_points(c, {{rat(1), rat(0)}});
    MPoly x = MPoly::variable(R, CR_X);
    MPoly U(R), V(R), W(R);
    for (std::size_t i = 0; i < M.U.size(); ++i) U += x.pow(static_cast<int>(i)) * M.U[i];
    for (std::size_t i = 0; i < M.V.size(); ++i) V += x.pow(static_cast<int>(i)) * M.V[i];
    for (std::size_t i = 0; i < M.W.size(); ++i) W += x.pow(static_cast<int>(i)) * M.W[i];
    MPoly Fx = c.F_inhom();
    MPoly expr = (y + V) * (y + V) - V * (y + V) * rat(2) - U * W;
    CHECK(reduce_y2(expr, CR_Y, Fx).is_zero());

    // idempotent
    MPoly p = y.pow(5) * x + y * y * rat(3, 2) + x.pow(2);
    MPoly r1 = reduce_y2(p, CR_Y, Fx);
    CHECK(reduce_y2(r1, CR_Y, Fx) == r1);
    CHECK(r1.degree_in(CR_Y) <= 1);
}

TEST_CASE("reduction is a ring homomorphism on representatives") {
    const RingPtr& R = curve_ring();
    auto c = curve_from_roots(2, {rat(-1), rat(1), rat(2), rat(-2), rat(3), rat(-3)});
    MPoly Fx = c.F_inhom();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3), ex(0, 2), ey(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly p(R), q(R);
        for (int t = 0; t < 4; ++t) {
            Expo e(3, 0);
            e[CR_X] = ex(rng);
            e[CR_Y] = ey(rng);
            p.add_term(e, rat(coef(rng)));
            e[CR_X] = ex(rng);
            e[CR_Y] = ey(rng);
            q.add_term(e, rat(coef(rng)));
        }
        MPoly lhs = reduce_y2(p * q, CR_Y, Fx);
        MPoly rhs = reduce_y2(reduce_y2(p, CR_Y, Fx) * reduce_y2(q, CR_Y, Fx), CR_Y, Fx);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Ex 2.13 coefficient matrix in degree 2 has a 16-dimensional kernel") {
    // five quadrics in six variables; rank 5 is verified first, so the
    // kernel has dimension 21 - 5 = 16 by rank-nullity
    auto sys = special_curve_base(2);
    REQUIRE(sys.equations.size() == 5);
    auto monos = monomials_of_degree(sys.ring, 2);
    REQUIRE(monos.size() == 21);
    QMatrix m(5, 21);
    for (std::size_t i = 0; i < 5; ++i) {
        std::size_t j = 0;
        for (const auto& mono : monos) {
            Rat c = 0;
            for (const auto& [e, cc] : sys.equations[i].terms())
                if (e == mono) c = cc;
            m.at(i, j++) = c;
        }
    }
    REQUIRE(m.rank() == 5);
    CHECK(m.kernel_basis().size() == 16);
}

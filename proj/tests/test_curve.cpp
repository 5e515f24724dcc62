#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hecone/curve.hpp"
#include "hecone/errors.hpp"
#include "hecone/linalg.hpp"

using namespace hecone;

namespace {

// independent expansion of prod (x - r_i) by convolution
std::vector<Rat> expand_roots(const std::vector<Rat>& roots) {
    std::vector<Rat> f = {rat(1)};
    for (const auto& r : roots) {
        std::vector<Rat> g(f.size() + 1, rat(0));
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i + 1] += f[i];
            g[i] -= r * f[i];
        }
        f = std::move(g);
    }
    return f;
}

HyperellipticCurve two_point_curve() {
    // F = 1 + x(x-1)(x^4+1): rational points (0,1) and (1,1)
    std::vector<Rat> coeffs = {rat(1), rat(-1), rat(1), rat(0), rat(0), rat(-1), rat(1)};
    return curve_from_coeffs(2, coeffs);
}

} // namespace

TEST_CASE("curve_from_roots expands the product") {
    std::vector<Rat> roots = {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)};
    auto c = curve_from_roots(2, roots);
    auto expected = expand_roots(roots);
    REQUIRE(expected.size() == 7);
    for (int i = 0; i <= 6; ++i) CHECK(c.a[i] == expected[i]);
    CHECK(c.a[6] == 1);
    CHECK(c.a[0] == 720);
    REQUIRE(c.branch_xs.has_value());

    CHECK_THROWS_AS(curve_from_roots(2, {rat(1), rat(1), rat(2), rat(3), rat(4), rat(5)}),
                    InvalidCurve);
}

TEST_CASE("symmetric roots give an even polynomial") {
    std::vector<Rat> roots;
    for (int i = 1; i <= 4; ++i) {
        roots.push_back(rat(i));
        roots.push_back(rat(-i));
    }
    auto c = curve_from_roots(3, roots);
    for (int i = 1; i <= 7; i += 2) CHECK(c.a[i] == 0);
}

TEST_CASE("squarefree check on coefficient input") {
    // (x-1)^2 (x-2)(x-3)(x-4)(x-5) is rejected
    std::vector<Rat> roots = {rat(1), rat(1), rat(2), rat(3), rat(4), rat(5)};
    auto f = expand_roots(roots);
    CHECK_THROWS_AS(curve_from_coeffs(2, f), InvalidCurve);
}

TEST_CASE("mumford triples") {
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});

    SUBCASE("empty divisor") {
        auto m = mumford_empty(c);
        CHECK(m.e == 3);
        CHECK(m.U == UPoly{rat(1)});
        CHECK(m.V.empty());
        CHECK(m.W == upoly_trim(c.a));
    }

    SUBCASE("one-point divisor") {
        auto c2 = two_point_curve();
        auto m = mumford_from_points(c2, {{rat(0), rat(1)}});
        CHECK(m.e == 2);
        CHECK(m.U == UPoly{rat(0), rat(1)}); // x - 0
        CHECK(m.V == UPoly{rat(1)});
        CHECK(upoly_deg(m.W) == c2.g + 1 + m.e);
        // F - V^2 - U W == 0 identically
        auto lhs = upoly_sub(c2.a, upoly_add(upoly_mul(m.V, m.V), upoly_mul(m.U, m.W)));
        CHECK(lhs.empty());
    }

    SUBCASE("point off the curve is rejected") {
        CHECK_THROWS_AS(mumford_from_points(c, {{rat(0), rat(26)}}), InvalidPoint);
    }

    SUBCASE("repeated x-coordinates are not implemented") {
        auto c2 = two_point_curve();
        CHECK_THROWS_AS(mumford_from_points(c2, {{rat(0), rat(1)}, {rat(0), rat(-1)}}),
                        NotImplemented);
    }

    SUBCASE("two-point divisor reproduces U, V, W") {
        auto c2 = two_point_curve();
        auto m = mumford_from_points(c2, {{rat(0), rat(1)}, {rat(1), rat(1)}});
        CHECK(m.e == 1);
        CHECK(m.U == UPoly{rat(0), rat(-1), rat(1)}); // x^2 - x
        CHECK(m.V == UPoly{rat(1)});
        CHECK(m.W == UPoly{rat(1), rat(0), rat(0), rat(0), rat(1)}); // x^4 + 1
    }
}

TEST_CASE("section basis dimensions for k g12") {
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    LineBundleSpec L{6, std::nullopt};

    auto b1 = section_basis(c, L, 1);
    CHECK(b1.dim == 11);
    // z-part has k+1 elements (no y)
    int zcount = 0;
    for (const auto& s : b1.basis)
        if (s.degree_in(CR_Y) == 0) ++zcount;
    CHECK(zcount == 7);

    auto b2 = section_basis(c, L, 2);
    CHECK(b2.dim == 23);

    // Riemann-Roch value verified by the rank of the multiplication matrix:
    // products of two degree-1 sections span a 23-dimensional space
    MPoly F = c.F_hom();
    std::vector<MPoly> prods;
    for (std::size_t i = 0; i < b1.basis.size(); ++i)
        for (std::size_t j = i; j < b1.basis.size(); ++j)
            prods.push_back(reduce_y2(b1.basis[i] * b1.basis[j], CR_Y, F));
    std::map<Expo, int> cols;
    for (const auto& p : prods)
        for (const auto& [e, cc] : p.terms())
            if (!cols.count(e)) cols.emplace(e, static_cast<int>(cols.size()));
    QMatrix m(prods.size(), cols.size());
    for (std::size_t i = 0; i < prods.size(); ++i)
        for (const auto& [e, cc] : prods[i].terms()) m.at(i, cols.at(e)) = cc;
    CHECK(m.rank() == 23);
}

TEST_CASE("section basis for a general line bundle and multiplicativity") {
    auto c = two_point_curve();
    auto M = mumford_from_points(c, {{rat(0), rat(1)}});
    LineBundleSpec L{4, M};
    REQUIRE(L.degree(c) == 9);

    auto b1 = section_basis(c, L, 1);
    CHECK(b1.dim == 9 - 2 + 1);
    auto b2 = section_basis(c, L, 2);
    CHECK(b2.dim == 18 - 2 + 1);

    // products of degree-1 sections lie in the span of the degree-2 basis
    MPoly Fx = c.F_inhom();
    std::map<Expo, int> cols;
    auto add_cols = [&](const MPoly& p) {
        for (const auto& [e, cc] : p.terms())
            if (!cols.count(e)) cols.emplace(e, static_cast<int>(cols.size()));
    };
    std::vector<MPoly> prods;
    for (std::size_t i = 0; i < b1.basis.size(); ++i)
        for (std::size_t j = i; j < b1.basis.size(); ++j)
            prods.push_back(reduce_y2(b1.basis[i] * b1.basis[j], CR_Y, Fx));
    for (const auto& p : prods) add_cols(p);
    for (const auto& p : b2.basis) add_cols(p);
    auto tovec = [&](const MPoly& p) {
        std::vector<Rat> v(cols.size(), rat(0));
        for (const auto& [e, cc] : p.terms()) v[cols.at(e)] = cc;
        return v;
    };
    QMatrix base(b2.basis.size(), cols.size());
    for (std::size_t i = 0; i < b2.basis.size(); ++i) {
        auto v = tovec(b2.basis[i]);
        for (std::size_t j = 0; j < v.size(); ++j) base.at(i, j) = v[j];
    }
    std::size_t base_rank = base.rank();
    QMatrix aug(b2.basis.size() + prods.size(), cols.size());
    for (std::size_t i = 0; i < b2.basis.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) aug.at(i, j) = base.at(i, j);
    for (std::size_t i = 0; i < prods.size(); ++i) {
        auto v = tovec(prods[i]);
        for (std::size_t j = 0; j < v.size(); ++j) aug.at(b2.basis.size() + i, j) = v[j];
    }
    CHECK(aug.rank() == base_rank);
}

TEST_CASE("section basis rejects the special range") {
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    CHECK_THROWS_AS(section_basis(c, LineBundleSpec{1, std::nullopt}, 1), Unsupported);
}

TEST_CASE("h0_twist ladder for 6 g12 on a genus-2 curve") {
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    LineBundleSpec L{6, std::nullopt};
    CHECK(h0_twist(c, L, 0) == 11);
    CHECK(h0_twist(c, L, 3) == 5);
    CHECK(h0_twist(c, L, 7) == 0);
    // full ladder against (a-n+1)+ + (b-n+1)+ with (a,b) = (k, k-g-1)
    auto pos = [](int x) { return x > 0 ? x : 0; };
    for (int n = 0; n <= 7; ++n)
        CHECK(h0_twist(c, L, n) == pos(6 - n + 1) + pos(3 - n + 1));
}

TEST_CASE("scroll types") {
    auto c2 = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    CHECK(scroll_type(c2, LineBundleSpec{6, std::nullopt}) == std::pair<int, int>{6, 3});

    std::vector<Rat> r3;
    for (int i = 1; i <= 8; ++i) r3.push_back(rat(i));
    auto c3 = curve_from_roots(3, r3);
    CHECK(scroll_type(c3, LineBundleSpec{8, std::nullopt}) == std::pair<int, int>{8, 4});

    // general L of degree 12 = 2*5 + 2: a + b = 9 and a <= d/2
    auto ctp = two_point_curve();
    auto M = mumford_from_points(ctp, {{rat(0), rat(1)}, {rat(1), rat(1)}});
    LineBundleSpec L{5, M};
    REQUIRE(L.degree(ctp) == 12);
    auto [a, b] = scroll_type(ctp, L);
    CHECK(a + b == 9);
    CHECK(a <= 6);
    CHECK(a >= b);
}

TEST_CASE("curve config parsing") {
    auto cfg = parse_curve_config(R"({"g": 2, "roots": [1,2,3,4,5,6], "k": 6})");
    CHECK(cfg.curve.g == 2);
    CHECK(cfg.k == 6);
    CHECK(cfg.curve.a[0] == 720);

    auto cfg2 = parse_curve_config(
        R"({"g": 2, "coeffs": [1,-1,1,0,0,-1,1], "k": 4, "divisor_points": [[0, 1]]})");
    CHECK(cfg2.divisor_points.size() == 1);
    CHECK(cfg2.curve.a[2] == 1);

    CHECK_THROWS_AS(parse_curve_config(R"({"g": 2})"), InvalidInput);
    CHECK_THROWS_AS(parse_curve_config(R"({"g": 2, "roots": [1], "coeffs": [1]})"), InvalidInput);
    CHECK_THROWS_AS(parse_curve_config("not json"), InvalidInput);
}

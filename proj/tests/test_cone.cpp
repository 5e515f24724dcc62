#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecone/cone.hpp"
#include "hecone/errors.hpp"
#include "hecone/report.hpp"
#include "hecone/tangent.hpp"
#include "hecone/versal.hpp"

using namespace hecone;

namespace {

HyperellipticCurve roots_curve_g2() {
    return curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
}

HyperellipticCurve one_point_curve() {
    // roots 1,2,3,4,6,9: the product is 36^2, so (0, 36) is a rational point
    return curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(6), rat(9)});
}

std::vector<Rat> range_roots(int n) {
    std::vector<Rat> r;
    for (int i = 1; i <= n; ++i) r.push_back(rat(i));
    return r;
}

} // namespace

TEST_CASE("curve cone for g=2, k=6: counts and the displayed phi_0") {
    auto c = roots_curve_g2();
    auto pres = cone_equations_kg12(c, 6);
    CHECK(pres.ring->arity() == 11);
    CHECK(pres.minors.size() == 36);
    CHECK(pres.phis.size() == 7);
    CHECK(pres.num_gens() == 43);

    // phi_0 = w_0^2 - sum a_i z_floor(i/2) z_ceil(i/2)
    MPoly expected(pres.ring);
    auto zv = [&](int i) { return MPoly::variable(pres.ring, pres.z_var(i)); };
    auto wv = [&](int i) { return MPoly::variable(pres.ring, pres.w_var(i)); };
    expected += wv(0) * wv(0);
    for (int i = 0; i <= 6; ++i) expected -= zv(i / 2) * zv((i + 1) / 2) * c.a[i];
    CHECK(pres.phis[0] == expected);

    // the top chain equation only reaches z_k and w_(k-g-1)
    const auto& last = pres.phis.back();
    CHECK(last.degree_in(pres.z_var(6)) > 0);
    CHECK(last.degree_in(pres.w_var(3)) > 0);

    CHECK(verify_rolling_property(pres));
    CHECK(verify_parametrization(pres));
}

TEST_CASE("generator counts match C(d-g-1,2) + (d-2g-1)") {
    auto c = roots_curve_g2();
    for (int k : {4, 5, 6, 7}) {
        auto pres = cone_equations_kg12(c, k);
        int n = pres.d - pres.g - 1;
        CHECK(static_cast<int>(pres.minors.size()) == n * (n - 1) / 2);
        CHECK(static_cast<int>(pres.phis.size()) == pres.d - 2 * pres.g - 1);
        CHECK(verify_parametrization(pres));
        CHECK(verify_rolling_property(pres));
    }
    auto c3 = curve_from_roots(3, range_roots(8));
    for (int k : {5, 6, 8}) {
        auto pres = cone_equations_kg12(c3, k);
        int n = pres.d - pres.g - 1;
        CHECK(static_cast<int>(pres.minors.size()) == n * (n - 1) / 2);
        CHECK(verify_parametrization(pres));
    }
    CHECK_THROWS_AS(cone_equations_kg12(c, 3), Unsupported);
}

TEST_CASE("general-L cone: parametrization and W-degree") {
    auto c = one_point_curve();
    auto M = mumford_from_points(c, {{rat(0), rat(36)}});
    CHECK(upoly_deg(M.W) == c.g + 1 + M.e); // deg W = g+1+e
    auto pres = cone_equations_general(c, M, 4);
    CHECK(pres.d == 9);
    CHECK(pres.num_cols() == pres.d - pres.g - 1);
    CHECK(verify_rolling_property(pres));
    CHECK(verify_parametrization(pres));

    // corrupting W breaks the F = V^2 + UW precondition
    auto bad = M;
    bad.W[0] += 1;
    CHECK_THROWS_AS(cone_equations_general(c, bad, 4), InvalidDivisor);
}

TEST_CASE("empty divisor specializes to the k g12 presentation") {
    auto c = roots_curve_g2();
    auto pres1 = cone_equations_kg12(c, 6);
    auto pres2 = cone_equations_general(c, mumford_empty(c), 6);
    REQUIRE(pres1.num_gens() == pres2.num_gens());
    for (int i = 0; i < pres1.num_gens(); ++i)
        CHECK(pres1.generator(i) == pres2.generator(i));
}

TEST_CASE("points cone: counts, evaluation kernel, bad input") {
    auto pres = points_cone_from_roots(2, range_roots(12));
    CHECK(pres.num_cols() == 9);
    CHECK(pres.minors.size() == 36);
    CHECK(pres.phis.size() == 7); // d - 2g - 1 chain equations
    CHECK(verify_rolling_property(pres));
    CHECK(verify_parametrization(pres)); // includes evaluation at all 12 roots

    // xb^d is not squarefree as a binary form
    UPoly xbd(13, rat(0));
    xbd[0] = 1;
    CHECK_THROWS_AS(hyperplane_section_equations(2, 12, xbd), InvalidCurve);
}

TEST_CASE("hand syzygies are exact syzygies") {
    auto c = roots_curve_g2();
    for (const auto& pres :
         {cone_equations_kg12(c, 6), points_cone_from_roots(2, range_roots(12))}) {
        auto hs = hand_syzygies(pres);
        CHECK(!hs.empty());
        for (const auto& s : hs) CHECK(syzygy_check(pres, s));
    }
    auto cg = one_point_curve();
    auto M = mumford_from_points(cg, {{rat(0), rat(36)}});
    auto pres = cone_equations_general(cg, M, 4);
    for (const auto& s : hand_syzygies(pres)) CHECK(syzygy_check(pres, s));
}

TEST_CASE("syzygy basis for the g=2 points cone") {
    auto pres = points_cone_from_roots(2, range_roots(12));
    auto basis = syzygy_basis(pres);
    // rank-nullity: 43 generators, 10 variables, I_3 has dimension 220 - 12
    CHECK(basis.size() == 43 * 10 - 208);
    for (const auto& s : basis) CHECK(syzygy_check(pres, s));

    // the hand relation R_{0,0} lies in the span
    auto hs = hand_syzygies(pres);
    CHECK(syzygy_in_span(pres, basis, hs.front()));
    CHECK(syzygy_in_span(pres, basis, hs.back()));
}

TEST_CASE("syzygy basis for the g=2 curve cone contains the determinantal triples") {
    auto c = roots_curve_g2();
    auto pres = cone_equations_kg12(c, 6);
    auto basis = syzygy_basis(pres);
    CHECK(basis.size() == 43 * 11 - 251);
    // determinantal 3-column relation on columns (0,1,2)
    auto hs = hand_syzygies(pres);
    CHECK(syzygy_in_span(pres, basis, hs.front()));
}

TEST_CASE("relation identities") {
    SUBCASE("points cone, all indices") {
        auto pres = points_cone_from_roots(2, range_roots(12));
        auto rep = verify_relation_identities(pres);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        CHECK(rep.checked > 0);
    }
    SUBCASE("curve cone") {
        auto pres = cone_equations_kg12(roots_curve_g2(), 6);
        auto rep = verify_relation_identities(pres);
        CHECK(rep.ok);
    }
    SUBCASE("general-L cone") {
        auto cg = one_point_curve();
        auto M = mumford_from_points(cg, {{rat(0), rat(36)}});
        auto pres = cone_equations_general(cg, M, 4);
        auto rep = verify_relation_identities(pres);
        CHECK(rep.ok);
    }
    SUBCASE("corrupting a chain equation breaks the syzygies") {
        auto pres = points_cone_from_roots(2, range_roots(12));
        pres.phis[1] += MPoly::variable(pres.ring, 0) * MPoly::variable(pres.ring, 1);
        bool any_fail = false;
        for (const auto& s : hand_syzygies(pres))
            if (!syzygy_check(pres, s)) any_fail = true;
        CHECK(any_fail);
    }
}

TEST_CASE("paper display form of the points-cone identity") {
    // R_{j,m} z_k - R_{k,m} z_j - sum_i a_i R_(j,k,floor((m+i)/2)) z_ceil((m+i)/2)
    // equals the Koszul relation between phi_m and f_{j,k} up to sign
    auto pres = points_cone_from_roots(2, range_roots(12));
    const int nm = static_cast<int>(pres.minors.size());
    auto R = [&](int j, int m) {
        SyzygyVector v;
        v.coeff.assign(pres.num_gens(), MPoly(pres.ring));
        auto zv = [&](int i) { return MPoly::variable(pres.ring, pres.z_var(i)); };
        v.coeff[nm + m + 1] += zv(j);
        v.coeff[nm + m] -= zv(j + 1);
        for (int i = 0; i <= pres.d; ++i) {
            if (pres.points_form[i] == 0) continue;
            int l = (m + i) / 2;
            int cl = (m + i + 1) / 2;
            if (l == j) continue;
            int p = std::min(j, l), q = std::max(j, l);
            Rat sgn = (j < l) ? rat(1) : rat(-1);
            v.coeff[pres.minor_index(p, q)] -= zv(cl) * (sgn * pres.points_form[i]);
        }
        return v;
    };
    for (int m = 0; m + 1 < static_cast<int>(pres.phis.size()) && m < 3; ++m)
        for (int j = 0; j < 3; ++j)
            for (int k = j + 1; k <= 3; ++k) {
                auto Rj = R(j, m), Rk = R(k, m);
                CHECK(syzygy_check(pres, Rj));
                CHECK(syzygy_check(pres, Rk));
            }
}

TEST_CASE("degree-4 syzygies are multiples of degree-3 ones") {
    SUBCASE("small points cone") {
        auto pres = points_cone_from_roots(1, range_roots(6));
        auto basis = syzygy_basis(pres);
        CHECK(syzygies_generate_in_degree4(pres, basis));
    }
    SUBCASE("small curve cone") {
        auto pres = cone_equations_kg12(roots_curve_g2(), 4);
        auto basis = syzygy_basis(pres);
        CHECK(syzygies_generate_in_degree4(pres, basis));
    }
}

TEST_CASE("presentation JSON export is canonical") {
    auto pres = cone_equations_kg12(special_curve(2), 6);
    auto j1 = presentation_to_json(pres);
    auto j2 = presentation_to_json(cone_equations_kg12(special_curve(2), 6));
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["num_minors"] == 36);
    CHECK(j1["num_phis"] == 7);
    CHECK(j1["coordinates"].size() == 11);
    // canonical generator order: minors in column-pair lex order, then phis
    CHECK(j1["generators"][0]["name"] == "m_0_1");
    CHECK(j1["generators"][36]["name"] == "phi_0");
}

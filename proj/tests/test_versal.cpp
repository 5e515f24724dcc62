#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecone/errors.hpp"
#include "hecone/versal.hpp"

using namespace hecone;

namespace {

// the five published quadrics for g=2, curve y^2 = 1 - x^6, L = 6 g12
std::vector<MPoly> published_g2_equations(const RingPtr& R) {
    // variables: t, s1..s5
    auto t = MPoly::variable(R, 0);
    auto s = [&](int i) { return MPoly::variable(R, i); };
    std::vector<MPoly> eqs;
    eqs.push_back(t * s(1) + s(5) * s(2) * rat(2) + s(4) * s(3) * rat(2));
    eqs.push_back(t * s(2) + s(5) * s(3) * rat(2) + s(4) * s(4) + s(1) * s(1));
    eqs.push_back(t * s(3) + s(5) * s(4) * rat(2) + s(1) * s(2) * rat(2));
    eqs.push_back(t * s(4) + s(5) * s(5) + s(1) * s(3) * rat(2) + s(2) * s(2));
    eqs.push_back(t * s(5) + s(1) * s(4) * rat(2) + s(2) * s(3) * rat(2));
    return eqs;
}

} // namespace

TEST_CASE("first-order family shapes") {
    auto f26 = first_order_family(special_curve(2), 6);
    CHECK(f26.num_s == 5);
    CHECK(f26.num_t == 1);
    CHECK(f26.param_relations.empty());
    CHECK(f26.phi_prime.size() == 7); // m = 0..2k-2g-2

    // m = 0: the t-part is sum t_i z_i
    auto c = special_curve(2);
    auto fam = first_order_family(c, 6);
    MPoly tpart(fam.ring);
    for (int i = 0; i <= 2 * c.g + 2 - 6; ++i)
        tpart += MPoly::variable(fam.ring, fam.t_var(i)) * MPoly::variable(fam.ring, fam.z_var(i));
    bool contains_t_part = true;
    for (const auto& [e, cc] : tpart.terms()) {
        auto it = fam.phi_prime[0].terms().find(e);
        if (it == fam.phi_prime[0].terms().end() || it->second != cc) contains_t_part = false;
    }
    CHECK(contains_t_part);

    auto f28 = first_order_family(special_curve(2), 8);
    CHECK(f28.num_t == 0);
    REQUIRE(f28.param_relations.size() == 1); // j = 1..k-2g-3 = {1}
    // relation sum a_i s_{i+1}: for y^2 = 1 - x^6 it reads s_1 - s_7 = 0
    const auto& rel = f28.param_relations[0];
    CHECK(rel[0] == 1);  // s_1
    CHECK(rel[6] == -1); // s_7
}

TEST_CASE("first-order identity holds for all supported (g,k)") {
    for (int g = 2; g <= 3; ++g)
        for (int k = g + 2; k <= 2 * g + 2; ++k) {
            auto fam = first_order_family(special_curve(g), k);
            auto chk = verify_first_order(fam);
            CHECK(chk.ok);
        }
    // generic coefficients as well
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    for (int k = 4; k <= 6; ++k) CHECK(verify_first_order(first_order_family(c, k)).ok);
}

TEST_CASE("beyond k = 2g+2 the displayed gauge overflows") {
    // the family (parameters, relations) still exists, but the printed
    // formula cannot represent the top chain perturbations
    auto fam = first_order_family(special_curve(2), 8);
    CHECK_FALSE(fam.gauge_overflow.empty());
    auto chk = verify_first_order(fam);
    CHECK_FALSE(chk.ok);
    CHECK(chk.failed_m == fam.gauge_overflow);
}

TEST_CASE("single-coefficient mutations break the identity") {
    std::mt19937 rng(314159);
    for (int g = 2; g <= 3; ++g)
        for (int k = g + 2; k <= 2 * g + 2; ++k) {
            auto fam = first_order_family(special_curve(g), k);
            const int b = 2 * k - 2 * g - 2;
            std::uniform_int_distribution<int> pick_m(0, b), pick_p(0, fam.num_s + fam.num_t - 1),
                pick_z(0, k), pick_d(1, 5);
            for (int trial = 0; trial < 20; ++trial) {
                auto bad = mutate_family(fam, pick_m(rng), pick_p(rng), pick_z(rng),
                                         rat(pick_d(rng)));
                auto chk = verify_first_order(bad);
                CHECK_FALSE(chk.ok);
            }
        }
}

TEST_CASE("g=2 base space equals the published equations exactly") {
    auto sys = special_curve_base(2);
    REQUIRE(sys.equations.size() == 5);
    auto expected = published_g2_equations(sys.ring);
    for (int i = 0; i < 5; ++i) CHECK(sys.equations[i] == expected[i]);

    // the recipe reproduces the closed form coefficient-for-coefficient
    auto fam = first_order_family(special_curve(2), 6);
    auto sys2 = base_space_equations(fam);
    REQUIRE(sys2.equations.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(sys2.equations[i] == expected[i]);
}

TEST_CASE("closed form equals the recipe for g = 2, 3, 4") {
    for (int g = 2; g <= 4; ++g) {
        auto sys = special_curve_base(g);
        auto fam = first_order_family(special_curve(g), 2 * g + 2);
        auto sys2 = base_space_equations(fam);
        REQUIRE(sys.equations.size() == sys2.equations.size());
        CHECK(sys.equations.size() == 2u * g + 1);
        for (std::size_t i = 0; i < sys.equations.size(); ++i)
            CHECK(sys.equations[i] == sys2.equations[i]);
    }
}

TEST_CASE("general-curve base system matches the m-range count") {
    auto c = curve_from_roots(2, {rat(1), rat(2), rat(3), rat(4), rat(5), rat(6)});
    auto fam = first_order_family(c, 6);
    auto sys = base_space_equations(fam);
    CHECK(sys.equations.size() == 5); // b - 1 = 2g+1 at k = 2g+2
    // homogeneous of degree 2 in the parameters
    for (const auto& e : sys.equations) CHECK(e.is_homogeneous(2));
}

TEST_CASE("solution checks") {
    auto sys = special_curve_base(2);
    CHECK(check_solution(sys, {rat(-4), rat(1), rat(1), rat(1), rat(1), rat(1)}));
    CHECK(check_solution(sys, {rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)}));
    CHECK_FALSE(check_solution(sys, {rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)}));
    // homogeneity: scaling a solution stays a solution
    CHECK(check_solution(sys, {rat(-8), rat(2), rat(2), rat(2), rat(2), rat(2)}));
    CHECK_THROWS_AS(check_solution(sys, {rat(1)}), InvalidInput);
}

TEST_CASE("Hilbert function certifies the complete intersection through degree 6") {
    auto sys = special_curve_base(2);
    auto hf = hilbert_function_check(sys, 6);
    std::vector<long> expected = {1, 6, 16, 26, 31, 32, 32}; // (1+T)^5/(1-T)
    CHECK(hf == expected);
    CHECK(ci_hilbert_series(5, 6) == expected);
    // degree-2 value = C(2g+3, 2) - (2g+1) when the quadrics are independent
    CHECK(hf[2] == 21 - 5);

    // duplicating an equation drops the rank at degree 2
    auto dup = sys;
    dup.equations[1] = dup.equations[0];
    auto hf2 = hilbert_function_check(dup, 3);
    CHECK(hf2[2] == 17);
}

TEST_CASE("finite-field point counts") {
    auto sys = special_curve_base(2);

    SUBCASE("p = 7 attains 32 smooth points") {
        auto r = count_projective_solutions_ff(sys, 7);
        CHECK(r.num_points == 32);
        CHECK(r.num_smooth == 32);
        CHECK_FALSE(r.degenerate);
    }
    SUBCASE("good primes respect the Bezout bound") {
        for (std::uint64_t p : {5, 7, 11, 13}) {
            auto r = count_projective_solutions_ff(sys, p);
            CHECK(r.num_points <= 32);
        }
    }
    SUBCASE("p = 2 is degenerate") {
        auto r = count_projective_solutions_ff(sys, 2);
        CHECK(r.degenerate);
    }
    SUBCASE("prime scan finds the first good prime") {
        auto scan = scan_primes_for_point_count(sys, 500, 32);
        REQUIRE(scan.has_value());
        CHECK(scan->prime == 7);
        CHECK(scan->num_points == 32);
        CHECK(scan->num_smooth == 32);
    }
}

TEST_CASE("special curve base requires g >= 2") {
    CHECK_THROWS_AS(special_curve_base(1), Unsupported);
}

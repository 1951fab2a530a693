#include <catch2/catch_amalgamated.hpp>

#include "schroder/slope_family.hpp"

using namespace schroder;

TEST_CASE("slope constants") {
    SECTION("(2,3)") {
        auto c1 = slope_constants(2, 3, 1);
        REQUIRE(c1.alpha == 2);
        REQUIRE(c1.beta == 1);
        REQUIRE(c1.eps == 1);
        auto c5 = slope_constants(2, 3, 5);
        REQUIRE(c5.alpha == 1);
        REQUIRE(c5.beta == 1);
        REQUIRE(c5.eps == 0);
    }
    SECTION("m = 1 collapses") {
        for (int f = 2; f <= 4; ++f)
            for (long long s = 1; s < f; ++s) {
                auto c = slope_constants(1, f, s);
                REQUIRE(c.alpha == s);
                REQUIRE(c.beta == 0);
                REQUIRE(c.eps == 0);
            }
    }
}

TEST_CASE("initial values at x = 0") {
    SlopeFamily fam = solve_slope(2, 3, 2);
    REQUIRE(fam.weight(0, 0).is_one_like());
    for (long long s = 1; s <= 6; ++s) REQUIRE(fam.weight(s, 0).is_zero());
}

TEST_CASE("solved (1,1) weights") {
    SlopeFamily fam = solve_slope(1, 1, 2);
    const AQCoeff& w1 = fam.weight(0, 1);
    REQUIRE(w1.coeff(0, 1) == 1);
    REQUIRE(w1.coeff(2, 0) == 1);
    const AQCoeff& w2 = fam.weight(0, 2);
    REQUIRE(w2.coeff(4, 0) == 1);
    REQUIRE(w2.coeff(2, 1) == 2);
    REQUIRE(w2.coeff(2, 3) == 1);
    REQUIRE(w2.coeff(0, 2) == 1);
    REQUIRE(w2.coeff(0, 4) == 1);
}

TEST_CASE("solver equals oracle") {
    for (auto [m, n, lmax] : {std::tuple{1, 1, 4}, {1, 2, 3}, {2, 3, 2}}) {
        SlopeFamily fam = solve_slope(m, n, lmax);
        auto oracle = enum_slope_all_s(m, n, lmax);
        for (long long s = 0; s <= fam.mn(); ++s)
            REQUIRE(fam.table(s).entries == oracle[size_t(s)].entries);
    }
}

TEST_CASE("q-difference system residuals vanish") {
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        SlopeFamily fam = solve_slope(m, n, 3);
        REQUIRE(!check_slope_equations(fam).has_value());
    }
}

TEST_CASE("collapsed product identity") {
    SECTION("(2,3) for s in {2,3,4}") {
        SlopeFamily fam = solve_slope(2, 3, 3);
        REQUIRE(!check_collapsed_products(fam).has_value());
    }
    SECTION("m = 1: holds for every s") {
        SlopeFamily fam = solve_slope(1, 3, 3);
        REQUIRE(!check_collapsed_products(fam).has_value());
    }
}

TEST_CASE("table round trip through series") {
    SlopeFamily fam = solve_slope(2, 3, 2);
    for (long long s = 0; s <= 6; ++s) {
        XSeries direct = fam.series(s);
        XSeries via_table = table_to_series(fam.table(s), 2);
        REQUIRE(!first_mismatch(direct, via_table, 3, QWindowSeries::kExactWindow)
                     .has_value());
    }
}

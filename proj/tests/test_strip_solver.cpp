#include <catch2/catch_amalgamated.hpp>

#include "schroder/path_oracle.hpp"
#include "schroder/slope_family.hpp"
#include "schroder/strip_solver.hpp"

using namespace schroder;

TEST_CASE("y family first orders") {
    auto y = solve_y_family(1, 3, 3);
    REQUIRE(y[1].coeff(0).is_one_like());
    REQUIRE(y[1].coeff(1).coeff(0, 1) == 1);   // q
    REQUIRE(y[1].coeff(1).coeff(2, 0) == 1);   // a^2
    for (int k = 1; k <= 3; ++k) REQUIRE(y[size_t(k)].coeff(0).is_one_like());
    REQUIRE_THROWS_AS(solve_y_family(2, 2, 3), error);  // kmax < f+1
}

TEST_CASE("y family equals the strip enumerator") {
    for (int f : {1, 2}) {
        auto y = solve_y_family(f, f + 2, 3);
        for (int k = 1; k <= f + 2; ++k) {
            XSeries oracle = table_to_series(enum_strip(f, k, 3), 3);
            REQUIRE(!first_mismatch(oracle, y[size_t(k)], 4, QWindowSeries::kExactWindow)
                         .has_value());
        }
    }
}

TEST_CASE("y_1 equals y^[0] of the slope solver") {
    for (int f : {1, 2, 3}) {
        auto y = solve_y_family(f, f + 1, 3);
        SlopeFamily fam = solve_slope(1, f, 3);
        REQUIRE(!first_mismatch(fam.series(0), y[1], 4, QWindowSeries::kExactWindow)
                     .has_value());
    }
}

TEST_CASE("y_inf") {
    const long long w = 24;
    XSeries yinf = solve_yinf(1, 3, w);
    SECTION("initial value and first coefficient") {
        REQUIRE(yinf.coeff(0).coeff(0, 0) == 1);
        // [x^1] = q + a^2 + q^3 + a^2 q^2 + ... (window truncated)
        REQUIRE(yinf.coeff(1).coeff(0, 1) == 1);
        REQUIRE(yinf.coeff(1).coeff(2, 0) == 1);
        REQUIRE(yinf.coeff(1).coeff(0, 3) == 1);
        REQUIRE(yinf.coeff(1).coeff(2, 2) == 1);
    }
    SECTION("functional equation residual vanishes") {
        XSeries residual = yinf_equation_residual(yinf, 1);
        REQUIRE(is_zero_below(residual, 4, w));
    }
    SECTION("y_k = y_inf(x) / y_inf(q^{2k} x)") {
        auto y = solve_y_family(1, 4, 3);
        for (int k = 2; k <= 4; ++k) {
            XSeries ratio = yinf * x_invert(qshift(yinf, 2 * k));
            REQUIRE(!first_mismatch(y[size_t(k)], ratio, 4, w).has_value());
        }
    }
    SECTION("solver equals the stabilized enumeration") {
        const long long jmax = 12;
        for (int f : {1, 2}) {
            XSeries oracle = table_to_series(enum_strip_stable(f, 2, jmax), 2);
            XSeries solved = solve_yinf(f, 2, jmax + 1);
            REQUIRE(!first_mismatch(oracle, solved, 3, jmax + 1).has_value());
        }
    }
}

TEST_CASE("h from its recurrence") {
    const long long w = 24;
    XSeries h = solve_h(1, 3, w);
    SECTION("h(0) = 1 and [x^1] = (q + a^2)/(1 - q^2)") {
        REQUIRE(h.coeff(0).is_one_like());
        for (long long e = 0; e < w; ++e) {
            REQUIRE(h.coeff(1).coeff(0, e) == (e % 2 == 1 ? 1 : 0));
            REQUIRE(h.coeff(1).coeff(2, e) == (e % 2 == 0 ? 1 : 0));
        }
    }
    SECTION("coefficients are non-negative") {
        for (int f : {1, 2, 3}) REQUIRE(solve_h(f, 4, w).all_nonnegative());
    }
    SECTION("corollary: h(x) * y_inf(-x) = 1") {
        for (int f : {1, 2}) {
            XSeries hh = solve_h(f, 3, w);
            XSeries yinf = solve_yinf(f, 3, w);
            XSeries prod = hh * x_scale(yinf, AQCoeff::monomial(-1, 0, 0));
            REQUIRE(!first_mismatch(prod, XSeries::one(4), 4, w).has_value());
        }
    }
}

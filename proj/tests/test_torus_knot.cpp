#include <catch2/catch_amalgamated.hpp>

#include "schroder/strip_solver.hpp"
#include "schroder/torus_knot.hpp"

using namespace schroder;

TEST_CASE("eval_pstar") {
    const long long w = 16;
    SECTION("k = 1, grid 2") {
        NuTSeries p = eval_pstar(1, 1, w);
        // (u - u^{-1}) * inverse(sigma - sigma^{-1}); the inverse expands
        // as -sigma - sigma^3 - sigma^5 - ...
        REQUIRE(p.slot(1) != nullptr);
        REQUIRE(p.slot(1)->coeff(1) == -1);
        REQUIRE(p.slot(1)->coeff(3) == -1);
        REQUIRE(p.slot(1)->coeff(2) == 0);
        REQUIRE(p.slot(-1)->coeff(1) == 1);
    }
    SECTION("odd in u") {
        for (int k : {1, 2, 3}) {
            NuTSeries p = eval_pstar(k, 2, w);
            REQUIRE(first_mismatch(p.u_inverted(), -p, w - 4 * k) == std::nullopt);
        }
    }
    SECTION("k = 2 matches the defining assembly") {
        NuTSeries p = eval_pstar(2, 2, w);
        QWindowSeries denom = QWindowSeries::monomial(1, 4) - QWindowSeries::monomial(1, -4);
        NuTSeries direct = (NuTSeries::monomial(4, 1, 2, 0) - NuTSeries::monomial(4, 1, -2, 0)) *
                           NuTSeries::from_sigma(4, q_invert_unit(denom, w));
        REQUIRE(p == direct);
    }
}

TEST_CASE("homfly") {
    const long long w = 20;
    SECTION("empty partition gives 1") {
        NuTSeries h = homfly({}, 2, 3, w);
        REQUIRE(h.terms().size() == 1);
        REQUIRE(h.slot(0)->coeff(0) == 1);
    }
    SECTION("T_{1,f} one-box invariant is p_1(t*)") {
        for (int f : {1, 2, 3}) {
            NuTSeries h = homfly({1}, 1, f, w);
            REQUIRE(first_mismatch(h, eval_pstar(1, 1, w), w) == std::nullopt);
        }
    }
    SECTION("T_{1,f} single-term form with a nonzero framing exponent") {
        // H_(2) = t^{-f} s_(2)(t*) = sigma^{-2f} (p_1^2 + p_2)/2
        for (int f : {1, 2}) {
            NuTSeries h = homfly({2}, 1, f, w);
            NuTSeries p1 = eval_pstar(1, 1, w + 2 * f + 2);
            NuTSeries p2 = eval_pstar(2, 1, w + 2 * f + 2);
            NuTSeries direct =
                (p1 * p1 + p2).div_exact_int(2).scaled(1, 0, -2 * f);
            REQUIRE(first_mismatch(h, direct, w) == std::nullopt);
        }
    }
    SECTION("grid divisibility for general torus knots") {
        for (auto [m, n] : {std::pair{2, 3}, {3, 4}}) {
            for (const Partition& lambda : {Partition{1}, Partition{2}}) {
                NuTSeries h = homfly(lambda, m, n, 18);
                REQUIRE(h.on_half_t_grid(m));
            }
        }
    }
    SECTION("size cap") {
        REQUIRE_THROWS_AS(homfly({3, 3, 3}, 2, 3, w), size_cap_exceeded);
    }
}

TEST_CASE("wave q-difference equations") {
    REQUIRE(check_wave_qdiff(1, 4, 24) == std::nullopt);
    REQUIRE(check_wave_qdiff(3, 3, 20) == std::nullopt);
}

TEST_CASE("substituted wave function") {
    const long long w = 24;
    SECTION("constant term is 1") {
        XSeries psi = psi_substituted(2, 3, w);
        REQUIRE(psi.coeff(0).coeff(0, 0) == 1);
    }
    SECTION("[x^1] = q^{f-1}(a^2+q)/(1-q^2)") {
        for (int f : {1, 2, 3}) {
            XSeries psi = psi_substituted(f, 2, w);
            QWindowSeries inv = q_invert_unit(
                QWindowSeries::one() - QWindowSeries::monomial(1, 2), w + 2);
            AQCoeff expect = (AQCoeff::monomial(1, 2, f - 1) + AQCoeff::monomial(1, 0, f)) *
                             AQCoeff::from_q(inv);
            REQUIRE(first_mismatch(psi.coeff(1), expect, w) == std::nullopt);
        }
    }
    SECTION("equals h (both routes agreeing internally)") {
        for (int f : {1, 2}) {
            XSeries h = solve_h(f, 4, w);
            XSeries psi = psi_substituted(f, 4, w);
            REQUIRE(first_mismatch(h, psi, 5, w) == std::nullopt);
            REQUIRE(psi.all_nonnegative());
        }
    }
}

TEST_CASE("superpolynomial series") {
    const long long w = 24;
    SECTION("P_0 = 1 and the closed form of P_1") {
        XSeries p = superpoly_series(2, 3, w);
        REQUIRE(p.coeff(0).is_one_like());
        QWindowSeries inv = q_invert_unit(
            QWindowSeries::one() - QWindowSeries::monomial(1, 2), w);
        AQCoeff expect = (AQCoeff::monomial(-1, 2, 2) + AQCoeff::monomial(-1, 0, 3)) *
                         AQCoeff::from_q(inv);
        REQUIRE(first_mismatch(p.coeff(1), expect, w) == std::nullopt);
    }
    SECTION("quantum A-polynomial residual vanishes") {
        REQUIRE(check_pbar_qdiff(1, 4, w) == std::nullopt);
        REQUIRE(check_pbar_qdiff(3, 3, w) == std::nullopt);
    }
}

TEST_CASE("ytilde") {
    const long long w = 24;
    SECTION("constant 1 and the first-order simplification") {
        XSeries y1 = ytilde(1, 1, 3, w);
        REQUIRE(y1.coeff(0).is_one_like());
        // [x^1] ytilde_1 = (q - q^{-1}) P_1 = a^2 + q after the geometric
        // factors cancel against the window.
        AQCoeff expect = AQCoeff::monomial(1, 2, 0) + AQCoeff::monomial(1, 0, 1);
        REQUIRE(first_mismatch(y1.coeff(1), expect, w) == std::nullopt);
    }
    SECTION("range guard") {
        REQUIRE_THROWS_AS(ytilde(2, 4, 2, w), error);
    }
    SECTION("recursion cross-check runs for every i") {
        for (int f : {1, 2})
            for (int i = 1; i <= f + 1; ++i) REQUIRE_NOTHROW(ytilde(f, i, 3, w));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schroder/x_series.hpp"

using namespace schroder;

namespace {

AQCoeff aq(Int c, long long a_exp, long long q_exp) {
    return AQCoeff::monomial(std::move(c), a_exp, q_exp);
}

XSeries random_xseries(std::mt19937& rng, int ord, bool unit_constant = false) {
    std::uniform_int_distribution<int> coef(-3, 3), aexp(0, 3), qexp(-2, 4), nterm(0, 3);
    XSeries f(ord);
    for (int l = 0; l < ord; ++l) {
        AQCoeff acc;
        int t = nterm(rng);
        for (int i = 0; i < t; ++i) acc += aq(coef(rng), 2 * aexp(rng), qexp(rng));
        f.coeff(l) = acc;
    }
    if (unit_constant) f.coeff(0) = AQCoeff::one();
    return f;
}

bool equal_exact(const XSeries& f, const XSeries& g) {
    return !first_mismatch(f, g, std::min(f.x_order(), g.x_order()),
                           QWindowSeries::kExactWindow)
                .has_value();
}

}  // namespace

TEST_CASE("x ring basics") {
    std::mt19937 rng(1);
    XSeries f = random_xseries(rng, 5);
    REQUIRE(equal_exact(XSeries::one(5) * f, f));

    XSeries x(4);
    x.coeff(1) = AQCoeff::one();
    XSeries x2 = x * x;
    REQUIRE(x2.coeff(2).is_one_like());
    REQUIRE(x2.coeff(1).is_zero());
}

TEST_CASE("x ring axioms on random instances") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 60; ++trial) {
        XSeries a = random_xseries(rng, 5);
        XSeries b = random_xseries(rng, 5);
        XSeries c = random_xseries(rng, 5);
        REQUIRE(equal_exact(a + b, b + a));
        REQUIRE(equal_exact(a * b, b * a));
        REQUIRE(equal_exact((a * b) * c, a * (b * c)));
        REQUIRE(equal_exact(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("qshift") {
    XSeries f(3);
    f.coeff(0) = AQCoeff::one();
    f.coeff(1) = aq(1, 2, 0);  // a^2 x
    XSeries g = qshift(f, 2);
    REQUIRE(g.coeff(1).coeff(2, 2) == 1);  // a^2 q^2 x
    REQUIRE(equal_exact(qshift(f, 0), f));
    REQUIRE(equal_exact(qshift(qshift(f, 2), -2), f));

    SECTION("shift exponents compose additively and multiplicatively") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            XSeries a = random_xseries(rng, 4);
            XSeries b = random_xseries(rng, 4);
            REQUIRE(equal_exact(qshift(qshift(a, 3), 4), qshift(a, 7)));
            REQUIRE(equal_exact(qshift(a * b, 5), qshift(a, 5) * qshift(b, 5)));
        }
    }
}

TEST_CASE("x_scale") {
    XSeries f(3);
    f.coeff(0) = AQCoeff::one();
    f.coeff(1) = AQCoeff::one();
    XSeries g = x_scale(f, aq(-1, 0, 0));
    REQUIRE(g.coeff(1).coeff(0, 0) == -1);
    REQUIRE(equal_exact(x_scale(f, AQCoeff::one()), f));
    // scaling by c then by c' with c*c' = 1
    XSeries h = x_scale(x_scale(f, aq(-1, 0, 3)), aq(-1, 0, -3));
    REQUIRE(equal_exact(h, f));
}

TEST_CASE("x_invert") {
    SECTION("geometric") {
        XSeries f(5);
        f.coeff(0) = AQCoeff::one();
        f.coeff(1) = aq(-1, 0, 0);  // 1 - x
        XSeries v = x_invert(f);
        for (int l = 0; l < 5; ++l) REQUIRE(v.coeff(l).is_one_like());
    }
    SECTION("one") {
        REQUIRE(equal_exact(x_invert(XSeries::one(4)), XSeries::one(4)));
    }
    SECTION("non-unit constant") {
        XSeries f(3);
        f.coeff(0) = aq(1, 2, 0);
        f.coeff(1) = AQCoeff::one();
        REQUIRE_THROWS_AS(x_invert(f), non_unit_constant);
    }
    SECTION("random inverse pairs") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            XSeries f = random_xseries(rng, 5, true);
            REQUIRE(equal_exact(f * x_invert(f), XSeries::one(5)));
        }
    }
}

TEST_CASE("x_exp") {
    SECTION("exp(0) = 1") {
        REQUIRE(equal_exact(x_exp(XSeries(4)), XSeries::one(4)));
    }
    SECTION("inexact division is flagged") {
        XSeries f(3);
        f.coeff(1) = AQCoeff::one();  // exp(x) needs 1/2 at x^2
        REQUIRE_THROWS_AS(x_exp(f), inexact_division);
        XSeries g(3);
        g.coeff(1) = aq(2, 0, 0);  // exp(2x) = 1 + 2x + 2x^2 stays integral
        XSeries e = x_exp(g);
        REQUIRE(e.coeff(2).coeff(0, 0) == 2);
    }
    SECTION("exp(F+G) = exp(F) exp(G) when integral") {
        // Coefficients divisible by ord! keep every division exact.
        std::mt19937 rng(23);
        const int ord = 5;
        Int big = factorial(ord) * factorial(ord);
        std::uniform_int_distribution<int> coef(-2, 2), qexp(0, 3);
        for (int trial = 0; trial < 25; ++trial) {
            XSeries f(ord), g(ord);
            for (int l = 1; l < ord; ++l) {
                f.coeff(l) = aq(coef(rng) * big, 0, qexp(rng));
                g.coeff(l) = aq(coef(rng) * big, 2, qexp(rng));
            }
            REQUIRE(equal_exact(x_exp(f + g), x_exp(f) * x_exp(g)));
        }
    }
}

TEST_CASE("windowed evaluation agrees with exact evaluation below its floor") {
    // The soundness contract of the window bookkeeping: run a random
    // expression once over exact inputs and once over truncated inputs;
    // the windowed result must match the exact one everywhere below its
    // certified floor (first_mismatch checks exactly that region).
    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> wdist(1, 12), shift(-3, 3), op(0, 2);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<AQCoeff> exact_in;
        std::vector<AQCoeff> windowed_in;
        std::mt19937 gen(rng());
        for (int i = 0; i < 5; ++i) {
            XSeries tmp = random_xseries(gen, 2);
            AQCoeff v = tmp.coeff(0) + tmp.coeff(1);
            exact_in.push_back(v);
            windowed_in.push_back(v.truncated(wdist(rng)));
        }
        AQCoeff e = exact_in[0], w = windowed_in[0];
        for (int i = 1; i < 5; ++i) {
            int o = op(rng);
            if (o == 0) {
                e = e + exact_in[size_t(i)];
                w = w + windowed_in[size_t(i)];
            } else if (o == 1) {
                e = e * exact_in[size_t(i)];
                w = w * windowed_in[size_t(i)];
            } else {
                long long sh = shift(rng);
                e = e.scaled(1, 2, sh) + exact_in[size_t(i)];
                w = w.scaled(1, 2, sh) + windowed_in[size_t(i)];
            }
        }
        REQUIRE(w.floor() < AQCoeff::kExactWindow);
        REQUIRE(!first_mismatch(e, w, w.floor()).has_value());
    }
}

TEST_CASE("window floors certify cancellations") {
    // (windowed 1) - (windowed 1) is only known to be zero below the window.
    AQCoeff one_w = AQCoeff::from_q(QWindowSeries::one().truncated(6));
    AQCoeff diff = one_w - one_w;
    REQUIRE(diff.is_zero());
    REQUIRE(diff.floor() == 6);
    auto mis = first_mismatch(diff, AQCoeff(), 8);
    REQUIRE(mis.has_value());
    REQUIRE(mis->window_too_small);
    REQUIRE(!first_mismatch(diff, AQCoeff(), 6).has_value());
}

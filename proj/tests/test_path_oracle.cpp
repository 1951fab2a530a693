#include <catch2/catch_amalgamated.hpp>

#include "schroder/path_oracle.hpp"

using namespace schroder;

TEST_CASE("slope (1,1) small sizes") {
    WeightTable t = enum_slope(1, 1, 0, 2);
    // l = 1: the two paths RU and D, weight q + a^2
    REQUIRE(t.count(0, 1, 1) == 1);
    REQUIRE(t.count(1, 0, 1) == 1);
    REQUIRE(t.filtered_l(1).entries.size() == 2);
    // l = 2: a^4 + 2a^2 q + a^2 q^3 + q^2 + q^4, six paths at a = q = 1
    REQUIRE(t.count(2, 0, 2) == 1);
    REQUIRE(t.count(1, 1, 2) == 2);
    REQUIRE(t.count(1, 3, 2) == 1);
    REQUIRE(t.count(0, 2, 2) == 1);
    REQUIRE(t.count(0, 4, 2) == 1);
    REQUIRE(t.total_for_l(2) == 6);
}

TEST_CASE("slope convention for s > mnl") {
    WeightTable t = enum_slope(1, 1, 1, 2);
    REQUIRE(t.total_for_l(0) == 0);   // s = 1 > 0 = mn*0
    REQUIRE(t.total_for_l(1) == 2);   // midway-free paths
    WeightTable big_s = enum_slope(2, 3, 100, 3);
    REQUIRE(big_s.entries.empty());
}

TEST_CASE("slope gcd guard") {
    REQUIRE_THROWS_AS(enum_slope(2, 2, 0, 1), invalid_slope);
    REQUIRE_THROWS_AS(enum_slope(2, 4, 0, 1), invalid_slope);
}

TEST_CASE("classical totals for (1,1)") {
    WeightTable t = enum_slope(1, 1, 0, 4);
    const long long want[] = {1, 2, 6, 22, 90};
    for (int l = 0; l <= 4; ++l) REQUIRE(t.total_for_l(l) == want[l]);
}

TEST_CASE("midway-free closed form") {
    // For s in (mnl - (m+n), mnl] only the corner path and its one-diagonal
    // variant survive.
    for (auto [m, n] : {std::pair{1, 1}, {2, 3}, {3, 4}}) {
        const long long mn = static_cast<long long>(m) * n;
        for (int l = 1; l <= 2; ++l) {
            for (long long s = std::max<long long>(0, mn * l - (m + n) + 1); s <= mn * l;
                 ++s) {
                WeightTable t = enum_slope(m, n, s, l).filtered_l(l);
                REQUIRE(t.entries.size() == 2);
                REQUIRE(t.count(0, mn * (mn * l * l), l) == 1);
                REQUIRE(t.count(1, mn * (mn * l * l - 1), l) == 1);
            }
        }
    }
}

TEST_CASE("bucketed all-s enumeration matches per-s runs") {
    auto tables = enum_slope_all_s(2, 3, 2);
    for (long long s = 0; s <= 6; ++s)
        REQUIRE(tables[size_t(s)].entries == enum_slope(2, 3, s, 2).entries);
}

TEST_CASE("strip basics") {
    SECTION("(f,k,l) = (1,1,1) matches slope (1,1) s=0") {
        WeightTable strip = enum_strip(1, 1, 1);
        WeightTable slope = enum_slope(1, 1, 0, 1);
        REQUIRE(strip.count(0, 1, 1) == 1);
        REQUIRE(strip.count(1, 0, 1) == 1);
        // same counts, A-units differ only by the area denominator (both 2 here)
        REQUIRE(strip.entries == slope.entries);
    }
    SECTION("(f,k,l) = (1,2,1): a^2 + q + a^2 q^2 + q^3") {
        WeightTable t = enum_strip(1, 2, 1).filtered_l(1);
        REQUIRE(t.count(1, 0, 1) == 1);
        REQUIRE(t.count(0, 1, 1) == 1);
        REQUIRE(t.count(1, 2, 1) == 1);
        REQUIRE(t.count(0, 3, 1) == 1);
        REQUIRE(t.entries.size() == 4);
    }
    SECTION("figure-2 entry: n_{4,10,2;5} >= 1 for f = 2") {
        REQUIRE(enum_strip(2, 5, 2).count(2, 10, 2) >= 1);
    }
}

TEST_CASE("slope (1,f) with s=0 equals strip with k=1") {
    for (int f = 1; f <= 3; ++f) {
        WeightTable slope = enum_slope(1, f, 0, 3);
        WeightTable strip = enum_strip(f, 1, 3);
        // slope A-units are f * j; strip A-units are j
        for (const auto& [key, c] : strip.entries) {
            const auto& [d, j, l] = key;
            REQUIRE(slope.count(d, j * f, l) == c);
        }
        REQUIRE(slope.entries.size() == strip.entries.size());
    }
}

TEST_CASE("stabilized strip counts") {
    SECTION("l = 0 is the empty path") {
        WeightTable t = enum_strip_stable(1, 0, 4);
        REQUIRE(t.entries.size() == 1);
        REQUIRE(t.count(0, 0, 0) == 1);
    }
    SECTION("figure-2 entry survives the limit") {
        REQUIRE(enum_strip_stable(2, 2, 12).count(2, 10, 2) >= 1);
    }
    SECTION("stable equals a large-k strip table on the window") {
        WeightTable stable = enum_strip_stable(1, 2, 10);
        WeightTable big = enum_strip(1, 40, 2);
        for (const auto& [key, c] : stable.entries)
            REQUIRE(big.count(std::get<0>(key), std::get<1>(key), std::get<2>(key)) == c);
    }
}

TEST_CASE("table_to_series") {
    SECTION("slope (1,1): 1 + (a^2 + q)x") {
        XSeries s = table_to_series(enum_slope(1, 1, 0, 1), 1);
        REQUIRE(s.coeff(0).is_one_like());
        REQUIRE(s.coeff(1).coeff(2, 0) == 1);
        REQUIRE(s.coeff(1).coeff(0, 1) == 1);
    }
    SECTION("empty table gives zero") {
        WeightTable t;
        t.family = PathFamily::slope;
        t.m = 2;
        t.n = 3;
        t.area_unit_den = 12;
        XSeries s = table_to_series(t, 2);
        for (int l = 0; l <= 2; ++l) REQUIRE(s.coeff(l).is_zero());
    }
    SECTION("path weights carry even a-exponents only") {
        XSeries s = table_to_series(enum_slope(2, 3, 0, 2), 2);
        for (int l = 0; l <= 2; ++l) REQUIRE(s.coeff(l).all_even_a());
    }
}

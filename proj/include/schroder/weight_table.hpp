#pragma once

#include <map>
#include <string>
#include <tuple>

#include "schroder/bigint.hpp"
#include "schroder/errors.hpp"
#include "schroder/x_series.hpp"

namespace schroder {

enum class PathFamily { slope, strip, strip_stable };

inline std::string family_name(PathFamily f) {
    switch (f) {
        case PathFamily::slope: return "slope";
        case PathFamily::strip: return "strip";
        default: return "strip_stable";
    }
}

// Exact path counts keyed by (diagonal-step count d, scaled area A, size l).
// The scaled area unit is 1/(2mn) for the slope family and 1/2 for the
// slope-1/f strip families, so A is always an integer.
struct WeightTable {
    // (d, A, l) -> count
    using Key = std::tuple<int, long long, int>;

    PathFamily family = PathFamily::slope;
    int m = 1;
    int n = 1;              // for strip families this is f, with m == 1
    long long s_or_k = 0;   // slope: s; strip: k; strip_stable: -1
    int area_unit_den = 2;  // area unit is 1/area_unit_den
    int lmax = 0;
    long long jmax = -1;    // strip_stable only: counts kept for j <= jmax
    std::map<Key, Int> entries;

    void add(int d, long long a_scaled, int l, const Int& c = Int(1)) {
        if (c == 0) return;
        auto [it, fresh] = entries.emplace(Key{d, a_scaled, l}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) entries.erase(it);
        }
    }

    Int count(int d, long long a_scaled, int l) const {
        auto it = entries.find(Key{d, a_scaled, l});
        return it == entries.end() ? Int(0) : it->second;
    }

    WeightTable filtered_l(int l) const {
        WeightTable t = *this;
        t.entries.clear();
        for (const auto& [k, c] : entries)
            if (std::get<2>(k) == l) t.entries.emplace(k, c);
        return t;
    }

    Int total_for_l(int l) const {
        Int r = 0;
        for (const auto& [k, c] : entries)
            if (std::get<2>(k) == l) r += c;
        return r;
    }
};

// Generating function of a weight table: [x^l] = sum count * a^{2d} * q^j
// with j = A * area_unit * 2.  Slope and strip tables give exact
// polynomials; stabilized tables are windowed at j <= jmax.
inline XSeries table_to_series(const WeightTable& t, int lmax) {
    const long long den =
        t.family == PathFamily::slope ? static_cast<long long>(t.m) * t.n : 1;
    XSeries r(lmax + 1);
    const bool windowed = t.family == PathFamily::strip_stable;
    if (windowed)
        for (int l = 0; l <= lmax; ++l)
            r.coeff(l) = AQCoeff::from_q(QWindowSeries::zero(t.jmax + 1));
    for (const auto& [key, c] : t.entries) {
        const auto& [d, a_scaled, l] = key;
        if (l > lmax) continue;
        if (a_scaled % den != 0)
            throw non_integral_exponent("scaled area " + std::to_string(a_scaled) +
                                        " not divisible by " + std::to_string(den));
        long long j = a_scaled / den;
        AQCoeff term = AQCoeff::monomial(c, 2 * d, j);
        if (windowed) term = term.truncated(t.jmax + 1);
        r.coeff(l) += term;
    }
    return r;
}

}  // namespace schroder

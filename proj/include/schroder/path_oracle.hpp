#pragma once

#include <numeric>

#include "schroder/weight_table.hpp"

namespace schroder {

namespace detail {

// Shared walker for the slope-m/n family.  Enumerates every monotone
// R/U/D path from (0,0) to (n*l, m*l) weakly below n*y <= m*x and reports
// (d, j, S) per path, where j is the area index (area between path and
// line is j/2) and S = min over midway vertices of (m*x - n*y), or
// long long max when the path has no midway point.  A path is admissible
// for parameter s exactly when s <= S.
//
// Midway points are the vertices with x != n*l and y != 0; interiors of
// diagonal steps are exempt (the decomposition arguments split paths at
// lattice points only).
template <typename Emit>
void walk_slope(int m, int n, int l, Emit&& emit) {
    const long long xe = static_cast<long long>(n) * l;
    const long long ye = static_cast<long long>(m) * l;
    const long long no_midway = std::numeric_limits<long long>::max();
    // j = m*n*l^2 - a2 where a2 accumulates 2r per right step at height r
    // and 2r+1 per diagonal step leaving height r.
    struct Frame {
        long long x, y, a2, smin;
        int d;
    };
    const long long jbase = static_cast<long long>(m) * n * l * l;

    // Explicit stack DFS; paths can number in the millions.
    std::vector<Frame> stack;
    stack.push_back({0, 0, 0, no_midway, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.x == xe && f.y == ye) {
            emit(f.d, jbase - f.a2, f.smin);
            continue;
        }
        auto push = [&](long long nx, long long ny, long long a2, int d) {
            if (nx > xe || ny > ye) return;
            if (n * ny > m * nx) return;
            long long smin = f.smin;
            if (nx != xe && ny != 0) smin = std::min(smin, m * nx - n * ny);
            stack.push_back({nx, ny, a2, smin, d});
        };
        push(f.x + 1, f.y, f.a2 + 2 * f.y, f.d);          // right
        push(f.x, f.y + 1, f.a2, f.d);                    // up
        push(f.x + 1, f.y + 1, f.a2 + 2 * f.y + 1, f.d + 1);  // diagonal
    }
}

}  // namespace detail

// Ground-truth enumeration of the slope-m/n family: paths of size l <= lmax
// whose midway points stay weakly below n*y <= m*x - s.  Entries with
// s > m*n*l are absent by convention.
inline WeightTable enum_slope(int m, int n, long long s, int lmax) {
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
        throw invalid_slope("need coprime positive m, n; got m=" + std::to_string(m) +
                            " n=" + std::to_string(n));
    if (s < 0 || lmax < 0) throw error("enum_slope: need s >= 0 and lmax >= 0");
    WeightTable t;
    t.family = PathFamily::slope;
    t.m = m;
    t.n = n;
    t.s_or_k = s;
    t.area_unit_den = 2 * m * n;
    t.lmax = lmax;
    const long long mn = static_cast<long long>(m) * n;
    for (int l = 0; l <= lmax; ++l) {
        if (s > mn * l) continue;  // convention: these counts vanish
        detail::walk_slope(m, n, l, [&](int d, long long j, long long smin) {
            if (s <= smin) t.add(d, mn * j, l);
        });
    }
    return t;
}

// All slope tables for 0 <= s <= m*n in one enumeration pass, bucketing
// each path by the largest s it still satisfies.
inline std::vector<WeightTable> enum_slope_all_s(int m, int n, int lmax) {
    if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
        throw invalid_slope("need coprime positive m, n");
    const long long mn = static_cast<long long>(m) * n;
    std::vector<WeightTable> tables;
    for (long long s = 0; s <= mn; ++s) {
        WeightTable t;
        t.family = PathFamily::slope;
        t.m = m;
        t.n = n;
        t.s_or_k = s;
        t.area_unit_den = 2 * m * n;
        t.lmax = lmax;
        tables.push_back(std::move(t));
    }
    for (int l = 0; l <= lmax; ++l) {
        detail::walk_slope(m, n, l, [&](int d, long long j, long long smin) {
            long long cap = std::min<long long>(mn, std::min<long long>(smin, mn * l));
            for (long long s = 0; s <= cap; ++s) tables[size_t(s)].add(d, mn * j, l);
        });
    }
    return tables;
}

// Strip family: paths from (0,0) that reach height l at abscissa
// <= f*l + k - 1, weakly below f*y <= x, followed by right steps forever.
// The area index j is the doubled area between path, the line y = x/f and
// the cap y = l; trailing right steps at the top contribute nothing.
inline WeightTable enum_strip(int f, long long k, int lmax) {
    if (f < 1 || k < 1) throw error("enum_strip: need f >= 1 and k >= 1");
    if (lmax < 0) throw error("enum_strip: need lmax >= 0");
    WeightTable t;
    t.family = PathFamily::strip;
    t.m = 1;
    t.n = f;
    t.s_or_k = k;
    t.area_unit_den = 2;
    t.lmax = lmax;
    for (int l = 0; l <= lmax; ++l) {
        const long long xcap = static_cast<long long>(f) * l + k - 1;
        struct Frame {
            long long x, y, j;
            int d;
        };
        std::vector<Frame> stack;
        stack.push_back({0, 0, 0, 0});
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            if (fr.y == l) {
                t.add(fr.d, fr.j, l);
                continue;
            }
            auto push = [&](long long nx, long long ny, long long j, int d) {
                if (nx > xcap) return;
                if (static_cast<long long>(f) * ny > nx) return;
                stack.push_back({nx, ny, j, d});
            };
            // Band contribution: an up step at abscissa c crossing band r
            // adds 2c - f(2r+1); a diagonal step adds 2c+1 - f(2r+1).
            push(fr.x + 1, fr.y, fr.j, fr.d);
            push(fr.x, fr.y + 1, fr.j + 2 * fr.x - f * (2 * fr.y + 1), fr.d);
            push(fr.x + 1, fr.y + 1, fr.j + 2 * fr.x + 1 - f * (2 * fr.y + 1), fr.d + 1);
        }
    }
    return t;
}

// Stabilized strip counts n_{i,j,l;infinity} on the window j <= jmax:
// enum_strip for growing k until two consecutive k agree on the window.
// Monotonicity in k is asserted along the way.  The bound k <= jmax + f + 2
// is a diagnostic guard, not a proven cutoff; reaching it raises instead of
// silently truncating.
inline WeightTable enum_strip_stable(int f, int lmax, long long jmax) {
    if (jmax < 0) throw error("enum_strip_stable: need jmax >= 0");
    auto window = [&](const WeightTable& t) {
        WeightTable w = t;
        w.entries.clear();
        for (const auto& [key, c] : t.entries)
            if (std::get<1>(key) <= jmax) w.entries.emplace(key, c);
        return w;
    };
    const long long kcap = jmax + f + 2;
    WeightTable prev = window(enum_strip(f, 1, lmax));
    for (long long k = 2; k <= kcap; ++k) {
        WeightTable cur = window(enum_strip(f, k, lmax));
        for (const auto& [key, c] : prev.entries)
            if (cur.count(std::get<0>(key), std::get<1>(key), std::get<2>(key)) < c)
                throw error("strip counts not monotone in k");
        if (cur.entries == prev.entries) {
            cur.family = PathFamily::strip_stable;
            cur.s_or_k = -1;
            cur.jmax = jmax;
            return cur;
        }
        prev = std::move(cur);
    }
    throw stabilization_failure("strip counts did not stabilize by k = " +
                                std::to_string(kcap));
}

}  // namespace schroder

#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "schroder/io.hpp"
#include "schroder/jacobi_trudi.hpp"
#include "schroder/slope_family.hpp"
#include "schroder/strip_solver.hpp"
#include "schroder/torus_knot.hpp"

namespace schroder {

// Locator of the first differing monomial of a failed check, plus a free
// text note for structural failures (exceptions, window shortfalls).
struct Discrepancy {
    std::optional<long long> x, a, q;
    std::string expected;
    std::string got;
    std::string note;
};

struct VerificationReport {
    std::string check;
    json params;
    bool pass = false;
    std::optional<Discrepancy> discrepancy;
    double ms = 0.0;
    int criterion = 0;  // acceptance criterion this check belongs to (0 = none)
};

inline json report_to_json(const VerificationReport& r) {
    json d = nullptr;
    if (r.discrepancy) {
        d = json::object();
        if (r.discrepancy->x) d["x"] = *r.discrepancy->x;
        if (r.discrepancy->a) d["a"] = *r.discrepancy->a;
        if (r.discrepancy->q) d["q"] = *r.discrepancy->q;
        if (!r.discrepancy->expected.empty()) d["expected"] = r.discrepancy->expected;
        if (!r.discrepancy->got.empty()) d["got"] = r.discrepancy->got;
        if (!r.discrepancy->note.empty()) d["note"] = r.discrepancy->note;
    }
    return json{{"check", r.check},
                {"params", r.params},
                {"status", r.pass ? "pass" : "fail"},
                {"discrepancy", std::move(d)},
                {"ms", r.ms}};
}

inline Discrepancy from_mismatch(const XMismatch& m) {
    Discrepancy d;
    d.x = m.x_exp;
    d.a = m.a_exp;
    d.q = m.q_exp;
    if (m.window_too_small) {
        d.note = "window too small to certify";
    } else {
        d.expected = m.expected.str();
        d.got = m.got.str();
    }
    return d;
}

inline Discrepancy from_mismatch(const NuTMismatch& m) {
    Discrepancy d;
    d.a = m.u_exp;
    d.q = m.sigma_exp;
    if (m.window_too_small) {
        d.note = "window too small to certify";
    } else {
        d.expected = m.expected.str();
        d.got = m.got.str();
    }
    return d;
}

// Entry-wise comparison of two weight tables; the locator is reported in
// monomial coordinates (x = l, a = 2d, q = area index j).
inline std::optional<Discrepancy> compare_tables(const WeightTable& expected,
                                                 const WeightTable& got) {
    auto as_monomial = [](const WeightTable& t, const WeightTable::Key& k) {
        const auto& [d, a, l] = k;
        long long j = 2 * a / t.area_unit_den;
        return std::tuple<int, int, long long>(l, 2 * d, j);
    };
    std::map<std::tuple<int, int, long long>, std::pair<Int, Int>> merged;
    for (const auto& [k, c] : expected.entries) merged[as_monomial(expected, k)].first = c;
    for (const auto& [k, c] : got.entries) merged[as_monomial(got, k)].second = c;
    for (const auto& [key, pair] : merged) {
        if (pair.first != pair.second) {
            Discrepancy d;
            d.x = std::get<0>(key);
            d.a = std::get<1>(key);
            d.q = std::get<2>(key);
            d.expected = pair.first.str();
            d.got = pair.second.str();
            return d;
        }
    }
    return std::nullopt;
}

using CheckBody = std::function<std::optional<Discrepancy>()>;

struct CheckItem {
    std::string check;
    json params;
    int criterion = 0;
    CheckBody body;
};

// A deterministic batch of checks.  Items run in a small worker pool
// (capped by SCHRODER_THREADS); report order always matches insertion
// order, so two runs differ only in timing fields.
class CheckSet {
public:
    void add(std::string check, json params, int criterion, CheckBody body) {
        items_.push_back({std::move(check), std::move(params), criterion, std::move(body)});
    }

    size_t size() const { return items_.size(); }

    std::vector<VerificationReport> run(int threads = 0) const {
        if (threads <= 0) threads = default_thread_cap();
        threads = std::min<int>(threads, static_cast<int>(items_.size()));
        std::vector<VerificationReport> out(items_.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t i = next++; i < items_.size(); i = next++)
                out[i] = run_one(items_[i]);
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(threads));
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        return out;
    }

    static int default_thread_cap() {
        if (const char* env = std::getenv("SCHRODER_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return std::min(v, 64);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
    }

private:
    static VerificationReport run_one(const CheckItem& item) {
        VerificationReport r;
        r.check = item.check;
        r.params = item.params;
        r.criterion = item.criterion;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.discrepancy = item.body();
            r.pass = !r.discrepancy.has_value();
        } catch (const std::exception& e) {
            // Internal arithmetic errors surface as failures, never as a
            // silent pass.
            Discrepancy d;
            d.note = e.what();
            r.discrepancy = std::move(d);
            r.pass = false;
        }
        auto t1 = std::chrono::steady_clock::now();
        r.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    }

    std::vector<CheckItem> items_;
};

// ---------------------------------------------------------------------
// Check bodies.
// ---------------------------------------------------------------------

// Solver counts equal brute-force counts for every 0 <= s <= mn.
inline std::optional<Discrepancy> verify_oracle_vs_solver(int m, int n, int lmax) {
    SlopeFamily fam = solve_slope(m, n, lmax);
    std::vector<WeightTable> oracle = enum_slope_all_s(m, n, lmax);
    for (long long s = 0; s <= fam.mn(); ++s) {
        if (auto d = compare_tables(oracle[size_t(s)], fam.table(s))) {
            d->note = "s=" + std::to_string(s);
            return d;
        }
    }
    return std::nullopt;
}

// The solved family satisfies the three q-difference equations and the
// collapsed product identity for m | s or n | s.
inline std::optional<Discrepancy> verify_slope_equations(int m, int n, int lmax) {
    SlopeFamily fam = solve_slope(m, n, lmax);
    if (auto mis = check_slope_equations(fam)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "q-difference system residual";
        return d;
    }
    if (auto mis = check_collapsed_products(fam)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "collapsed product identity";
        return d;
    }
    return std::nullopt;
}

// Midway-free closed form: for s in (mnl - (m+n), mnl] the only paths are
// the corner path and its single-diagonal variant.
inline std::optional<Discrepancy> verify_base_case(int m, int n, int lmax) {
    const long long mn = static_cast<long long>(m) * n;
    for (int l = 0; l <= lmax; ++l) {
        const long long hi = mn * l;
        const long long lo = std::max<long long>(0, hi - (m + n) + 1);
        for (long long s = lo; s <= hi; ++s) {
            WeightTable got = enum_slope(m, n, s, l).filtered_l(l);
            WeightTable want = got;
            want.entries.clear();
            want.add(0, mn * (mn * l * l), l);
            if (l >= 1) want.add(1, mn * (mn * l * l - 1), l);
            if (auto d = compare_tables(want, got)) {
                d->note = "s=" + std::to_string(s) + " l=" + std::to_string(l);
                return d;
            }
        }
    }
    return std::nullopt;
}

// a = q = 1 totals of y^[0] for slope (1,1): solver evaluation must equal
// the enumerator's own unweighted totals, and both the frozen reference
// 1, 2, 6, 22, 90.
inline std::optional<Discrepancy> verify_classical_totals(int lmax) {
    static const long long frozen[] = {1, 2, 6, 22, 90};
    SlopeFamily fam = solve_slope(1, 1, lmax);
    WeightTable oracle = enum_slope(1, 1, 0, lmax);
    for (int l = 0; l <= lmax; ++l) {
        Int from_solver = fam.series(0).coeff(l).value_at_one();
        Int from_oracle = oracle.total_for_l(l);
        Int expect = l < 5 ? Int(frozen[l]) : from_oracle;
        if (from_solver != from_oracle || from_solver != expect) {
            Discrepancy d;
            d.x = l;
            d.expected = expect.str();
            d.got = from_solver.str();
            d.note = "oracle total " + from_oracle.str();
            return d;
        }
    }
    return std::nullopt;
}

// Strip solver equals the strip enumerator for k <= kmax, and y_1 equals
// y^[0] of the slope-(1,f) solver.
inline std::optional<Discrepancy> verify_strip_family(int f, int kmax, int lmax) {
    std::vector<XSeries> y = solve_y_family(f, kmax, lmax);
    const auto exact = QWindowSeries::kExactWindow;
    for (int k = 1; k <= kmax; ++k) {
        XSeries oracle = table_to_series(enum_strip(f, k, lmax), lmax);
        if (auto mis = first_mismatch(oracle, y[size_t(k)], lmax + 1, exact)) {
            Discrepancy d = from_mismatch(*mis);
            d.note = "k=" + std::to_string(k);
            return d;
        }
    }
    SlopeFamily slope = solve_slope(1, f, lmax);
    if (auto mis = first_mismatch(slope.series(0), y[1], lmax + 1, exact)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "y_1 vs y^[0] of slope (1," + std::to_string(f) + ")";
        return d;
    }
    return std::nullopt;
}

// Monotonicity in k and the row-count bound n <= max{(j-f+2)^l, 0} on the
// whole enumerated window, and stabilization within the diagnostic bound.
inline std::optional<Discrepancy> verify_strip_bounds(int f, int lmax, long long jmax) {
    auto ipow = [](long long b, int e) {
        Int r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;  // 0^0 == 1
    };
    const long long kcap = jmax + f + 2;
    WeightTable prev;
    for (long long k = 1; k <= kcap; ++k) {
        WeightTable cur = enum_strip(f, k, lmax);
        for (const auto& [key, c] : cur.entries) {
            const auto& [d, a, l] = key;
            if (a > jmax) continue;
            Int bound = a - f + 2 <= 0 && l > 0 ? Int(0) : ipow(a - f + 2, l);
            if (c > bound) {
                Discrepancy dd;
                dd.x = l;
                dd.a = 2 * d;
                dd.q = a;
                dd.expected = "<= " + bound.str();
                dd.got = c.str();
                dd.note = "k=" + std::to_string(k);
                return dd;
            }
            if (k > 1) {
                Int prev_c = prev.count(d, a, l);
                if (prev_c > c) {
                    Discrepancy dd;
                    dd.x = l;
                    dd.a = 2 * d;
                    dd.q = a;
                    dd.expected = ">= " + prev_c.str();
                    dd.got = c.str();
                    dd.note = "monotonicity at k=" + std::to_string(k);
                    return dd;
                }
            }
        }
        prev = std::move(cur);
    }
    // Stabilized table must agree with enum_strip at the stabilizing k.
    WeightTable stable = enum_strip_stable(f, lmax, jmax);
    for (const auto& [key, c] : stable.entries) {
        if (prev.count(std::get<0>(key), std::get<1>(key), std::get<2>(key)) != c) {
            Discrepancy dd;
            dd.x = std::get<2>(key);
            dd.note = "stabilized entry differs from k=" + std::to_string(kcap);
            return dd;
        }
    }
    return std::nullopt;
}

// The four-term functional equation of y_infinity and the corollary
// h(x) * y_infinity(-x) = 1.
inline std::optional<Discrepancy> verify_yinf(int f, int xorder, long long qorder) {
    const int lmax = xorder - 1;
    XSeries yinf = solve_yinf(f, lmax, qorder);
    XSeries residual = yinf_equation_residual(yinf, f);
    if (auto mis = first_mismatch(residual, XSeries(xorder), xorder, qorder)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "functional equation residual";
        return d;
    }
    XSeries h = solve_h(f, lmax, qorder);
    XSeries prod = h * x_scale(yinf, AQCoeff::monomial(-1, 0, 0));
    if (auto mis = first_mismatch(prod, XSeries::one(xorder), xorder, qorder)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "h(x) * y_inf(-x) != 1";
        return d;
    }
    return std::nullopt;
}

// h equals the substituted wave function (whose two internal routes must
// also agree; a route mismatch surfaces as an exception -> failure).
inline std::optional<Discrepancy> verify_prop12(int f, int xorder, long long qorder) {
    const int lmax = xorder - 1;
    XSeries h = solve_h(f, lmax, qorder);
    XSeries psi = psi_substituted(f, lmax, qorder);
    if (auto mis = first_mismatch(h, psi, xorder, qorder)) return from_mismatch(*mis);
    return std::nullopt;
}

// y_i equals the superpolynomial ratio ytilde_i for 1 <= i <= f+1.
inline std::optional<Discrepancy> verify_prop13(int f, int xorder, long long qorder) {
    const int lmax = xorder - 1;
    std::vector<XSeries> y = solve_y_family(f, f + 1, lmax);
    for (int i = 1; i <= f + 1; ++i) {
        XSeries yt = ytilde(f, i, lmax, qorder);
        if (auto mis = first_mismatch(y[size_t(i)], yt, xorder, qorder)) {
            Discrepancy d = from_mismatch(*mis);
            d.note = "i=" + std::to_string(i);
            return d;
        }
    }
    return std::nullopt;
}

// Every coefficient of h and of the substituted wave function in the
// window is a non-negative integer.
inline std::optional<Discrepancy> verify_nonneg(int f, int xorder, long long qorder) {
    const int lmax = xorder - 1;
    XSeries h = solve_h(f, lmax, qorder);  // solve_h raises on negatives
    XSeries psi = psi_substituted(f, lmax, qorder);
    for (const XSeries* s : {&h, &psi}) {
        if (!s->all_nonnegative()) {
            Discrepancy d;
            d.note = s == &h ? "negative coefficient in h" : "negative coefficient in psi";
            return d;
        }
    }
    return std::nullopt;
}

// adams_coeffs(lambda, 1) is the Kronecker delta.
inline std::optional<Discrepancy> verify_adams_delta(int size_cap) {
    CharacterTable chars;
    for (int n = 0; n <= size_cap; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            auto c = adams_coeffs(lambda, 1, chars, size_cap);
            bool ok = c.size() == 1 && c.begin()->first == lambda && c.begin()->second == 1;
            if (n == 0) ok = c.empty() || ok;
            if (!ok) {
                Discrepancy d;
                d.note = "adams(" + partition_to_string(lambda) + ", 1) not delta";
                return d;
            }
        }
    return std::nullopt;
}

// Character route equals the explicit Jacobi-Trudi substitution oracle.
inline std::optional<Discrepancy> verify_adams_vs_jt(int max_size, int max_m) {
    CharacterTable chars;
    for (int n = 1; n <= max_size; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int m = 1; m <= max_m; ++m) {
                auto fast = adams_coeffs(lambda, m, chars, m * n);
                auto slow = adams_coeffs_jt_oracle(lambda, m);
                bool ok = fast.size() == slow.size();
                if (ok)
                    for (const auto& [mu, c] : slow) {
                        auto it = fast.find(mu);
                        if (it == fast.end() || Rational(it->second) != c) {
                            ok = false;
                            break;
                        }
                    }
                if (!ok) {
                    Discrepancy d;
                    d.note = "C^" + partition_to_string(lambda) + "_{mu," +
                             std::to_string(m) + "} differs from Jacobi-Trudi oracle";
                    return d;
                }
            }
    return std::nullopt;
}

// Wave-function q-difference equations (A and psi) for T_{1,f}.
inline std::optional<Discrepancy> verify_wave_qdiff(int f, int kmax, long long qorder) {
    if (auto fail = check_wave_qdiff(f, kmax, qorder)) {
        Discrepancy d = from_mismatch(fail->mismatch);
        d.x = fail->k;
        d.note = fail->equation + "-equation residual";
        return d;
    }
    return std::nullopt;
}

// H_lambda lies on the t^{1/2} grid (checked inside homfly; rechecked here).
inline std::optional<Discrepancy> verify_grid(int m, int n,
                                              const std::vector<Partition>& lambdas,
                                              long long window) {
    for (const Partition& lambda : lambdas) {
        NuTSeries h = homfly(lambda, m, n, window);
        if (!h.on_half_t_grid(m)) {
            Discrepancy d;
            d.note = "H_" + partition_to_string(lambda) + " off the t^{1/2} grid";
            return d;
        }
    }
    return std::nullopt;
}

// Quantum-A-polynomial equation for the superpolynomial series, plus the
// closed form of the first coefficient.
inline std::optional<Discrepancy> verify_pbar(int f, int rmax, long long qorder) {
    if (auto mis = check_pbar_qdiff(f, rmax, qorder)) {
        Discrepancy d = from_mismatch(*mis);
        d.note = "quantum A-polynomial residual";
        return d;
    }
    XSeries p = superpoly_series(f, 1, qorder);
    QWindowSeries inv =
        q_invert_unit(QWindowSeries::one() - QWindowSeries::monomial(1, 2), qorder);
    AQCoeff expect = (AQCoeff::monomial(-1, 2, f) + AQCoeff::monomial(-1, 0, f + 1)) *
                     AQCoeff::from_q(inv);
    if (auto mis = first_mismatch(p.coeff(1), expect, qorder)) {
        Discrepancy d;
        d.a = mis->a_exp;
        d.q = mis->q_exp;
        d.expected = mis->expected.str();
        d.got = mis->got.str();
        d.note = "P_1 closed form";
        return d;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Desk profile: the fixed parameter grid the acceptance suite runs.
// ---------------------------------------------------------------------

inline CheckSet desk_profile() {
    CheckSet cs;
    struct Pair {
        int m, n, lmax;
    };
    const std::vector<Pair> pairs = {{1, 1, 4}, {1, 2, 4}, {1, 3, 4}, {2, 3, 3}, {3, 4, 3}};

    for (const auto& p : pairs)
        cs.add("oracle", json{{"m", p.m}, {"n", p.n}, {"lmax", p.lmax}}, 1,
               [=] { return verify_oracle_vs_solver(p.m, p.n, p.lmax); });
    for (const auto& p : pairs)
        cs.add("basecase", json{{"m", p.m}, {"n", p.n}, {"lmax", p.lmax}}, 2,
               [=] { return verify_base_case(p.m, p.n, p.lmax); });
    cs.add("totals", json{{"lmax", 4}}, 3, [] { return verify_classical_totals(4); });
    for (const auto& p : std::vector<Pair>{{2, 3, 3}, {3, 4, 3}})
        cs.add("slope-eqs", json{{"m", p.m}, {"n", p.n}, {"lmax", p.lmax}}, 4,
               [=] { return verify_slope_equations(p.m, p.n, p.lmax); });
    for (int f : {1, 2, 3})
        cs.add("strip-family", json{{"f", f}, {"kmax", f + 2}, {"lmax", 3}}, 5,
               [=] { return verify_strip_family(f, f + 2, 3); });
    for (int f : {1, 2})
        cs.add("strip-bounds", json{{"f", f}, {"lmax", 3}, {"jmax", 16}}, 6,
               [=] { return verify_strip_bounds(f, 3, 16); });
    for (int f : {1, 2})
        cs.add("yinf", json{{"f", f}, {"xorder", 4}, {"qorder", 32}}, 7,
               [=] { return verify_yinf(f, 4, 32); });
    for (int f : {1, 2, 3})
        cs.add("prop12", json{{"f", f}, {"xorder", 6}, {"qorder", 40}}, 8,
               [=] { return verify_prop12(f, 6, 40); });
    for (int f : {1, 2, 3})
        cs.add("prop13", json{{"f", f}, {"xorder", 5}, {"qorder", 40}}, 9,
               [=] { return verify_prop13(f, 5, 40); });
    for (int f : {1, 2, 3})
        cs.add("nonneg", json{{"f", f}, {"xorder", 6}, {"qorder", 40}}, 10,
               [=] { return verify_nonneg(f, 6, 40); });
    cs.add("adams-delta", json{{"size_cap", 4}}, 11, [] { return verify_adams_delta(4); });
    cs.add("adams-jt", json{{"max_size", 3}, {"max_m", 3}}, 11,
           [] { return verify_adams_vs_jt(3, 3); });
    for (int f : {1, 2, 3})
        cs.add("wave-qdiff", json{{"f", f}, {"kmax", 4}, {"qorder", 32}}, 11,
               [=] { return verify_wave_qdiff(f, 4, 32); });
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}})
        cs.add("grid", json{{"m", m}, {"n", n}, {"partitions", "1;2"}, {"qorder", 24}}, 11,
               [=] { return verify_grid(m, n, {Partition{1}, Partition{2}}, 24); });
    for (int f : {1, 2, 3})
        cs.add("pbar", json{{"f", f}, {"rmax", 5}, {"qorder", 40}}, 12,
               [=] { return verify_pbar(f, 5, 40); });
    return cs;
}

inline const char* criterion_title(int c) {
    switch (c) {
        case 1: return "oracle-vs-solver equality for the slope families";
        case 2: return "midway-free closed form";
        case 3: return "classical totals at a = q = 1";
        case 4: return "collapsed product identity and q-difference system";
        case 5: return "strip solver vs enumerator and slope remark";
        case 6: return "strip count monotonicity and row bound";
        case 7: return "y_inf functional equation and h * y_inf(-x) = 1";
        case 8: return "h equals the substituted wave function";
        case 9: return "y_i equals the superpolynomial ratio";
        case 10: return "non-negativity of h and psi coefficients";
        case 11: return "knot-side internal checks";
        case 12: return "superpolynomial q-difference equation";
        default: return "";
    }
}

}  // namespace schroder

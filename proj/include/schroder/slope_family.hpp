#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "schroder/path_oracle.hpp"
#include "schroder/x_series.hpp"

namespace schroder {

// alpha_s, beta_s and eps_s for 0 < s < m*n:
//   0 <= alpha < n,  alpha*m == s (mod n)
//   0 <= beta  < m,  beta*n  == s (mod m)
//   eps = (alpha*m + beta*n - s) / (m*n), always 0 or 1.
struct SlopeConstants {
    long long alpha = 0;
    long long beta = 0;
    long long eps = 0;
};

inline SlopeConstants slope_constants(int m, int n, long long s) {
    SlopeConstants c;
    for (long long a = 0; a < n; ++a)
        if ((a * m - s) % n == 0) {
            c.alpha = a;
            break;
        }
    for (long long b = 0; b < m; ++b)
        if ((b * n - s) % m == 0) {
            c.beta = b;
            break;
        }
    long long num = c.alpha * m + c.beta * n - s;
    long long mn = static_cast<long long>(m) * n;
    if (num % mn != 0) throw error("slope_constants: eps not integral");
    c.eps = num / mn;
    if (c.eps != 0 && c.eps != 1) throw error("slope_constants: eps outside {0,1}");
    return c;
}

// The solved family of generating functions y^[0], ..., y^[mn] of the
// slope-m/n paths, computed from the coefficient recurrences that underlie
// the q-difference system:
//
//   n^[s]_{i,j,l} = n^[s+1]_{i,j,l} + delta + (triple convolution over
//                   l_- + l_0 + l_+ = l + eps_s, l_-, l_+ >= 1)
//   n^[mn]_{i,j,l} = n^[0]_{i, j-(2l-1)mn, l-1} + delta_{i,2} delta_{j,mn-1}
//                    delta_{l,1}
//
// The recursion terminates by the descent argument: eps_s = 0 forces
// strictly smaller sizes, eps_s = 1 strictly larger s at size <= l.  All
// area bookkeeping is integral: the shift of the convolution, expressed in
// 1/(2mn) units, is divisible by mn, which is asserted.
//
// Weights per (s, l) are exact polynomials in a and q (q-exponent = the
// area index j).  The term with eps_s = 1 carries x^{-1}; it is realized
// purely at index level (the decomposition of l + 1), never as a series
// division.
class SlopeFamily {
public:
    SlopeFamily(int m, int n, int lmax) : m_(m), n_(n), lmax_(lmax) {
        if (m <= 0 || n <= 0 || std::gcd(m, n) != 1)
            throw invalid_slope("need coprime positive m, n");
        const long long mn = static_cast<long long>(m) * n;
        memo_.assign(static_cast<size_t>(mn + 1),
                     std::vector<std::optional<AQCoeff>>(static_cast<size_t>(lmax + 1)));
        for (long long s = 0; s <= mn; ++s)
            for (int l = 0; l <= lmax; ++l) weight(s, l);
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int lmax() const { return lmax_; }
    long long mn() const { return static_cast<long long>(m_) * n_; }

    // Weight polynomial sum_{i,j} n^[s]_{i,j,l} a^i q^j.
    const AQCoeff& weight(long long s, int l) {
        auto& cell = memo_[static_cast<size_t>(s)][static_cast<size_t>(l)];
        if (cell) return *cell;
        if (++depth_ > kDepthGuard)
            throw recursion_guard_tripped("slope recursion exceeded depth guard");
        AQCoeff w = compute(s, l);
        if (!w.all_nonnegative())
            throw negative_count("negative count in y^[" + std::to_string(s) + "] at l=" +
                                 std::to_string(l));
        --depth_;
        cell = std::move(w);
        return *cell;
    }

    // y^[s] as an exact polynomial series in x (q-exponent = area index j).
    XSeries series(long long s) const {
        XSeries r(lmax_ + 1);
        for (int l = 0; l <= lmax_; ++l) r.coeff(l) = *memo_[size_t(s)][size_t(l)];
        return r;
    }

    // Counts in the scaled-area units of the weight tables (A = mn * j).
    WeightTable table(long long s) const {
        WeightTable t;
        t.family = PathFamily::slope;
        t.m = m_;
        t.n = n_;
        t.s_or_k = s;
        t.area_unit_den = 2 * m_ * n_;
        t.lmax = lmax_;
        for (int l = 0; l <= lmax_; ++l)
            for (const auto& [a_exp, qs] : memo_[size_t(s)][size_t(l)]->terms())
                qs.for_each_term([&](long long j, const Int& c) {
                    if (a_exp % 2 != 0) throw error("odd a-exponent in path weight");
                    t.add(static_cast<int>(a_exp / 2), j * mn(), l, c);
                });
        return t;
    }

private:
    static constexpr int kDepthGuard = 200000;

    AQCoeff compute(long long s, int l) {
        const long long mn = this->mn();
        if (l == 0) return s == 0 ? AQCoeff::one() : AQCoeff();
        if (s == mn) {
            // n^[mn]_{i,j,l} = n^[0]_{i, j - (2l-1)mn, l-1} + corner term
            AQCoeff w = weight(0, l - 1).q_shifted((2LL * l - 1) * mn);
            if (l == 1) w += AQCoeff::monomial(1, 2, mn - 1);
            return w;
        }
        SlopeConstants c;  // s == 0 keeps alpha = beta = eps = 0
        if (s > 0) c = slope_constants(m_, n_, s);
        AQCoeff w = weight(s + 1, l);
        const long long s_minus = c.beta * n_ + 1;
        const long long s_plus = c.alpha * m_ + 1;
        if (c.eps == 1 && (s_minus <= s || s_plus <= s))
            throw error("descent violated in slope recursion");
        const int ltot = l + static_cast<int>(c.eps);
        for (int lm = 1; lm < ltot; ++lm) {
            for (int lp = 1; lm + lp <= ltot; ++lp) {
                const int l0 = ltot - lm - lp;
                // Net area shift of the convolution, in 1/(2mn) units.
                const long long shift_scaled = 2 * s * l * mn - s * s -
                                               2 * c.beta * n_ * mn * lm +
                                               c.beta * c.beta * n_ * n_ -
                                               2 * c.alpha * m_ * mn * lp +
                                               c.alpha * c.alpha * m_ * m_;
                if (shift_scaled % mn != 0)
                    throw non_integral_exponent("slope recurrence shift not on grid");
                const AQCoeff& a = weight(s_minus, lm);
                const AQCoeff& b = weight(0, l0);
                const AQCoeff& d = weight(s_plus, lp);
                if (a.is_zero() || b.is_zero() || d.is_zero()) continue;
                w += (a * b * d).q_shifted(shift_scaled / mn);
            }
        }
        return w;
    }

    int m_, n_, lmax_;
    int depth_ = 0;
    std::vector<std::vector<std::optional<AQCoeff>>> memo_;
};

inline SlopeFamily solve_slope(int m, int n, int lmax) { return SlopeFamily(m, n, lmax); }

// Verifies y^[s] = y^[s+1] * y^[0](q^{2s} x) for every 0 < s < mn with
// m | s or n | s; returns the first failing monomial if any.
inline std::optional<XMismatch> check_collapsed_products(const SlopeFamily& fam) {
    const long long mn = fam.mn();
    for (long long s = 1; s < mn; ++s) {
        if (s % fam.m() != 0 && s % fam.n() != 0) continue;
        XSeries lhs = fam.series(s);
        XSeries rhs = fam.series(s + 1) * qshift(fam.series(0), 2 * s);
        if (auto mis = first_mismatch(lhs, rhs, fam.lmax() + 1, QWindowSeries::kExactWindow))
            return mis;
    }
    return std::nullopt;
}

// Substitutes the solved family into the three q-difference equations of
// the system and reports the first nonzero residual monomial, if any.
inline std::optional<XMismatch> check_slope_equations(const SlopeFamily& fam) {
    const long long mn = fam.mn();
    const int ord = fam.lmax() + 1;
    const auto exact = QWindowSeries::kExactWindow;
    // (a)  y^[0] * (1 - y^[1]) = 1
    {
        XSeries lhs = fam.series(0) * (XSeries::one(ord) - fam.series(1));
        if (auto mis = first_mismatch(lhs, XSeries::one(ord), ord, exact)) return mis;
    }
    // (b)  y^[s] = y^[s+1] + q^{mn eps^2 - 2 alpha beta} x^{-eps}
    //              * y^[0](q^{2s}x) y^[bn+1](q^{2(s-bn)}x) y^[am+1](q^{2(s-am)}x)
    // checked multiplied through by x^{eps}, so every compared coefficient
    // is available at the truncation order.
    for (long long s = 1; s < mn; ++s) {
        SlopeConstants c = slope_constants(fam.m(), fam.n(), s);
        XSeries prod = qshift(fam.series(0), 2 * s) *
                       qshift(fam.series(c.beta * fam.n() + 1), 2 * (s - c.beta * fam.n())) *
                       qshift(fam.series(c.alpha * fam.m() + 1), 2 * (s - c.alpha * fam.m()));
        prod = prod * AQCoeff::monomial(1, 0, mn * c.eps * c.eps - 2 * c.alpha * c.beta);
        XSeries lhs = fam.series(s) - fam.series(s + 1);
        if (c.eps == 1) lhs = x_shift_up(lhs, 1);
        if (auto mis = first_mismatch(lhs, prod, ord, exact)) return mis;
    }
    // (c)  y^[mn] = a^2 q^{mn-1} x + q^{mn} x * y^[0](q^{2mn} x)
    {
        XSeries rhs = x_shift_up(qshift(fam.series(0), 2 * mn)) *
                      AQCoeff::monomial(1, 0, mn);
        XSeries corner(ord);
        if (ord > 1) corner.coeff(1) = AQCoeff::monomial(1, 2, mn - 1);
        rhs += corner;
        if (auto mis = first_mismatch(fam.series(mn), rhs, ord, exact)) return mis;
    }
    return std::nullopt;
}

}  // namespace schroder

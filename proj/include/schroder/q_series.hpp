#pragma once

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schroder/bigint.hpp"
#include "schroder/errors.hpp"

namespace schroder {

// Truncated Laurent series in q over arbitrary-precision integers.
//
// A value is either an exact Laurent polynomial (window() == kExactWindow,
// every coefficient outside the stored support is known to be zero) or a
// windowed series whose coefficients are known only for exponents strictly
// below window().  Arithmetic intersects windows so that no unreliable
// coefficient is ever reported:
//
//   add:  window = min(Wf, Wg)
//   mul:  window = min(Wf + min_exp(g), Wg + min_exp(f))
//
// Exact values behave as if their window were +infinity.  The stored
// coefficient vector is always trimmed (first and last entries nonzero);
// the canonical zero has an empty vector.
class QWindowSeries {
public:
    static constexpr long long kExactWindow =
        std::numeric_limits<long long>::max() / 4;

    // Exact zero.
    QWindowSeries() = default;

    static QWindowSeries zero(long long window = kExactWindow) {
        QWindowSeries s;
        s.window_ = window;
        return s;
    }

    static QWindowSeries monomial(Int c, long long e) {
        QWindowSeries s;
        if (c != 0) {
            s.base_ = e;
            s.coeffs_.push_back(std::move(c));
        }
        return s;
    }

    static QWindowSeries one() { return monomial(1, 0); }

    // Coefficients c[i] sit at exponent base + i.
    static QWindowSeries from_coeffs(long long base, std::vector<Int> c,
                                     long long window = kExactWindow) {
        QWindowSeries s;
        s.base_ = base;
        s.coeffs_ = std::move(c);
        s.window_ = window;
        s.clip_to_window();
        s.trim();
        return s;
    }

    bool is_exact() const { return window_ == kExactWindow; }
    bool is_zero() const { return coeffs_.empty(); }
    long long window() const { return window_; }

    // Lowest / highest exponent carrying a nonzero coefficient.
    // Only meaningful on nonzero values.
    long long min_exp() const { return base_; }
    long long max_exp() const {
        return base_ + static_cast<long long>(coeffs_.size()) - 1;
    }

    Int coeff(long long e) const {
        if (coeffs_.empty() || e < base_ || e > max_exp()) return Int(0);
        return coeffs_[static_cast<size_t>(e - base_)];
    }

    bool is_monomial() const { return coeffs_.size() == 1; }

    template <typename Fn>
    void for_each_term(Fn&& fn) const {
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) fn(base_ + static_cast<long long>(i), coeffs_[i]);
    }

    // Knowledge window clamped to W; coefficients at exponents >= W dropped.
    QWindowSeries truncated(long long w) const {
        QWindowSeries s = *this;
        s.window_ = std::min(s.window_, w);
        s.clip_to_window();
        s.trim();
        return s;
    }

    bool all_nonnegative() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // Sum of all stored coefficients, i.e. the value at q = 1.
    // Only sensible on exact polynomials.
    Int value_at_one() const {
        Int r = 0;
        for (const auto& c : coeffs_) r += c;
        return r;
    }

    friend QWindowSeries operator-(const QWindowSeries& f) {
        QWindowSeries r = f;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend QWindowSeries operator+(const QWindowSeries& f, const QWindowSeries& g) {
        QWindowSeries r;
        r.window_ = std::min(f.window_, g.window_);
        if (f.is_zero() && g.is_zero()) return r;
        long long lo = f.is_zero() ? g.base_ : (g.is_zero() ? f.base_ : std::min(f.base_, g.base_));
        long long hi = f.is_zero() ? g.max_exp()
                                   : (g.is_zero() ? f.max_exp() : std::max(f.max_exp(), g.max_exp()));
        r.base_ = lo;
        r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
        f.for_each_term([&](long long e, const Int& c) { r.coeffs_[size_t(e - lo)] += c; });
        g.for_each_term([&](long long e, const Int& c) { r.coeffs_[size_t(e - lo)] += c; });
        r.clip_to_window();
        r.trim();
        return r;
    }

    friend QWindowSeries operator-(const QWindowSeries& f, const QWindowSeries& g) {
        return f + (-g);
    }

    friend QWindowSeries operator*(const QWindowSeries& f, const QWindowSeries& g) {
        QWindowSeries r;
        // Unknown coefficients of f interact with known support of g from
        // Wf + min_g up, and with the unknown tail of g from Wf + Wg up;
        // the latter only binds when a factor has empty support.
        r.window_ = std::min({add_window(f.window_, g.min_exp_or_inf()),
                              add_window(g.window_, f.min_exp_or_inf()),
                              add_window(f.window_, g.window_)});
        if (f.is_zero() || g.is_zero()) return r;
        long long lo = f.base_ + g.base_;
        long long hi = f.max_exp() + g.max_exp();
        if (r.window_ != kExactWindow) hi = std::min(hi, r.window_ - 1);
        if (hi < lo) return r;
        r.base_ = lo;
        r.coeffs_.assign(static_cast<size_t>(hi - lo + 1), Int(0));
        for (size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (f.coeffs_[i] == 0) continue;
            long long ef = f.base_ + static_cast<long long>(i);
            for (size_t j = 0; j < g.coeffs_.size(); ++j) {
                if (g.coeffs_[j] == 0) continue;
                long long e = ef + g.base_ + static_cast<long long>(j);
                if (e > hi) break;
                r.coeffs_[size_t(e - lo)] += f.coeffs_[i] * g.coeffs_[j];
            }
        }
        r.trim();
        return r;
    }

    QWindowSeries& operator+=(const QWindowSeries& g) { return *this = *this + g; }
    QWindowSeries& operator-=(const QWindowSeries& g) { return *this = *this - g; }
    QWindowSeries& operator*=(const QWindowSeries& g) { return *this = *this * g; }

    friend QWindowSeries operator*(const QWindowSeries& f, const Int& c) {
        if (c == 0) return zero(f.window_ == kExactWindow ? kExactWindow : f.window_);
        QWindowSeries r = f;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    QWindowSeries shifted(long long e) const {
        QWindowSeries r = *this;
        r.base_ += e;
        if (r.window_ != kExactWindow) r.window_ += e;
        return r;
    }

    // Structural equality: same knowledge window and same coefficients.
    friend bool operator==(const QWindowSeries& f, const QWindowSeries& g) {
        if (f.window_ != g.window_) return false;
        if (f.coeffs_.size() != g.coeffs_.size()) return false;
        if (!f.coeffs_.empty() && f.base_ != g.base_) return false;
        return f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const QWindowSeries& f, const QWindowSeries& g) {
        return !(f == g);
    }

    std::string to_string(const std::string& var = "q") const {
        if (coeffs_.empty())
            return is_exact() ? "0" : "O(" + var + "^" + std::to_string(window_) + ")";
        std::ostringstream os;
        bool first = true;
        for_each_term([&](long long e, const Int& c) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Int a = abs(c);
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << var;
                if (e != 1) os << "^" << e;
            }
        });
        if (!is_exact()) os << " + O(" << var << "^" << window_ << ")";
        return os.str();
    }

private:
    static long long add_window(long long w, long long m) {
        if (w == kExactWindow || m == kExactWindow) return kExactWindow;
        return w + m;
    }

    long long min_exp_or_inf() const { return coeffs_.empty() ? kExactWindow : base_; }

    void clip_to_window() {
        if (window_ == kExactWindow || coeffs_.empty()) return;
        if (base_ >= window_) {
            coeffs_.clear();
            return;
        }
        long long keep = window_ - base_;
        if (keep < static_cast<long long>(coeffs_.size()))
            coeffs_.resize(static_cast<size_t>(keep));
    }

    void trim() {
        size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            return;
        }
        size_t tail = coeffs_.size();
        while (tail > lead && coeffs_[tail - 1] == 0) --tail;
        if (lead > 0 || tail < coeffs_.size()) {
            std::vector<Int> next(coeffs_.begin() + lead, coeffs_.begin() + tail);
            coeffs_ = std::move(next);
            base_ += static_cast<long long>(lead);
        }
    }

    long long base_ = 0;
    long long window_ = kExactWindow;
    std::vector<Int> coeffs_;
};

inline QWindowSeries q_add(const QWindowSeries& f, const QWindowSeries& g) { return f + g; }
inline QWindowSeries q_mul(const QWindowSeries& f, const QWindowSeries& g) { return f * g; }
inline QWindowSeries q_neg(const QWindowSeries& f) { return -f; }

// Multiplicative inverse of a series whose lowest coefficient is +1 or -1.
// For a windowed input the result is reliable below window() - 2*min_exp().
// An exact non-monomial input needs an explicit target window, since its
// inverse is an infinite series.
inline QWindowSeries q_invert_unit(const QWindowSeries& f, long long target_window = -1) {
    if (f.is_zero()) throw not_a_unit("cannot invert zero");
    const long long m = f.min_exp();
    const Int c = f.coeff(m);
    if (c != 1 && c != -1)
        throw not_a_unit("lowest coefficient is " + c.str() + ", need +1 or -1");
    if (f.is_monomial()) {
        QWindowSeries r = QWindowSeries::monomial(c, -m);
        if (target_window >= 0) r = r.truncated(target_window);
        return r;
    }
    // g = c * q^{-m} * f has constant term 1; invert by the standard
    // power-series recursion, then undo the normalization.
    long long vw;  // how far the inverse of g is computed
    if (f.is_exact()) {
        if (target_window < 0)
            throw not_a_unit(
                "inverse of an exact non-monomial is an infinite series; "
                "a target window is required");
        vw = target_window + m;
    } else {
        vw = f.window() - m;
        if (target_window >= 0) vw = std::min(vw, target_window + m);
    }
    if (vw <= 0) return QWindowSeries::zero(vw - m);
    std::vector<Int> g(static_cast<size_t>(vw), Int(0));
    f.for_each_term([&](long long e, const Int& x) {
        long long k = e - m;
        if (k < vw) g[size_t(k)] = (c == 1 ? x : -x);
    });
    std::vector<Int> v(static_cast<size_t>(vw), Int(0));
    v[0] = 1;
    for (long long nn = 1; nn < vw; ++nn) {
        Int acc = 0;
        for (long long k = 1; k <= nn; ++k)
            if (g[size_t(k)] != 0) acc -= g[size_t(k)] * v[size_t(nn - k)];
        v[size_t(nn)] = acc;
    }
    if (c == -1)
        for (auto& x : v) x = -x;
    return QWindowSeries::from_coeffs(-m, std::move(v), vw - m);
}

// Exact quotient of two exact Laurent polynomials.  The division is run
// from the lowest exponent up; any nonzero remainder means an identity
// was broken upstream.
inline QWindowSeries q_exact_div(const QWindowSeries& f, const QWindowSeries& g) {
    if (!f.is_exact() || !g.is_exact())
        throw inexact_division("exact division requires exact-polynomial operands");
    if (g.is_zero()) throw inexact_division("division by zero polynomial");
    if (f.is_zero()) return QWindowSeries();
    QWindowSeries rem = f;
    QWindowSeries quot;
    const long long deg_bound = f.max_exp() - g.max_exp();
    while (!rem.is_zero()) {
        long long e = rem.min_exp() - g.min_exp();
        if (e > deg_bound)
            throw inexact_division("nonzero remainder: " + rem.to_string());
        Int lead = rem.coeff(rem.min_exp());
        Int glead = g.coeff(g.min_exp());
        if (lead % glead != 0)
            throw inexact_division("coefficient " + lead.str() + " not divisible by " +
                                   glead.str());
        QWindowSeries term = QWindowSeries::monomial(lead / glead, e);
        quot += term;
        rem -= term * g;
    }
    return quot;
}

// Coefficient-wise exact division by an integer.
inline QWindowSeries q_div_exact_int(const QWindowSeries& f, const Int& k) {
    if (k == 0) throw inexact_division("division by zero");
    QWindowSeries r;
    std::vector<Int> c;
    if (f.is_zero()) return f;
    long long lo = f.min_exp(), hi = f.max_exp();
    c.assign(static_cast<size_t>(hi - lo + 1), Int(0));
    bool bad = false;
    std::string offender;
    f.for_each_term([&](long long e, const Int& x) {
        if (x % k != 0 && !bad) {
            bad = true;
            offender = x.str();
        } else {
            c[size_t(e - lo)] = x / k;
        }
    });
    if (bad)
        throw inexact_division("coefficient " + offender + " not divisible by " + k.str());
    return QWindowSeries::from_coeffs(lo, std::move(c), f.window());
}

}  // namespace schroder

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schroder/aq_coeff.hpp"

namespace schroder {

// Truncated power series in x whose coefficients are AQCoeff values.
// x_order() is the exclusive truncation order: coefficients are stored for
// x^0 .. x^{x_order-1}.  This is the carrier for every generating function
// in the library.
class XSeries {
public:
    XSeries() = default;
    explicit XSeries(int x_order) : coeffs_(static_cast<size_t>(x_order)) {}

    static XSeries one(int x_order) {
        XSeries r(x_order);
        if (x_order > 0) r.coeffs_[0] = AQCoeff::one();
        return r;
    }

    int x_order() const { return static_cast<int>(coeffs_.size()); }

    const AQCoeff& coeff(int l) const { return coeffs_[static_cast<size_t>(l)]; }
    AQCoeff& coeff(int l) { return coeffs_[static_cast<size_t>(l)]; }

    XSeries truncated_x(int order) const {
        XSeries r = *this;
        if (order < r.x_order()) r.coeffs_.resize(static_cast<size_t>(order));
        return r;
    }

    friend XSeries operator-(const XSeries& f) {
        XSeries r = f;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend XSeries operator+(const XSeries& f, const XSeries& g) {
        XSeries r(std::min(f.x_order(), g.x_order()));
        for (int l = 0; l < r.x_order(); ++l) r.coeffs_[size_t(l)] = f.coeff(l) + g.coeff(l);
        return r;
    }

    friend XSeries operator-(const XSeries& f, const XSeries& g) { return f + (-g); }

    // Cauchy product truncated at the smaller x_order.
    friend XSeries operator*(const XSeries& f, const XSeries& g) {
        XSeries r(std::min(f.x_order(), g.x_order()));
        for (int l = 0; l < r.x_order(); ++l) {
            AQCoeff acc;
            for (int k = 0; k <= l; ++k) {
                if (f.coeff(k).is_zero() || g.coeff(l - k).is_zero()) continue;
                acc += f.coeff(k) * g.coeff(l - k);
            }
            r.coeffs_[size_t(l)] = std::move(acc);
        }
        return r;
    }

    // Scale by an x-constant.
    friend XSeries operator*(const XSeries& f, const AQCoeff& c) {
        XSeries r(f.x_order());
        for (int l = 0; l < f.x_order(); ++l) r.coeffs_[size_t(l)] = f.coeff(l) * c;
        return r;
    }

    XSeries& operator+=(const XSeries& g) { return *this = *this + g; }
    XSeries& operator-=(const XSeries& g) { return *this = *this - g; }
    XSeries& operator*=(const XSeries& g) { return *this = *this * g; }

    bool all_nonnegative() const {
        for (const auto& c : coeffs_)
            if (!c.all_nonnegative()) return false;
        return true;
    }

    std::string to_string(const std::string& avar = "a",
                          const std::string& qvar = "q") const {
        std::ostringstream os;
        for (int l = 0; l < x_order(); ++l) {
            if (l) os << " + ";
            os << "[" << coeff(l).to_string(avar, qvar) << "]*x^" << l;
        }
        return os.str();
    }

private:
    std::vector<AQCoeff> coeffs_;
};

inline XSeries x_add(const XSeries& f, const XSeries& g) { return f + g; }
inline XSeries x_mul(const XSeries& f, const XSeries& g) { return f * g; }

// x |-> q^e x: the coefficient of x^l picks up q^{e*l}.
inline XSeries qshift(const XSeries& f, long long e) {
    XSeries r(f.x_order());
    for (int l = 0; l < f.x_order(); ++l) r.coeff(l) = f.coeff(l).q_shifted(e * l);
    return r;
}

// x |-> c x: the coefficient of x^l picks up c^l.
inline XSeries x_scale(const XSeries& f, const AQCoeff& c) {
    XSeries r(f.x_order());
    AQCoeff pow = AQCoeff::one();
    for (int l = 0; l < f.x_order(); ++l) {
        if (l > 0) pow *= c;
        r.coeff(l) = f.coeff(l) * pow;
    }
    return r;
}

// Multiply by x^k (coefficients shift up, truncation preserved).
inline XSeries x_shift_up(const XSeries& f, int k = 1) {
    XSeries r(f.x_order());
    for (int l = f.x_order() - 1; l >= k; --l) r.coeff(l) = f.coeff(l - k);
    return r;
}

// Multiplicative inverse; requires constant term 1.
inline XSeries x_invert(const XSeries& f) {
    if (f.x_order() == 0) return f;
    if (!f.coeff(0).is_one_like())
        throw non_unit_constant("x_invert: constant term is " + f.coeff(0).to_string());
    // Constant term is 1 (possibly known only to a window); cap everything
    // computed here by that window.
    const long long w0 = f.coeff(0).floor();
    XSeries v(f.x_order());
    v.coeff(0) = f.coeff(0);
    for (int l = 1; l < f.x_order(); ++l) {
        AQCoeff acc;
        for (int k = 1; k <= l; ++k) {
            if (f.coeff(k).is_zero()) continue;
            acc -= f.coeff(k) * v.coeff(l - k);
        }
        if (w0 != AQCoeff::kExactWindow) acc = acc.truncated(w0);
        v.coeff(l) = std::move(acc);
    }
    return v;
}

// exp of a series given G = x * d/dx log = sum_j (j * F_j) x^j, i.e. the
// coefficients of G already carry the factor j.  Keeping the recursion in
// this form stays in the integer domain whenever the result is integral;
// the one division per order is asserted exact.
inline XSeries x_exp_from_xdlog(const XSeries& g) {
    if (g.x_order() > 0 && !g.coeff(0).is_zero())
        throw error("x_exp: series must vanish at x = 0");
    XSeries e(g.x_order());
    if (g.x_order() == 0) return e;
    e.coeff(0) = AQCoeff::one();
    for (int k = 1; k < g.x_order(); ++k) {
        AQCoeff acc;
        for (int j = 1; j <= k; ++j) {
            if (g.coeff(j).is_zero()) continue;
            acc += g.coeff(j) * e.coeff(k - j);
        }
        e.coeff(k) = acc.div_exact_int(k);
    }
    return e;
}

// Formal exponential, truncated at x_order.  Uses the logarithmic-derivative
// recurrence k*E_k = sum_j (j F_j) E_{k-j}; raises inexact_division if a
// non-integral coefficient would arise.
inline XSeries x_exp(const XSeries& f) {
    if (f.x_order() > 0 && !f.coeff(0).is_zero())
        throw error("x_exp: series must vanish at x = 0");
    XSeries g(f.x_order());
    for (int j = 1; j < f.x_order(); ++j) g.coeff(j) = f.coeff(j) * Int(j);
    return x_exp_from_xdlog(g);
}

// First differing monomial of f and g below the given windows.
struct XMismatch {
    int x_exp = 0;
    long long a_exp = 0;
    long long q_exp = 0;
    Int expected;
    Int got;
    bool window_too_small = false;
};

inline std::optional<XMismatch> first_mismatch(const XSeries& f, const XSeries& g,
                                               int x_upto, long long q_upto) {
    for (int l = 0; l < x_upto; ++l) {
        if (l >= f.x_order() || l >= g.x_order()) {
            // x-truncation is a knowledge boundary just like the q-window.
            XMismatch r;
            r.x_exp = l;
            r.window_too_small = true;
            return r;
        }
        if (auto m = first_mismatch(f.coeff(l), g.coeff(l), q_upto)) {
            XMismatch r;
            r.x_exp = l;
            r.a_exp = m->a_exp;
            r.q_exp = m->q_exp;
            r.expected = m->expected;
            r.got = m->got;
            r.window_too_small = m->window_too_small;
            return r;
        }
    }
    return std::nullopt;
}

inline bool is_zero_below(const XSeries& f, int x_upto, long long q_upto) {
    XSeries z(std::max(f.x_order(), x_upto));
    return !first_mismatch(f, z, x_upto, q_upto).has_value();
}

}  // namespace schroder

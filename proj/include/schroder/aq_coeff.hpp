#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "schroder/q_series.hpp"

namespace schroder {

// Polynomial in one outer variable (the framing/colour variable a, or the
// variable u on the knot side) whose coefficients are QWindowSeries.
//
// Canonical form: no outer exponent maps to a zero series.  Because slots
// that cancel to zero are dropped, the object carries a window floor: every
// coefficient of every slot -- present or absent -- is reliable at
// exponents strictly below floor().  Present slots may individually be
// reliable further out.
class AQCoeff {
public:
    static constexpr long long kExactWindow = QWindowSeries::kExactWindow;

    AQCoeff() = default;

    static AQCoeff from_q(QWindowSeries s) {
        AQCoeff r;
        r.floor_ = s.is_exact() ? kExactWindow : s.window();
        if (!s.is_zero()) r.terms_.emplace(0, std::move(s));
        return r;
    }

    static AQCoeff monomial(Int c, long long a_exp, long long q_exp) {
        AQCoeff r;
        if (c != 0) r.terms_.emplace(a_exp, QWindowSeries::monomial(std::move(c), q_exp));
        return r;
    }

    static AQCoeff one() { return monomial(1, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    long long floor() const { return floor_; }
    bool is_exact() const { return floor_ == kExactWindow; }
    const std::map<long long, QWindowSeries>& terms() const { return terms_; }

    const QWindowSeries* slot(long long a_exp) const {
        auto it = terms_.find(a_exp);
        return it == terms_.end() ? nullptr : &it->second;
    }

    Int coeff(long long a_exp, long long q_exp) const {
        const QWindowSeries* s = slot(a_exp);
        return s ? s->coeff(q_exp) : Int(0);
    }

    // Structural one: single a^0 slot whose series is the monomial 1.
    bool is_one_like() const {
        if (terms_.size() != 1) return false;
        const auto& [e, s] = *terms_.begin();
        return e == 0 && s.is_monomial() && s.min_exp() == 0 && s.coeff(0) == 1;
    }

    // Lowest q-exponent over all slots (kExactWindow when zero).
    long long q_min_exp() const {
        long long m = kExactWindow;
        for (const auto& [e, s] : terms_) m = std::min(m, s.min_exp());
        return m;
    }

    long long a_max_exp() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first;
    }

    friend AQCoeff operator-(const AQCoeff& f) {
        AQCoeff r = f;
        for (auto& [e, s] : r.terms_) s = -s;
        return r;
    }

    friend AQCoeff operator+(const AQCoeff& f, const AQCoeff& g) {
        AQCoeff r = f;
        r.floor_ = std::min(f.floor_, g.floor_);
        for (const auto& [e, s] : g.terms_) {
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, s);
            } else {
                it->second += s;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        r.clip_to_floor();
        return r;
    }

    friend AQCoeff operator-(const AQCoeff& f, const AQCoeff& g) { return f + (-g); }

    friend AQCoeff operator*(const AQCoeff& f, const AQCoeff& g) {
        AQCoeff r;
        r.floor_ = std::min({add_window(f.floor_, g.q_min_exp()),
                             add_window(g.floor_, f.q_min_exp()),
                             add_window(f.floor_, g.floor_)});
        for (const auto& [ef, sf] : f.terms_)
            for (const auto& [eg, sg] : g.terms_) {
                QWindowSeries p = sf * sg;
                if (p.is_zero()) {
                    r.floor_ = std::min(r.floor_, p.window());
                    continue;
                }
                auto it = r.terms_.find(ef + eg);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(ef + eg, std::move(p));
                } else {
                    it->second += p;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        r.clip_to_floor();
        return r;
    }

    AQCoeff& operator+=(const AQCoeff& g) { return *this = *this + g; }
    AQCoeff& operator-=(const AQCoeff& g) { return *this = *this - g; }
    AQCoeff& operator*=(const AQCoeff& g) { return *this = *this * g; }

    friend AQCoeff operator*(const AQCoeff& f, const Int& c) {
        if (c == 0) {
            AQCoeff r;
            r.floor_ = f.floor_;
            return r;
        }
        AQCoeff r = f;
        for (auto& [e, s] : r.terms_) s = s * c;
        return r;
    }

    // Multiply every slot by c * a^{a_exp} * q^{q_exp}.
    AQCoeff scaled(const Int& c, long long a_exp, long long q_exp) const {
        AQCoeff r;
        r.floor_ = add_window(floor_, q_exp);
        if (c == 0) return r;
        for (const auto& [e, s] : terms_)
            r.terms_.emplace(e + a_exp, s.shifted(q_exp) * c);
        r.clip_to_floor();
        return r;
    }

    AQCoeff q_shifted(long long q_exp) const { return scaled(1, 0, q_exp); }

    AQCoeff div_exact_int(const Int& k) const {
        AQCoeff r;
        r.floor_ = floor_;
        for (const auto& [e, s] : terms_) r.terms_.emplace(e, q_div_exact_int(s, k));
        return r;
    }

    AQCoeff truncated(long long w) const {
        AQCoeff r;
        r.floor_ = std::min(floor_, w);
        for (const auto& [e, s] : terms_) {
            QWindowSeries t = s.truncated(w);
            if (!t.is_zero()) r.terms_.emplace(e, std::move(t));
        }
        return r;
    }

    bool all_nonnegative() const {
        for (const auto& [e, s] : terms_)
            if (!s.all_nonnegative()) return false;
        return true;
    }

    // Path-counting weights carry only even a-exponents (a^{2d} for d
    // diagonal steps).
    bool all_even_a() const {
        for (const auto& [e, s] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }

    Int value_at_one() const {
        Int r = 0;
        for (const auto& [e, s] : terms_) r += s.value_at_one();
        return r;
    }

    friend bool operator==(const AQCoeff& f, const AQCoeff& g) {
        return f.floor_ == g.floor_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const AQCoeff& f, const AQCoeff& g) { return !(f == g); }

    std::string to_string(const std::string& avar = "a",
                          const std::string& qvar = "q") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, s] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (e == 0) {
                os << "(" << s.to_string(qvar) << ")";
            } else {
                os << avar;
                if (e != 1) os << "^" << e;
                os << "*(" << s.to_string(qvar) << ")";
            }
        }
        return os.str();
    }

private:
    static long long add_window(long long w, long long m) {
        if (w == kExactWindow || m == kExactWindow) return kExactWindow;
        return w + m;
    }

    // Canonical form keeps no stored coefficient at or above the floor:
    // data there can be an incomplete sum (a contribution whose own slot
    // was clipped away still belongs in that range), so it must never be
    // read back as exact.
    void clip_to_floor() {
        if (floor_ == kExactWindow) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            QWindowSeries t = it->second.truncated(floor_);
            if (t.is_zero()) {
                it = terms_.erase(it);
            } else {
                it->second = std::move(t);
                ++it;
            }
        }
    }

    std::map<long long, QWindowSeries> terms_;
    long long floor_ = kExactWindow;
};

// First (a, q)-lexicographic position where f and g differ, checking
// exponents strictly below `upto`.  Either side must be reliable up to
// `upto` wherever it is consulted; a too-small window is reported as a
// mismatch with the window position flagged.
struct AQMismatch {
    long long a_exp = 0;
    long long q_exp = 0;
    Int expected;
    Int got;
    bool window_too_small = false;
};

inline std::optional<AQMismatch> first_mismatch(const AQCoeff& f, const AQCoeff& g,
                                                long long upto) {
    // Every slot of either side, present or cancelled away, is certified
    // only below the value's floor; requiring the floors up front makes
    // present-slot windows (>= floor by invariant) sufficient too.
    if (std::min(f.floor(), g.floor()) < upto) {
        AQMismatch m;
        m.q_exp = std::min(f.floor(), g.floor());
        m.window_too_small = true;
        return m;
    }
    std::map<long long, char> a_exps;
    for (const auto& [e, s] : f.terms()) a_exps[e] = 1;
    for (const auto& [e, s] : g.terms()) a_exps[e] = 1;
    for (const auto& [a, unused] : a_exps) {
        const QWindowSeries* sf = f.slot(a);
        const QWindowSeries* sg = g.slot(a);
        // Stored supports bound the scan: outside them both sides are a
        // known zero (the floors were already checked).
        long long lo = upto, hi = 0;
        if (sf && !sf->is_zero()) {
            lo = std::min(lo, sf->min_exp());
            hi = std::max(hi, sf->max_exp() + 1);
        }
        if (sg && !sg->is_zero()) {
            lo = std::min(lo, sg->min_exp());
            hi = std::max(hi, sg->max_exp() + 1);
        }
        hi = std::min(hi, upto);
        for (long long e = lo; e < hi; ++e) {
            Int cf = sf ? sf->coeff(e) : Int(0);
            Int cg = sg ? sg->coeff(e) : Int(0);
            if (cf != cg) {
                AQMismatch m;
                m.a_exp = a;
                m.q_exp = e;
                m.expected = cf;
                m.got = cg;
                return m;
            }
        }
    }
    return std::nullopt;
}

}  // namespace schroder

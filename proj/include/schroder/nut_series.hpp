#pragma once

#include <map>
#include <optional>
#include <sstream>

#include "schroder/q_series.hpp"

namespace schroder {

// Laurent polynomial in u = nu^{1/2} whose coefficients are truncated
// Laurent series in sigma = t^{1/(2m)}.  The grid denominator 2m is fixed
// per computation; mixing grids requires explicit rescaling by the caller.
// Like AQCoeff, the value carries a window floor certifying absent slots.
class NuTSeries {
public:
    static constexpr long long kExactWindow = QWindowSeries::kExactWindow;

    NuTSeries() = default;
    explicit NuTSeries(int grid_denom) : grid_(grid_denom) {}

    static NuTSeries one(int grid_denom) {
        NuTSeries r(grid_denom);
        r.terms_.emplace(0, QWindowSeries::one());
        return r;
    }

    static NuTSeries monomial(int grid_denom, Int c, long long u_exp, long long s_exp) {
        NuTSeries r(grid_denom);
        if (c != 0) r.terms_.emplace(u_exp, QWindowSeries::monomial(std::move(c), s_exp));
        return r;
    }

    // A pure sigma-series sitting at u^0.
    static NuTSeries from_sigma(int grid_denom, QWindowSeries s) {
        NuTSeries r(grid_denom);
        r.floor_ = s.is_exact() ? kExactWindow : s.window();
        if (!s.is_zero()) r.terms_.emplace(0, std::move(s));
        return r;
    }

    int grid_denom() const { return grid_; }
    bool is_zero() const { return terms_.empty(); }
    long long floor() const { return floor_; }
    const std::map<long long, QWindowSeries>& terms() const { return terms_; }

    const QWindowSeries* slot(long long u_exp) const {
        auto it = terms_.find(u_exp);
        return it == terms_.end() ? nullptr : &it->second;
    }

    long long sigma_min_exp() const {
        long long m = kExactWindow;
        for (const auto& [e, s] : terms_) m = std::min(m, s.min_exp());
        return m;
    }

    void check_same_grid(const NuTSeries& other) const {
        if (grid_ != other.grid_)
            throw error("mixing sigma grids " + std::to_string(grid_) + " and " +
                        std::to_string(other.grid_));
    }

    friend NuTSeries operator-(const NuTSeries& f) {
        NuTSeries r = f;
        for (auto& [e, s] : r.terms_) s = -s;
        return r;
    }

    friend NuTSeries operator+(const NuTSeries& f, const NuTSeries& g) {
        f.check_same_grid(g);
        NuTSeries r = f;
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

    friend NuTSeries operator-(const NuTSeries& f, const NuTSeries& g) { return f + (-g); }

    friend NuTSeries operator*(const NuTSeries& f, const NuTSeries& g) {
        f.check_same_grid(g);
        NuTSeries r(f.grid_);
        r.floor_ = std::min({add_window(f.floor_, g.sigma_min_exp()),
                             add_window(g.floor_, f.sigma_min_exp()),
                             add_window(f.floor_, g.floor_)});
        for (const auto& [ef, sf] : f.terms_)
            for (const auto& [eg, sg] : g.terms_) {
                QWindowSeries p = sf * sg;
                if (p.is_zero()) continue;
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

    NuTSeries& operator+=(const NuTSeries& g) { return *this = *this + g; }
    NuTSeries& operator*=(const NuTSeries& g) { return *this = *this * g; }

    friend NuTSeries operator*(const NuTSeries& f, const Int& c) {
        NuTSeries r(f.grid_);
        r.floor_ = f.floor_;
        if (c == 0) return r;
        r.terms_ = f.terms_;
        for (auto& [e, s] : r.terms_) s = s * c;
        return r;
    }

    // Multiply by c * u^{u_exp} * sigma^{s_exp}.
    NuTSeries scaled(const Int& c, long long u_exp, long long s_exp) const {
        NuTSeries r(grid_);
        r.floor_ = add_window(floor_, s_exp);
        if (c == 0) return r;
        for (const auto& [e, s] : terms_) r.terms_.emplace(e + u_exp, s.shifted(s_exp) * c);
        r.clip_to_floor();
        return r;
    }

    NuTSeries div_exact_int(const Int& k) const {
        NuTSeries r(grid_);
        r.floor_ = floor_;
        for (const auto& [e, s] : terms_) r.terms_.emplace(e, q_div_exact_int(s, k));
        return r;
    }

    // u -> u^{-1} (parity diagnostics for odd functions of u).
    NuTSeries u_inverted() const {
        NuTSeries r(grid_);
        r.floor_ = floor_;
        for (const auto& [e, s] : terms_) r.terms_.emplace(-e, s);
        return r;
    }

    // All sigma exponents divisible by m, i.e. the value lies on the
    // t^{1/2} grid.
    bool on_half_t_grid(int m) const {
        for (const auto& [e, s] : terms_) {
            bool ok = true;
            s.for_each_term([&](long long se, const Int&) {
                if (se % m != 0) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    }

    friend bool operator==(const NuTSeries& f, const NuTSeries& g) {
        return f.grid_ == g.grid_ && f.floor_ == g.floor_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const NuTSeries& f, const NuTSeries& g) { return !(f == g); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, s] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "u^" << e << "*(" << s.to_string("s") << ")";
        }
        return os.str();
    }

private:
    static long long add_window(long long w, long long m) {
        if (w == kExactWindow || m == kExactWindow) return kExactWindow;
        return w + m;
    }

    // Same canonical form as AQCoeff: nothing stored at or above the
    // floor, where sums can be incomplete.
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

    int grid_ = 2;
    std::map<long long, QWindowSeries> terms_;
    long long floor_ = kExactWindow;
};

struct NuTMismatch {
    long long u_exp = 0;
    long long sigma_exp = 0;
    Int expected;
    Int got;
    bool window_too_small = false;
};

inline std::optional<NuTMismatch> first_mismatch(const NuTSeries& f, const NuTSeries& g,
                                                 long long upto) {
    f.check_same_grid(g);
    if (std::min(f.floor(), g.floor()) < upto) {
        NuTMismatch m;
        m.sigma_exp = std::min(f.floor(), g.floor());
        m.window_too_small = true;
        return m;
    }
    std::map<long long, char> exps;
    for (const auto& [e, s] : f.terms()) exps[e] = 1;
    for (const auto& [e, s] : g.terms()) exps[e] = 1;
    for (const auto& [u, unused] : exps) {
        const QWindowSeries* sf = f.slot(u);
        const QWindowSeries* sg = g.slot(u);
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
                NuTMismatch m;
                m.u_exp = u;
                m.sigma_exp = e;
                m.expected = cf;
                m.got = cg;
                return m;
            }
        }
    }
    return std::nullopt;
}

inline bool is_zero_below(const NuTSeries& f, long long upto) {
    return !first_mismatch(f, NuTSeries(f.grid_denom()), upto).has_value();
}

}  // namespace schroder

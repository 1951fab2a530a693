#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schroder/characters.hpp"
#include "schroder/nut_series.hpp"
#include "schroder/x_series.hpp"

namespace schroder {

// Orientation of the sigma grid.  `ascending_t` expands in sigma = t^{1/(2m)},
// the natural direction for the invariants themselves; `ascending_t_inv`
// expands in sigma = t^{-1/(2m)}, the right direction when the value will be
// specialized at t -> q^{-2} against an ascending q window.
enum class TGrid { ascending_t, ascending_t_inv };

// p_k evaluated at the torus-knot point t*, i.e. k * t*_k:
//   p_k(t*) = (nu^{k/2} - nu^{-k/2}) / (t^{k/2} - t^{-k/2})
//           = (u^k - u^{-k}) * inverse(sigma^{km} - sigma^{-km}).
// On the inverse grid the denominator changes sign.  The windowed inverse
// is normalized by its lowest monomial, then expanded geometrically.
inline NuTSeries eval_pstar(int k, int m, long long window,
                            TGrid grid = TGrid::ascending_t) {
    if (k < 1 || m < 1) throw error("eval_pstar: need k, m >= 1");
    const long long km = static_cast<long long>(k) * m;
    QWindowSeries denom =
        QWindowSeries::monomial(1, km) - QWindowSeries::monomial(1, -km);
    QWindowSeries inv = q_invert_unit(denom, window);
    if (grid == TGrid::ascending_t_inv) inv = -inv;
    NuTSeries u_part = NuTSeries::monomial(2 * m, 1, k, 0) -
                       NuTSeries::monomial(2 * m, 1, -k, 0);
    return u_part * NuTSeries::from_sigma(2 * m, std::move(inv));
}

namespace detail {

// s_mu(t*) for all needed mu at once is dominated by the p_rho products,
// so cache them per rho.  To stay in integer arithmetic the character
// weights are scaled by N!/z_rho (always integral) and the final division
// by N! is asserted exact.
class PStarCache {
public:
    PStarCache(int m, long long window, TGrid grid)
        : m_(m), window_(window), grid_(grid) {}

    const NuTSeries& p_rho(const Partition& rho) {
        auto it = memo_.find(rho);
        if (it != memo_.end()) return it->second;
        NuTSeries prod = NuTSeries::one(2 * m_);
        for (int part : rho) prod *= eval_pstar(part, m_, window_, grid_);
        return memo_.emplace(rho, std::move(prod)).first->second;
    }

private:
    int m_;
    long long window_;
    TGrid grid_;
    std::map<Partition, NuTSeries> memo_;
};

}  // namespace detail

// Colored HOMFLY-PT invariant of the torus knot T_{m,n} (framing mn),
// labeled by the partition lambda:
//   H_lambda = nu^{n(m-1)|lambda|/2} sum_{mu of m|lambda|}
//              C^lambda_{mu,m} t^{-kappa_mu n / 2m} s_mu(t*).
// Assembled on the sigma grid as u^{n(m-1)|lambda|} and sigma^{-kappa_mu n}
// (sign flipped on the inverse grid).  The final sigma exponents must land
// on the t^{1/2} grid, i.e. be divisible by m.
inline NuTSeries homfly(const Partition& lambda, int m, int n, long long window,
                        TGrid grid = TGrid::ascending_t,
                        int size_cap = kDefaultSizeCap) {
    if (!is_partition(lambda)) throw error("homfly: not a partition");
    if (m < 1 || n < 1) throw error("homfly: need positive m, n");
    const int nl = partition_size(lambda);
    if (static_cast<long long>(m) * nl > size_cap)
        throw size_cap_exceeded("m|lambda| exceeds size cap");
    if (nl == 0) return NuTSeries::one(2 * m);

    CharacterTable chars;
    const int big = m * nl;
    const Int nfact = factorial(big);
    const long long tsign = grid == TGrid::ascending_t ? 1 : -1;

    std::map<Partition, Int> c_coeffs;
    if (m == 1) {
        c_coeffs.emplace(lambda, 1);
    } else {
        c_coeffs = adams_coeffs(lambda, m, chars, size_cap);
    }

    // The kappa prefactors shift windows down; provision for the worst one
    // so the returned series still carries the requested window.
    long long slack = 0;
    for (const auto& [mu, c] : c_coeffs)
        slack = std::max(slack, tsign * kappa(mu) * n);
    detail::PStarCache pstars(m, window + slack, grid);

    NuTSeries acc(2 * m);
    for (const auto& [mu, c] : c_coeffs) {
        NuTSeries smu(2 * m);  // N! * s_mu(t*)
        for (const Partition& rho : partitions_of(big)) {
            long long x = chars.chi(mu, rho);
            if (x == 0) continue;
            Int w = Int(x) * (nfact / z_rho(rho));
            smu += pstars.p_rho(rho) * w;
        }
        acc += smu.scaled(c, 0, -tsign * kappa(mu) * n);
    }
    NuTSeries result =
        acc.div_exact_int(nfact).scaled(1, static_cast<long long>(n) * (m - 1) * nl, 0);
    if (!result.on_half_t_grid(m))
        throw grid_violation("H_lambda left the t^{1/2} grid");
    return result;
}

// Wave-function coefficients: H_{(k)} for one-row partitions, k = 0..kmax.
inline std::vector<NuTSeries> wave(int m, int n, int kmax, long long window,
                                   TGrid grid = TGrid::ascending_t,
                                   int size_cap = kDefaultSizeCap) {
    std::vector<NuTSeries> out;
    out.reserve(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k)
        out.push_back(homfly(k == 0 ? Partition{} : Partition{k}, m, n, window, grid,
                             size_cap));
    return out;
}

// Slot-wise residuals of the two displayed q-difference equations for the
// T_{1,f} wave function, on the sigma = t^{1/2} grid (grid denominator 2).
//
//   A(x):  nu^{1/2} t^{1/2} x A(tx) - nu^{-1/2} t^{1/2} x A(x) - A(tx) + A(x) = 0
//   psi :  nu^{1/2} t^{1/2} x psi(t^{-f+1}x) - nu^{-1/2} t^{1/2} x psi(t^{-f}x)
//          - psi(tx) + psi(x) = 0
//
// with A_k = sigma^{f k(k-1)} psi_k.  Checks hold identically below
// `qorder`; the wave is computed with enough sigma slack to certify that.
struct WaveCheckFailure {
    int k = 0;
    std::string equation;
    NuTMismatch mismatch;
};

inline std::optional<WaveCheckFailure> check_wave_qdiff(int f, int kmax,
                                                        long long qorder) {
    const long long slack = 2LL * f * kmax + 2 * kmax + 4;
    std::vector<NuTSeries> psi = wave(1, f, kmax, qorder + slack, TGrid::ascending_t,
                                      std::max(kDefaultSizeCap, kmax));
    std::vector<NuTSeries> a;
    a.reserve(psi.size());
    for (int k = 0; k <= kmax; ++k)
        a.push_back(psi[size_t(k)].scaled(1, 0, static_cast<long long>(f) * k * (k - 1)));
    for (int k = 1; k <= kmax; ++k) {
        // [x^k] of the A equation:
        //   u sigma^{2k-1} A_{k-1} - u^{-1} sigma A_{k-1} - (sigma^{2k} - 1) A_k
        NuTSeries ra = a[size_t(k - 1)].scaled(1, 1, 2 * k - 1) -
                       a[size_t(k - 1)].scaled(1, -1, 1) -
                       (a[size_t(k)].scaled(1, 0, 2 * k) - a[size_t(k)]);
        if (auto mis = first_mismatch(ra, NuTSeries(2), qorder))
            return WaveCheckFailure{k, "A", *mis};
        // [x^k] of the psi equation:
        //   u sigma^{2(1-f)(k-1)+1} psi_{k-1} - u^{-1} sigma^{-2f(k-1)+1} psi_{k-1}
        //   - sigma^{2k} psi_k + psi_k
        NuTSeries rp = psi[size_t(k - 1)].scaled(1, 1, 2LL * (1 - f) * (k - 1) + 1) -
                       psi[size_t(k - 1)].scaled(1, -1, -2LL * f * (k - 1) + 1) -
                       psi[size_t(k)].scaled(1, 0, 2 * k) + psi[size_t(k)];
        if (auto mis = first_mismatch(rp, NuTSeries(2), qorder))
            return WaveCheckFailure{k, "psi", *mis};
    }
    return std::nullopt;
}

// The wave function of T_{1,f} after the substitution
//   x -> -nu^{1/2} q^{f-1} x,  nu -> -a^2/q,  t -> q^{-2},
// computed through the exponential form:
//   [x^k] = q^{f(k^2-k)} q^{(f-1)k} [x^k] exp(sum_j tau_j x^j)
// where j*tau_j = (a^{2j} q^{-j} - (-1)^j) * inverse(q^{-j} - q^j).
// Feeding j*tau_j to the log-derivative recurrence keeps every coefficient
// integral; the per-order division is asserted exact.
inline XSeries psi_substituted_tau(int f, int lmax, long long qorder) {
    const int ord = lmax + 1;
    XSeries g(ord);
    for (int j = 1; j < ord; ++j) {
        QWindowSeries denom =
            QWindowSeries::monomial(1, -j) - QWindowSeries::monomial(1, j);
        QWindowSeries inv = q_invert_unit(denom, qorder + j + 1);
        AQCoeff numer = AQCoeff::monomial(1, 2 * j, -j) -
                        AQCoeff::monomial(j % 2 == 0 ? 1 : -1, 0, 0);
        g.coeff(j) = numer * AQCoeff::from_q(inv);
    }
    XSeries e = x_exp_from_xdlog(g);
    XSeries r(ord);
    for (int k = 0; k < ord; ++k)
        r.coeff(k) = e.coeff(k).q_shifted(static_cast<long long>(f) * k * (k - 1) +
                                          static_cast<long long>(f - 1) * k);
    return r;
}

// Independent route: assemble the wave on the sigma = t^{-1/2} grid, then
// substitute.  Slot k is multiplied by (-u)^k q^{(f-1)k}; the surviving
// u exponents must be even, and u^2 -> -a^2/q, sigma -> q.
inline XSeries psi_substituted_wave(int f, int lmax, long long qorder) {
    const int ord = lmax + 1;
    const long long slack = 2LL * lmax + 4;
    std::vector<NuTSeries> psi = wave(1, f, lmax, qorder + slack,
                                      TGrid::ascending_t_inv,
                                      std::max(kDefaultSizeCap, lmax));
    XSeries r(ord);
    for (int k = 0; k < ord; ++k) {
        NuTSeries slot = psi[size_t(k)].scaled(k % 2 == 0 ? 1 : -1, k, 0);
        AQCoeff acc;
        for (const auto& [u_exp, sigma] : slot.terms()) {
            if (u_exp % 2 != 0)
                throw parity_violation("odd u-exponent " + std::to_string(u_exp) +
                                       " at x^" + std::to_string(k));
            const long long e = u_exp / 2;  // u^{2e} -> (-1)^e a^{2e} q^{-e}
            AQCoeff piece = AQCoeff::from_q(sigma.shifted(-e) * Int(e % 2 == 0 ? 1 : -1));
            acc += piece.scaled(1, 2 * e, 0);
        }
        r.coeff(k) = acc.q_shifted(static_cast<long long>(f - 1) * k);
    }
    return r;
}

// Production entry point for the substituted wave function: evaluates both
// routes and insists they agree below the window.
inline XSeries psi_substituted(int f, int lmax, long long qorder) {
    XSeries tau = psi_substituted_tau(f, lmax, qorder);
    XSeries via_wave = psi_substituted_wave(f, lmax, qorder);
    if (auto mis = first_mismatch(tau, via_wave, lmax + 1, qorder))
        throw route_mismatch("psi routes differ at x^" + std::to_string(mis->x_exp) +
                             " a^" + std::to_string(mis->a_exp) + " q^" +
                             std::to_string(mis->q_exp) + ": " +
                             mis->expected.str() + " vs " + mis->got.str());
    return tau;
}

// Generating function of the superpolynomials of unreduced colored
// HOMFLY-PT homology of T_{1,f}: P_0 = 1 and
//   P_{r+1} = -q^{(2r+1)f} (a^2 + q^{2r+1}) / (1 - q^{2r+2}) * P_r.
inline XSeries superpoly_series(int f, int rmax, long long qorder) {
    if (rmax < 0 || qorder <= 0) throw error("superpoly_series: bad parameters");
    XSeries p(rmax + 1);
    p.coeff(0) = AQCoeff::one();
    for (int r = 0; r < rmax; ++r) {
        QWindowSeries inv = q_invert_unit(
            QWindowSeries::one() - QWindowSeries::monomial(1, 2 * r + 2), qorder);
        AQCoeff factor = (AQCoeff::monomial(-1, 2, (2LL * r + 1) * f) +
                          AQCoeff::monomial(-1, 0, (2LL * r + 1) * f + 2 * r + 1)) *
                         AQCoeff::from_q(inv);
        p.coeff(r + 1) = factor * p.coeff(r);
    }
    return p;
}

// Residual of the quantum-A-polynomial q-difference equation
//   q^{f+1} x P(q^{2f+2} x) = P(q^2 x) - q^f a^2 x P(q^{2f} x) - P(x),
// which must vanish identically below `qorder`.
inline std::optional<XMismatch> check_pbar_qdiff(int f, int rmax, long long qorder) {
    XSeries p = superpoly_series(f, rmax, qorder + (2LL * f + 3) * rmax + 4);
    const int ord = rmax + 1;
    XSeries lhs = x_shift_up(qshift(p, 2 * f + 2)) * AQCoeff::monomial(1, 0, f + 1);
    XSeries rhs = qshift(p, 2) - x_shift_up(qshift(p, 2 * f)) * AQCoeff::monomial(1, 2, f) - p;
    return first_mismatch(lhs, rhs, ord, qorder);
}

// ytilde_i = P(q^{2i-1} x) / P(q^{-1} x) for 1 <= i <= f+1.  The recursion
//   ytilde_i = ytilde_1(q^{2(i-1)} x) * ytilde_{i-1}
// is asserted as a cross-check for i >= 2.
inline XSeries ytilde(int f, int i, int lmax, long long qorder) {
    if (i < 1 || i > f + 1) throw error("ytilde: need 1 <= i <= f+1");
    const int ord = lmax + 1;
    XSeries p = superpoly_series(f, lmax, qorder + (2LL * f + 3) * lmax + 8);
    XSeries denom_inv = x_invert(qshift(p, -1));
    auto make = [&](int ii) { return qshift(p, 2 * ii - 1) * denom_inv; };
    XSeries yi = make(i);
    if (i >= 2) {
        XSeries rec = qshift(make(1), 2LL * (i - 1)) * make(i - 1);
        if (auto mis = first_mismatch(yi, rec, ord, qorder))
            throw route_mismatch("ytilde recursion failed at i=" + std::to_string(i) +
                                 ", x^" + std::to_string(mis->x_exp));
    }
    return yi;
}

}  // namespace schroder

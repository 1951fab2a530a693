#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "schroder/partition.hpp"

namespace schroder {

inline constexpr int kDefaultSizeCap = 8;

// Symmetric-group character values chi^lambda_rho via the
// Murnaghan-Nakayama border-strip recursion, memoized per instance.
// Instances are cheap and not shared across threads.
class CharacterTable {
public:
    long long chi(const Partition& lambda, const Partition& rho) {
        if (partition_size(lambda) != partition_size(rho))
            throw error("chi: |lambda| != |rho|");
        if (lambda.empty()) return 1;
        auto key = std::make_pair(lambda, rho);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        // Remove a border strip of length rho[0] in every possible way.
        // In beta-number coordinates b_i = lambda_i + (L - i), removing a
        // strip of length r means replacing some b with b - r >= 0 not
        // already present; the sign is (-1)^{#betas strictly between}.
        const int r = rho[0];
        const Partition rest(rho.begin() + 1, rho.end());
        const int L = static_cast<int>(lambda.size());
        std::vector<long long> beta(lambda.size());
        for (int i = 0; i < L; ++i) beta[size_t(i)] = lambda[size_t(i)] + (L - 1 - i);
        long long total = 0;
        for (int i = 0; i < L; ++i) {
            long long target = beta[size_t(i)] - r;
            if (target < 0) continue;
            bool clash = false;
            int between = 0;
            for (int j = 0; j < L; ++j) {
                if (j == i) continue;
                if (beta[size_t(j)] == target) clash = true;
                if (beta[size_t(j)] > target && beta[size_t(j)] < beta[size_t(i)]) ++between;
            }
            if (clash) continue;
            std::vector<long long> nb = beta;
            nb[size_t(i)] = target;
            std::sort(nb.begin(), nb.end(), std::greater<long long>());
            Partition next;
            for (int j = 0; j < L; ++j) {
                long long part = nb[size_t(j)] - (L - 1 - j);
                if (part > 0) next.push_back(static_cast<int>(part));
            }
            long long sign = (between % 2 == 0) ? 1 : -1;
            total += sign * chi(next, rest);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<Partition, Partition>, long long> memo_;
};

// Expansion of a symmetric function in the power-sum basis: finitely many
// partitions rho mapping to exact rational coefficients.
using PowerSumVector = std::map<Partition, Rational>;

// s_lambda = sum_rho (chi^lambda_rho / z_rho) p_rho.
inline PowerSumVector schur_in_powersums(const Partition& lambda,
                                         CharacterTable& chars,
                                         int size_cap = kDefaultSizeCap) {
    const int n = partition_size(lambda);
    if (n > size_cap)
        throw size_cap_exceeded("|lambda| = " + std::to_string(n) + " exceeds cap " +
                                std::to_string(size_cap));
    PowerSumVector v;
    for (const Partition& rho : partitions_of(n)) {
        long long c = chars.chi(lambda, rho);
        if (c != 0) v.emplace(rho, Rational(Int(c), z_rho(rho)));
    }
    return v;
}

// Inverse of the above: a power-sum vector expanded over the Schur basis,
// using p_rho = sum_mu chi^mu_rho s_mu.
inline std::map<Partition, Rational> powersum_to_schur(const PowerSumVector& v,
                                                       CharacterTable& chars) {
    std::map<Partition, Rational> out;
    if (v.empty()) return out;
    const int n = partition_size(v.begin()->first);
    for (const Partition& mu : partitions_of(n)) {
        Rational acc = 0;
        for (const auto& [rho, c] : v) {
            if (partition_size(rho) != n) throw error("mixed degrees in power-sum vector");
            long long x = chars.chi(mu, rho);
            if (x != 0) acc += c * x;
        }
        if (acc != 0) out.emplace(mu, acc);
    }
    return out;
}

// Adams coefficients C^lambda_{mu,m}:
//   s_lambda(m t_m, m t_{2m}, ...) = sum_{mu of m|lambda|} C^lambda_{mu,m} s_mu,
// computed as p_k -> p_{km} on the power-sum expansion.  The results are
// integers; a non-integral value signals a bug.
inline std::map<Partition, Int> adams_coeffs(const Partition& lambda, int m,
                                             CharacterTable& chars,
                                             int size_cap = kDefaultSizeCap) {
    if (m < 1) throw error("adams_coeffs: need m >= 1");
    const int n = partition_size(lambda);
    if (static_cast<long long>(m) * n > size_cap)
        throw size_cap_exceeded("m|lambda| = " + std::to_string(m * n) + " exceeds cap " +
                                std::to_string(size_cap));
    PowerSumVector stretched;
    for (const auto& [rho, c] : schur_in_powersums(lambda, chars, size_cap))
        stretched.emplace(stretch(rho, m), c);
    std::map<Partition, Int> out;
    for (const auto& [mu, c] : powersum_to_schur(stretched, chars)) {
        if (denominator(c) != 1)
            throw non_integral_coefficient("C^" + partition_to_string(lambda) + "_" +
                                           partition_to_string(mu) + " = " + c.str());
        out.emplace(mu, numerator(c));
    }
    return out;
}

}  // namespace schroder

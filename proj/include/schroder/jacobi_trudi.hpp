#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "schroder/partition.hpp"

namespace schroder {

// Brute-force Schur polynomials as explicit polynomials in t_1, t_2, ...,
// built from the elementary-Schur generating function
//     sum_n s_(n)(t) x^n = exp(sum_k t_k x^k)
// and the Jacobi-Trudi determinant.  This route never touches the
// character machinery, so it serves as an independent oracle for
// adams_coeffs.  Exponent vectors index t_1^{e_1} t_2^{e_2} ...
namespace jt {

using TPoly = std::map<std::vector<int>, Rational>;

inline void add_term(TPoly& p, std::vector<int> mono, const Rational& c) {
    if (c == 0) return;
    while (!mono.empty() && mono.back() == 0) mono.pop_back();
    auto [it, fresh] = p.emplace(std::move(mono), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline TPoly mul(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
            add_term(r, std::move(m), ca * cb);
        }
    return r;
}

inline TPoly add(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    for (const auto& [m, c] : b) add_term(r, m, c);
    return r;
}

inline TPoly scale(const TPoly& a, const Rational& c) {
    TPoly r;
    for (const auto& [m, x] : a) add_term(r, m, x * c);
    return r;
}

inline TPoly one() { return TPoly{{{}, Rational(1)}}; }

// Elementary Schur polynomial s_(n)(t) from the exponential generating
// function, via E_k = (1/k) sum_j (j t_j) E_{k-j}.
inline TPoly elementary_schur(int n) {
    if (n < 0) return TPoly{};
    std::vector<TPoly> e(static_cast<size_t>(n) + 1);
    e[0] = one();
    for (int k = 1; k <= n; ++k) {
        TPoly acc;
        for (int j = 1; j <= k; ++j) {
            std::vector<int> tj(static_cast<size_t>(j), 0);
            tj[size_t(j - 1)] = 1;
            TPoly term = mul(TPoly{{tj, Rational(j)}}, e[size_t(k - j)]);
            acc = add(acc, term);
        }
        e[size_t(k)] = scale(acc, Rational(1, k));
    }
    return e[size_t(n)];
}

// Jacobi-Trudi: s_lambda = det( s_(lambda_i - i + j) ), evaluated by
// dynamic programming over column subsets (row r of a mask with r+1 set
// bits is expanded over its columns).
inline TPoly schur(const Partition& lambda) {
    const int L = static_cast<int>(lambda.size());
    if (L == 0) return one();
    const int emax = lambda[0] + L - 1;
    std::vector<TPoly> elem;
    elem.reserve(static_cast<size_t>(emax) + 1);
    for (int e = 0; e <= emax; ++e) elem.push_back(elementary_schur(e));
    auto entry = [&](int i, int j) -> const TPoly* {
        int idx = lambda[size_t(i)] - (i + 1) + (j + 1);
        if (idx < 0) return nullptr;
        return &elem[size_t(idx)];
    };
    std::vector<TPoly> det(size_t(1) << L);
    det[0] = one();
    for (unsigned mask = 1; mask < (1u << L); ++mask) {
        const int row = __builtin_popcount(mask) - 1;
        TPoly acc;
        int pos = 0;  // index of the column within the mask
        for (int j = 0; j < L; ++j) {
            if (!(mask & (1u << j))) continue;
            const TPoly* e = entry(row, j);
            if (e) {
                TPoly term = mul(*e, det[mask & ~(1u << j)]);
                acc = add(acc, (row + pos) % 2 == 0 ? term : scale(term, Rational(-1)));
            }
            ++pos;
        }
        det[mask] = std::move(acc);
    }
    return det[(size_t(1) << L) - 1];
}

// The substitution t_i -> m * t_{i m}.
inline TPoly adams_substitute(const TPoly& p, int m) {
    TPoly r;
    for (const auto& [mono, c] : p) {
        std::vector<int> nm(mono.size() * static_cast<size_t>(m), 0);
        Rational nc = c;
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            nm[(i + 1) * static_cast<size_t>(m) - 1] = mono[i];
            for (int rep = 0; rep < mono[i]; ++rep) nc *= m;
        }
        add_term(r, std::move(nm), nc);
    }
    return r;
}

// Expands a homogeneous degree-N polynomial (weighted degree: t_i has
// weight i) over the Schur basis {s_mu : mu of N} by Gaussian elimination
// on the monomial coordinates.
inline std::map<Partition, Rational> expand_in_schur_basis(const TPoly& target, int n) {
    const std::vector<Partition> mus = partitions_of(n);
    const size_t dim = mus.size();
    // Collect the monomial support of all basis elements plus the target.
    std::map<std::vector<int>, size_t> mono_index;
    std::vector<TPoly> basis;
    basis.reserve(dim);
    for (const Partition& mu : mus) {
        basis.push_back(schur(mu));
        for (const auto& [m, c] : basis.back()) mono_index.emplace(m, 0);
    }
    for (const auto& [m, c] : target) mono_index.emplace(m, 0);
    size_t rows = 0;
    for (auto& [m, idx] : mono_index) idx = rows++;
    // Solve A x = b where columns of A are the basis vectors.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(dim + 1, Rational(0)));
    for (size_t col = 0; col < dim; ++col)
        for (const auto& [m, c] : basis[col]) a[mono_index[m]][col] = c;
    for (const auto& [m, c] : target) a[mono_index[m]][dim] = c;
    std::vector<size_t> pivot_col(rows, dim + 1);
    size_t rank = 0;
    for (size_t col = 0; col < dim && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (size_t j = col; j <= dim; ++j) a[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (size_t j = col; j <= dim; ++j) a[r][j] -= factor * a[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    std::map<Partition, Rational> out;
    for (size_t r = 0; r < rank; ++r)
        if (pivot_col[r] < dim && a[r][dim] != 0) out.emplace(mus[pivot_col[r]], a[r][dim]);
    // Rows past the rank must have zero rhs or the target is outside the span.
    for (size_t r = rank; r < rows; ++r)
        if (a[r][dim] != 0) throw error("target not in Schur span");
    return out;
}

}  // namespace jt

// Oracle form of the Adams coefficients: fully explicit t-variable
// computation, no characters involved.
inline std::map<Partition, Rational> adams_coeffs_jt_oracle(const Partition& lambda,
                                                            int m) {
    jt::TPoly substituted = jt::adams_substitute(jt::schur(lambda), m);
    return jt::expand_in_schur_basis(substituted, m * partition_size(lambda));
}

}  // namespace schroder

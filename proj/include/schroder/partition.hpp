#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "schroder/bigint.hpp"
#include "schroder/errors.hpp"

namespace schroder {

// A partition is a weakly decreasing sequence of positive integers.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int i = 1; i <= p[0]; ++i) {
        int cnt = 0;
        for (int x : p)
            if (x >= i) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

// All partitions of n in reverse-lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Centralizer order z_rho = prod k^{m_k} m_k!.
inline Int z_rho(const Partition& rho) {
    std::map<int, int> mult;
    for (int part : rho) ++mult[part];
    Int z = 1;
    for (const auto& [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
    }
    return z;
}

// kappa_mu = 2 * sum_{i} sum_{j=1}^{mu_i} (j - i)  (framing exponent).
inline long long kappa(const Partition& mu) {
    long long k = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        long long row = static_cast<long long>(i) + 1;
        long long len = mu[i];
        // sum_{j=1}^{len} (j - row) = len(len+1)/2 - row*len
        k += 2 * (len * (len + 1) / 2 - row * len);
    }
    return k;
}

// Scale every part by m (the index rescaling of the Adams operation).
inline Partition stretch(const Partition& p, int m) {
    Partition r;
    r.reserve(p.size());
    for (int x : p) r.push_back(x * m);
    return r;
}

inline std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "[]";
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

// Parses a comma-separated part list, e.g. "3,1,1".  An empty string is
// the empty partition.
inline Partition parse_partition(const std::string& text) {
    Partition p;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        p.push_back(std::stoi(tok));
    }
    if (!is_partition(p)) throw error("not a partition: " + text);
    return p;
}

}  // namespace schroder

#pragma once

/// Quantum integers, quantum factorials and binomials (balanced convention),
/// q-Pochhammer symbols and Gaussian binomials/multinomials.
///
/// [n]  = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2})
/// (q)_n = prod_{i=1..n} (1 - q^i)
/// All ratios are evaluated by exact division, which is asserted to leave
/// zero remainder on the stated domains.

#include <cstdlib>
#include <mutex>
#include <string>
#include <vector>

#include "qlaurent.hpp"

namespace a2skein {

/// Optional cap on memo-table sizes, read from A2SKEIN_CACHE_MAX.
/// 0 means unlimited.  When a table is full, values are computed fresh.
inline std::size_t cache_max_entries() {
    static const std::size_t v = [] {
        const char* s = std::getenv("A2SKEIN_CACHE_MAX");
        if (!s) return std::size_t{0};
        long long n = std::atoll(s);
        return n > 0 ? static_cast<std::size_t>(n) : std::size_t{0};
    }();
    return v;
}

/// Memo tables for quantum factorials and Pochhammer symbols.  Results are
/// identical with or without the cache; a fresh instance can be used to
/// cross-check the shared one.
class QCombCache {
public:
    QLaurent quantum_factorial(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        return factorial_locked(n);
    }

    QLaurent pochhammer(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        return pochhammer_locked(n);
    }

    static QCombCache& shared() {
        static QCombCache c;
        return c;
    }

private:
    QLaurent factorial_locked(int n) {
        if (n < static_cast<int>(fact_.size())) return fact_[static_cast<size_t>(n)];
        if (fact_.empty()) fact_.push_back(QLaurent(1));
        const std::size_t cap = cache_max_entries();
        QLaurent v = fact_.back();
        for (int k = static_cast<int>(fact_.size()); k <= n; ++k) {
            v = v * quantum_integer(k);
            if (cap == 0 || fact_.size() < cap) fact_.push_back(v);
        }
        return v;
    }

    QLaurent pochhammer_locked(int n) {
        if (n < static_cast<int>(poch_.size())) return poch_[static_cast<size_t>(n)];
        if (poch_.empty()) poch_.push_back(QLaurent(1));
        const std::size_t cap = cache_max_entries();
        QLaurent v = poch_.back();
        for (int k = static_cast<int>(poch_.size()); k <= n; ++k) {
            QLaurent f = QLaurent(1) - QLaurent::q_int_power(k);
            v = v * f;
            if (cap == 0 || poch_.size() < cap) poch_.push_back(v);
        }
        return v;
    }

public:
    /// [n] as a Laurent polynomial in q^{1/2}: sum_{i} q^{(n-1)/2 - i}.
    static QLaurent quantum_integer(int n) {
        if (n < 0) throw negative_argument("quantum integer of negative argument " + std::to_string(n));
        QLaurent r;
        for (int i = 0; i < n; ++i) r.add_term(3 * (n - 1) - 6 * i, 1);
        return r;
    }

private:
    std::mutex mu_;
    std::vector<QLaurent> fact_;
    std::vector<QLaurent> poch_;
};

inline QLaurent quantum_int(int n) { return QCombCache::quantum_integer(n); }

inline QLaurent quantum_factorial(int n) {
    if (n < 0) throw negative_argument("quantum factorial of negative argument");
    return QCombCache::shared().quantum_factorial(n);
}

/// Balanced quantum binomial [n]! / ([k]! [n-k]!); 0 for k < 0 or k > n.
inline QLaurent quantum_binom(int n, int k) {
    if (n < 0) throw negative_argument("quantum binomial with negative upper argument");
    if (k < 0 || k > n) return QLaurent{};
    QLaurent q, den = quantum_factorial(k) * quantum_factorial(n - k);
    if (!QLaurent::div_exact(quantum_factorial(n), den, q))
        throw error("quantum binomial division left a remainder");
    return q;
}

/// (q)_n = prod_{i=1..n} (1 - q^i).
inline QLaurent q_pochhammer(int n) {
    if (n < 0) throw negative_argument("q-Pochhammer of negative argument");
    return QCombCache::shared().pochhammer(n);
}

/// Gaussian binomial (q)_n / ((q)_k (q)_{n-k}); 0 for k < 0 or k > n.
inline QLaurent q_binom(int n, int k) {
    if (n < 0) throw negative_argument("q-binomial with negative upper argument");
    if (k < 0 || k > n) return QLaurent{};
    QLaurent q, den = q_pochhammer(k) * q_pochhammer(n - k);
    if (!QLaurent::div_exact(q_pochhammer(n), den, q))
        throw error("q-binomial division left a remainder");
    return q;
}

/// Gaussian multinomial (q)_n / prod_i (q)_{k_i} with sum k_i = n.
inline QLaurent q_multinom(int n, const std::vector<int>& parts) {
    if (n < 0) throw negative_argument("q-multinomial with negative upper argument");
    long long sum = 0;
    QLaurent den(1);
    for (int p : parts) {
        if (p < 0) throw negative_argument("q-multinomial with negative part");
        sum += p;
        den = den * q_pochhammer(p);
    }
    if (sum != n)
        throw parts_sum_mismatch("q-multinomial parts sum to " + std::to_string(sum) + ", expected " +
                                 std::to_string(n));
    QLaurent q;
    if (!QLaurent::div_exact(q_pochhammer(n), den, q))
        throw error("q-multinomial division left a remainder");
    return q;
}

/// Ratio (q)_n / (q)_m for n >= m, i.e. prod_{i=m+1..n} (1 - q^i).
inline QLaurent q_pochhammer_ratio(int n, int m) {
    if (m < 0 || n < m) throw negative_argument("invalid q-Pochhammer ratio");
    QLaurent r(1);
    for (int i = m + 1; i <= n; ++i) r = r * (QLaurent(1) - QLaurent::q_int_power(i));
    return r;
}

} // namespace a2skein

#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "characters.hpp"
#include "multipoly.hpp"
#include "partitions.hpp"
#include "statistic_basis.hpp"

namespace charpoly {

/// Permutation in one-line notation (values 1..n).
using Perm = std::vector<int>;

inline void check_perm(const Perm& pi) {
    std::vector<bool> seen(pi.size() + 1, false);
    for (int v : pi) {
        if (v < 1 || v > static_cast<int>(pi.size()) || seen[static_cast<size_t>(v)])
            throw error("Perm: not a bijection");
        seen[static_cast<size_t>(v)] = true;
    }
}

inline Partition cycle_type(const Perm& pi) {
    size_t n = pi.size();
    std::vector<bool> seen(n + 1, false);
    std::vector<long> cyc;
    for (size_t v = 1; v <= n; ++v) {
        if (seen[v])
            continue;
        long len = 0;
        size_t cur = v;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = static_cast<size_t>(pi[cur - 1]);
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.rbegin(), cyc.rend());
    return Partition(std::move(cyc));
}

/// Number of increasing subsequences of each length 0..n, by dynamic
/// programming over (position, length).
inline std::vector<Int> count_increasing_all(const Perm& pi) {
    size_t n = pi.size();
    // ending[i][t]: increasing subsequences of length t ending at position i
    std::vector<std::vector<Int>> ending(n, std::vector<Int>(n + 1));
    std::vector<Int> totals(n + 1);
    totals[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        ending[i][1] = 1;
        for (size_t j = 0; j < i; ++j) {
            if (pi[j] >= pi[i])
                continue;
            for (size_t t = 1; t < n; ++t) {
                if (ending[j][t] == 0)
                    continue;
                ending[i][t + 1] += ending[j][t];
            }
        }
        for (size_t t = 1; t <= n; ++t)
            totals[t] += ending[i][t];
    }
    return totals;
}

inline Int count_increasing(const Perm& pi, long k) {
    if (k < 0 || k > static_cast<long>(pi.size()))
        return 0;
    return count_increasing_all(pi)[static_cast<size_t>(k)];
}

namespace detail {

// For each cycle type of S_n: the sum over its class of the vectors
// (N_0, ..., N_n).  One pass over S_n serves every statistic.
inline const std::map<Partition, std::vector<Int>>& class_pattern_sums(long n) {
    static std::map<long, std::map<Partition, std::vector<Int>>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;

    std::map<Partition, std::vector<Int>> sums;
    Perm pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
        std::vector<Int> counts = count_increasing_all(pi);
        auto [slot, inserted] =
            sums.try_emplace(cycle_type(pi), std::vector<Int>(static_cast<size_t>(n) + 1));
        for (size_t k = 0; k <= static_cast<size_t>(n); ++k)
            slot->second[k] += counts[k];
    } while (std::next_permutation(pi.begin(), pi.end()));
    return memo.emplace(n, std::move(sums)).first->second;
}

inline void check_brute_cap(long n, bool allow_large) {
    if (n < 0 || n > (allow_large ? 10 : 9))
        throw error("oracle: S_n enumeration cap exceeded (n = " + std::to_string(n) +
                    ")");
}

} // namespace detail

/// (1/n!) sum over S_n of chi^{lambda[n]} * N_k, the definitional average.
/// With use_x_poly the character is replaced by Macdonald's X^lambda, which
/// extends the definition below n = |lambda| + lambda_1.
inline Rat brute_a(const Partition& lambda, long n, long k, bool use_x_poly,
                   bool allow_large = false) {
    detail::check_brute_cap(n, allow_large);
    if (k < 0 || k > n)
        return 0;
    if (!use_x_poly && n < lambda.size() + lambda.largest())
        throw error("brute_a: genuine character needs n >= |lambda| + lambda_1");
    MultiPoly X({"m1"});
    if (use_x_poly)
        X = x_lambda(lambda);
    Rat total = 0;
    for (const auto& [ct, counts] : detail::class_pattern_sums(n)) {
        Rat chi = use_x_poly ? eval_at_cycle_type(X, ct)
                             : Rat(mn_character(lambda.padded(n), ct));
        total += chi * Rat(counts[static_cast<size_t>(k)]);
    }
    return total / Rat(factorial(n));
}

/// (1/n!) sum over S_n of f * N_k for a statistic f in the m_j variables.
inline Rat brute_expected(const MultiPoly& f, long n, long k,
                          bool allow_large = false) {
    detail::check_brute_cap(n, allow_large);
    if (k < 0 || k > n)
        return 0;
    Rat total = 0;
    for (const auto& [ct, counts] : detail::class_pattern_sums(n))
        total += eval_at_cycle_type(f, ct) * Rat(counts[static_cast<size_t>(k)]);
    return total / Rat(factorial(n));
}

} // namespace charpoly

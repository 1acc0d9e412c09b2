#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "partitions.hpp"
#include "rational.hpp"

namespace charpoly {

namespace detail {

// Beta-number (abacus) form of Murnaghan-Nakayama.  Removing a border strip
// of length t corresponds to b -> b - t for some beta number b with
// b - t >= 0 not already present; the strip height is the number of beta
// numbers strictly between b - t and b.
inline Int mn_rec(std::vector<long> betas, std::vector<long> cycles,
                  std::map<std::pair<std::vector<long>, std::vector<long>>, Int>& memo) {
    if (cycles.empty())
        return 1;
    auto key = std::make_pair(betas, cycles);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    long t = cycles.back();
    std::vector<long> rest(cycles.begin(), cycles.end() - 1);
    Int total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        long b = betas[i], nb = b - t;
        if (nb < 0)
            continue;
        bool clash = false;
        long height = 0;
        for (size_t j = 0; j < betas.size(); ++j) {
            if (j == i)
                continue;
            if (betas[j] == nb)
                clash = true;
            if (betas[j] > nb && betas[j] < b)
                ++height;
        }
        if (clash)
            continue;
        std::vector<long> nbetas(betas);
        nbetas[i] = nb;
        std::sort(nbetas.begin(), nbetas.end());
        Int sub = mn_rec(std::move(nbetas), rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace detail

/// Irreducible symmetric-group character chi^mu evaluated at a cycle type,
/// by the Murnaghan-Nakayama rule.  Exact integer; memoized.
inline Int mn_character(const Partition& mu, const Partition& cycle_type) {
    if (mu.size() != cycle_type.size())
        throw error("mn_character: |mu| != |cycle type|");
    static std::map<std::pair<std::vector<long>, std::vector<long>>, Int> memo;
    static std::mutex mtx;
    long L = mu.len();
    std::vector<long> betas(static_cast<size_t>(L));
    for (long i = 0; i < L; ++i)
        betas[static_cast<size_t>(i)] = mu.part(i) + (L - 1 - i);
    std::sort(betas.begin(), betas.end());
    // strips removed largest-last; order of cycle parts does not matter
    std::vector<long> cycles(cycle_type.parts());
    std::sort(cycles.begin(), cycles.end());
    std::lock_guard<std::mutex> lock(mtx);
    return detail::mn_rec(std::move(betas), std::move(cycles), memo);
}

/// chi^lambda(id): the dimension of the irreducible.
inline Int character_dimension(const Partition& lambda) {
    if (lambda.empty())
        return 1;
    std::vector<long> ones(static_cast<size_t>(lambda.size()), 1);
    return mn_character(lambda, Partition(std::move(ones)));
}

} // namespace charpoly

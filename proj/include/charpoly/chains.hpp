#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "factorials.hpp"
#include "partitions.hpp"
#include "rational.hpp"

namespace charpoly {

/// Conjugacy invariant of a sequence arrangement: nu loops plus chains whose
/// vertex-count multiset is mu.  Length r = nu + |mu|; degree = r - len(mu).
struct ChainType {
    long rank = 0;
    Partition mu;

    ChainType() = default;
    ChainType(long nu, Partition m) : rank(nu), mu(std::move(m)) {
        if (nu < 0)
            throw error("ChainType: negative rank");
    }

    long length() const { return rank + mu.size(); }
    long degree() const { return length() - mu.len(); }
    long m(long j) const { return mu.m(j); }
    bool is_reduced() const { return mu.m(1) == 0; }

    /// drop all size-1 chains
    ChainType reduced() const {
        std::vector<long> parts;
        for (long p : mu.parts())
            if (p > 1)
                parts.push_back(p);
        return ChainType(rank, Partition(std::move(parts)));
    }

    /// chains shrink by one vertex, loops persist
    ChainType derivative() const {
        std::vector<long> parts;
        for (long p : mu.parts())
            if (p >= 2)
                parts.push_back(p - 1);
        return ChainType(rank, Partition(std::move(parts)));
    }

    /// one size-1 chain removed (requires m_1 >= 1)
    ChainType dotted() const {
        if (mu.m(1) == 0)
            throw error("ChainType: dotted() needs a size-1 chain");
        std::vector<long> parts(mu.parts());
        parts.pop_back();  // parts are descending, size-1 chains at the back
        return ChainType(rank, Partition(std::move(parts)));
    }

    friend bool operator==(const ChainType& a, const ChainType& b) {
        return a.rank == b.rank && a.mu == b.mu;
    }
    friend bool operator<(const ChainType& a, const ChainType& b) {
        if (a.rank != b.rank)
            return a.rank > b.rank;  // canonical order: rank descending
        return b.mu < a.mu;          // then mu lexicographically descending
    }

    std::string str() const { return "(" + std::to_string(rank) + ",(" + mu.str() + "))"; }
    std::string key() const { return "nu" + std::to_string(rank) + "_mu" + mu.str(); }
};

/// the unique rank-d type of length r (d loops, r-d size-1 chains)
inline ChainType loops_and_dots(long r, long d) {
    if (d < 0 || d > r)
        throw error("loops_and_dots: need 0 <= d <= r");
    return ChainType(d, Partition(std::vector<long>(static_cast<size_t>(r - d), 1)));
}

/// all chain types of length r, optionally filtered by degree and rank
inline std::vector<ChainType> enum_chain_types(long r, std::optional<long> deg = {},
                                               std::optional<long> rank = {}) {
    if (r < 0)
        throw error("enum_chain_types: negative length");
    std::vector<ChainType> out;
    for (long nu = r; nu >= 0; --nu) {
        if (rank && *rank != nu)
            continue;
        for (const Partition& mu : all_partitions(r - nu)) {
            ChainType t(nu, mu);
            if (deg && *deg != t.degree())
                continue;
            out.push_back(std::move(t));
        }
    }
    return out;
}

/// Order-compatible pair set on [r]^2: for all (i,j),(i',j') in the set,
/// i <= i' iff j <= j'.  Stored with pairs sorted by first coordinate
/// (equivalently by second).
struct Arrangement {
    long length = 0;
    std::vector<std::pair<long, long>> pairs;

    Arrangement() = default;
    Arrangement(long r, std::vector<std::pair<long, long>> ps)
        : length(r), pairs(std::move(ps)) {
        std::sort(pairs.begin(), pairs.end());
        for (size_t a = 0; a < pairs.size(); ++a) {
            auto [i, j] = pairs[a];
            if (i < 1 || i > r || j < 1 || j > r)
                throw error("Arrangement: pair out of range");
            if (a > 0) {
                auto [pi, pj] = pairs[a - 1];
                if (pi == i || pj >= j)
                    throw error("Arrangement: order compatibility violated");
            }
        }
    }

    long degree() const { return static_cast<long>(pairs.size()); }

    ChainType typ() const {
        // graph on [length]: out-edge i -> j per pair
        std::vector<long> succ(static_cast<size_t>(length) + 1, 0);
        std::vector<bool> has_pred(static_cast<size_t>(length) + 1, false);
        long loops = 0;
        for (auto [i, j] : pairs) {
            if (i == j) {
                ++loops;
                continue;
            }
            succ[static_cast<size_t>(i)] = j;
            has_pred[static_cast<size_t>(j)] = true;
        }
        std::vector<long> chain_sizes;
        for (long v = 1; v <= length; ++v) {
            bool is_loop = false;
            for (auto [i, j] : pairs)
                if (i == v && j == v)
                    is_loop = true;
            if (is_loop || has_pred[static_cast<size_t>(v)])
                continue;
            long sz = 1, cur = v;
            while (succ[static_cast<size_t>(cur)] != 0) {
                cur = succ[static_cast<size_t>(cur)];
                ++sz;
            }
            chain_sizes.push_back(sz);
        }
        std::sort(chain_sizes.rbegin(), chain_sizes.rend());
        return ChainType(loops, Partition(std::move(chain_sizes)));
    }
};

/// Canonical representative of A(tau): loop blocks first, then one block of
/// consecutive indices per chain part in decreasing size with edges
/// (i, i+1).
inline Arrangement representative(const ChainType& tau) {
    std::vector<std::pair<long, long>> pairs;
    long next = 1;
    for (long p = 0; p < tau.rank; ++p, ++next)
        pairs.emplace_back(next, next);
    for (long part : tau.mu.parts()) {
        for (long i = 0; i < part - 1; ++i)
            pairs.emplace_back(next + i, next + i + 1);
        next += part;
    }
    return Arrangement(tau.length(), std::move(pairs));
}

/// all arrangements of length r (pairs of d-subsets matched in order)
inline std::vector<Arrangement> all_arrangements(long r) {
    std::vector<Arrangement> out;
    std::vector<std::vector<long>> subsets;
    std::vector<long> cur;
    std::function<void(long)> rec = [&](long from) {
        subsets.push_back(cur);
        for (long v = from; v <= r; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    for (const auto& firsts : subsets)
        for (const auto& seconds : subsets) {
            if (firsts.size() != seconds.size())
                continue;
            std::vector<std::pair<long, long>> pairs;
            for (size_t t = 0; t < firsts.size(); ++t)
                pairs.emplace_back(firsts[t], seconds[t]);
            out.emplace_back(r, std::move(pairs));
        }
    return out;
}

/// zeta: number of sub-arrangements of a fixed representative of
/// omega_prime having type omega (independent of the representative).
inline Int zeta_count(const ChainType& omega, const ChainType& omega_prime) {
    if (omega.length() != omega_prime.length())
        throw error("zeta_count: lengths differ");
    Arrangement rep = representative(omega_prime);
    size_t d = rep.pairs.size();
    Int count = 0;
    for (size_t mask = 0; mask < (size_t{1} << d); ++mask) {
        std::vector<std::pair<long, long>> sub;
        for (size_t b = 0; b < d; ++b)
            if (mask & (size_t{1} << b))
                sub.push_back(rep.pairs[b]);
        Arrangement beta(rep.length, std::move(sub));
        if (beta.typ() == omega)
            count += 1;
    }
    return count;
}

namespace detail {

// Histogram of cycle types of {sigma in S_r : alpha | sigma} for a
// representative alpha of tau.  sigma is forced on the first coordinates of
// alpha's pairs; the remaining values are a free bijection.
inline const std::map<Partition, Int>& containing_cycle_types(const ChainType& tau) {
    static std::map<std::string, std::map<Partition, Int>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(tau.key());
    if (it != memo.end())
        return it->second;

    Arrangement alpha = representative(tau);
    long r = tau.length();
    std::vector<long> sigma(static_cast<size_t>(r) + 1, 0);
    std::vector<bool> used(static_cast<size_t>(r) + 1, false);
    for (auto [i, j] : alpha.pairs) {
        sigma[static_cast<size_t>(i)] = j;
        used[static_cast<size_t>(j)] = true;
    }
    std::vector<long> free_src, free_dst;
    for (long v = 1; v <= r; ++v) {
        if (sigma[static_cast<size_t>(v)] == 0)
            free_src.push_back(v);
        if (!used[static_cast<size_t>(v)])
            free_dst.push_back(v);
    }
    std::map<Partition, Int> hist;
    std::sort(free_dst.begin(), free_dst.end());
    do {
        for (size_t t = 0; t < free_src.size(); ++t)
            sigma[static_cast<size_t>(free_src[t])] = free_dst[t];
        // cycle type of sigma
        std::vector<bool> seen(static_cast<size_t>(r) + 1, false);
        std::vector<long> cyc;
        for (long v = 1; v <= r; ++v) {
            if (seen[static_cast<size_t>(v)])
                continue;
            long len = 0, cur = v;
            while (!seen[static_cast<size_t>(cur)]) {
                seen[static_cast<size_t>(cur)] = true;
                cur = sigma[static_cast<size_t>(cur)];
                ++len;
            }
            cyc.push_back(len);
        }
        std::sort(cyc.rbegin(), cyc.rend());
        hist[Partition(std::move(cyc))] += 1;
    } while (std::next_permutation(free_dst.begin(), free_dst.end()));
    return memo.emplace(tau.key(), std::move(hist)).first->second;
}

} // namespace detail

/// vartheta(tau, lambda) = (-1)^{l-r} sum over mu |- r with
/// shaved(lambda) <= mu <= lambda of sum over sigma containing alpha of
/// chi^mu(sigma).  Zero unless |shaved(lambda)| <= r <= |lambda|.
inline Int vartheta(const ChainType& tau, const Partition& lambda) {
    long l = lambda.size();
    long r = tau.length();
    if (r > l || r < lambda.shaved().size())
        return 0;
    static std::map<std::pair<std::string, std::vector<long>>, Int> memo;
    static std::mutex mtx;
    auto key = std::make_pair(tau.key(), lambda.parts());
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    std::vector<Partition> mus;
    for (const Partition& mu : all_partitions(r))
        if (young_contains(lambda, mu) && young_contains(mu, lambda.shaved()))
            mus.push_back(mu);
    Int total = 0;
    if (!mus.empty()) {
        const auto& hist = detail::containing_cycle_types(tau);
        for (const Partition& mu : mus)
            for (const auto& [ct, cnt] : hist)
                total += cnt * mn_character(mu, ct);
        if ((l - r) % 2 != 0)
            total = -total;
    }
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), total);
    return total;
}

// ---------------------------------------------------------------------------
// Definitional brute-force counters: ground truth for the generating-function
// pipeline.  Enumeration is organized around relative orders encoded as the
// weakly increasing map c : [r] -> {0..n}, c(i) = number of second-sequence
// elements placed before the i-th first-sequence element.

namespace detail {

inline void enum_monotone(long r, long n, std::vector<long>& cur,
                          std::vector<std::vector<long>>& out) {
    if (static_cast<long>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    long lo = cur.empty() ? 0 : cur.back();
    for (long v = lo; v <= n; ++v) {
        cur.push_back(v);
        enum_monotone(r, n, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long>> monotone_maps(long r, long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    enum_monotone(r, n, cur, out);
    return out;
}

// Count gamma in A[n,k] all of whose pairs (l, m) satisfy ok(l, m), for
// every k at once.  gamma is a pair of increasing sequences l_1<...<l_k,
// m_1<...<m_k with pairs (l_t, m_t).  Counts stay far below 2^63 at the
// supported sizes.
inline void count_gammas(long n, const std::vector<std::vector<bool>>& ok,
                         std::vector<long long>& result) {
    size_t N = static_cast<size_t>(n);
    // ways[t][a][b]: choices of first t pairs with l_t <= a, m_t <= b
    static thread_local std::vector<std::vector<std::vector<long long>>> ways;
    ways.assign(N + 1, std::vector<std::vector<long long>>(
                           N + 1, std::vector<long long>(N + 1, 0)));
    for (size_t a = 0; a <= N; ++a)
        for (size_t b = 0; b <= N; ++b)
            ways[0][a][b] = 1;
    for (size_t t = 1; t <= N; ++t)
        for (size_t a = 1; a <= N; ++a)
            for (size_t b = 1; b <= N; ++b) {
                long long v =
                    ways[t][a - 1][b] + ways[t][a][b - 1] - ways[t][a - 1][b - 1];
                if (ok[a][b])
                    v += ways[t - 1][a - 1][b - 1];
                ways[t][a][b] = v;
            }
    result.assign(N + 1, 0);
    result[0] = 1;
    for (size_t t = 1; t <= N; ++t)
        result[t] = ways[t][N][N];
}

using BruteTable = std::map<ChainType, std::vector<Int>>;

inline const BruteTable& brute_h_table(long r, long n) {
    static std::map<std::pair<long, long>, BruteTable> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(r, n);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    BruteTable table;
    for (const ChainType& t : enum_chain_types(r))
        table.emplace(t, std::vector<Int>(static_cast<size_t>(n) + 1));
    std::vector<Arrangement> alphas = all_arrangements(r);
    std::vector<std::vector<Int>*> mrows;
    for (const auto& a : alphas)
        mrows.push_back(&table.at(a.typ()));
    std::vector<std::vector<long>> cs = monotone_maps(r, n);
    std::vector<std::vector<bool>> ok(static_cast<size_t>(n) + 1,
                                      std::vector<bool>(static_cast<size_t>(n) + 1));
    std::vector<long long> counts;

    // single relative order c; condition per alpha-pair (i,j) and
    // gamma-pair (l,m): l > c(i)  iff  m > c(j)
    for (const auto& c : cs)
        for (size_t ai = 0; ai < alphas.size(); ++ai) {
            const auto& pairs = alphas[ai].pairs;
            for (long a = 1; a <= n; ++a)
                for (long b = 1; b <= n; ++b) {
                    bool good = true;
                    for (auto [i, j] : pairs)
                        if ((a > c[static_cast<size_t>(i - 1)]) !=
                            (b > c[static_cast<size_t>(j - 1)])) {
                            good = false;
                            break;
                        }
                    ok[static_cast<size_t>(a)][static_cast<size_t>(b)] = good;
                }
            count_gammas(n, ok, counts);
            auto& row = *mrows[ai];
            for (long k = 0; k <= n; ++k)
                row[static_cast<size_t>(k)] += static_cast<long>(counts[static_cast<size_t>(k)]);
        }
    return memo.emplace(std::move(key), std::move(table)).first->second;
}

inline const BruteTable& brute_kappa_table(long r, long n) {
    static std::map<std::pair<long, long>, BruteTable> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(r, n);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;

    BruteTable table;
    for (const ChainType& t : enum_chain_types(r))
        table.emplace(t, std::vector<Int>(static_cast<size_t>(n) + 1));
    std::vector<Arrangement> alphas = all_arrangements(r);
    std::vector<std::vector<Int>*> mrows;
    for (const auto& a : alphas)
        mrows.push_back(&table.at(a.typ()));
    std::vector<std::vector<long>> cs = monotone_maps(r, n);
    std::vector<std::vector<bool>> ok(static_cast<size_t>(n) + 1,
                                      std::vector<bool>(static_cast<size_t>(n) + 1));
    std::vector<long long> counts;
    std::vector<char> compat(alphas.size());

    // a pair (c_S, c_T); conditions c_S(i) = c_T(j) per alpha-pair, and per
    // gamma-pair (l,m) and every i in [r]: l > c_S(i) iff m > c_T(i)
    for (const auto& cS : cs)
        for (const auto& cT : cs) {
            bool any = false;
            for (size_t ai = 0; ai < alphas.size(); ++ai) {
                bool good = true;
                for (auto [i, j] : alphas[ai].pairs)
                    if (cS[static_cast<size_t>(i - 1)] != cT[static_cast<size_t>(j - 1)]) {
                        good = false;
                        break;
                    }
                compat[ai] = good;
                any = any || good;
            }
            if (!any)
                continue;
            for (long a = 1; a <= n; ++a)
                for (long b = 1; b <= n; ++b) {
                    bool good = true;
                    for (long i = 0; i < r; ++i)
                        if ((a > cS[static_cast<size_t>(i)]) !=
                            (b > cT[static_cast<size_t>(i)])) {
                            good = false;
                            break;
                        }
                    ok[static_cast<size_t>(a)][static_cast<size_t>(b)] = good;
                }
            count_gammas(n, ok, counts);
            for (size_t ai = 0; ai < alphas.size(); ++ai) {
                if (!compat[ai])
                    continue;
                auto& row = *mrows[ai];
                for (long k = 0; k <= n; ++k)
                    row[static_cast<size_t>(k)] += static_cast<long>(counts[static_cast<size_t>(k)]);
            }
        }
    return memo.emplace(std::move(key), std::move(table)).first->second;
}

} // namespace detail

/// Definitional h^tau(n, k); exponential enumeration, capped.
inline Int brute_h(const ChainType& tau, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    long r = tau.length();
    if (r > 6 || n > 6)
        throw error("brute_h: size cap exceeded");
    return detail::brute_h_table(r, n).at(tau).at(static_cast<size_t>(k));
}

/// Definitional kappa^tau(n, k); exponential enumeration, capped.
inline Int brute_kappa(const ChainType& tau, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    long r = tau.length();
    if (r > 6 || n > 6)
        throw error("brute_kappa: size cap exceeded");
    return detail::brute_kappa_table(r, n).at(tau).at(static_cast<size_t>(k));
}

} // namespace charpoly

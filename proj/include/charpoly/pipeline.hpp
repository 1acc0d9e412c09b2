#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "biseries.hpp"
#include "chains.hpp"
#include "characters.hpp"
#include "interpolate.hpp"
#include "multipoly.hpp"
#include "partitions.hpp"
#include "statistic_basis.hpp"
#include "unipoly.hpp"

namespace charpoly {

inline const std::vector<std::string>& nk_vars() {
    static const std::vector<std::string> v{"n", "k"};
    return v;
}

/// a(n,k) split into the two factorial families of the closed form.
struct SplitA {
    Rat a0, a1;
    Rat total() const { return a0 + a1; }
};

inline int default_trunc(const Partition& lambda) {
    return static_cast<int>(4 * lambda.size() + 4);
}

/// Exact a^lambda(n, k) = (1/n!) sum X^lambda * N_k over S_n, assembled
/// from the chain-type decomposition; also returns the even/odd split.
/// Defined via X^lambda, so valid for every n >= 0.
inline SplitA a_exact(const Partition& lambda, long n, long k, int trunc = -1) {
    if (n < 0 || k < 0 || k > n)
        return {0, 0};
    long l = lambda.size();
    if (trunc < 0)
        trunc = static_cast<int>(std::max<long>(default_trunc(lambda), n));
    if (n > trunc)
        throw error("a_exact: n exceeds the truncation order");
    if (trunc > 80)
        throw error("a_exact: truncation order too large; use the closed form");
    SplitA out{0, 0};
    for (long r = 0; r <= l; ++r)
        for (const ChainType& tau : enum_chain_types(r)) {
            Int theta = vartheta(tau, lambda);
            if (theta == 0)
                continue;
            long d = tau.degree();
            long m = tau.m(1);
            if (n - k < r - d)
                continue;
            // m <= r - d <= n - k keeps both factorials in range; the split
            // coefficients are read at k - d < 0 too, where the two parts
            // cancel in the total but not individually.
            Rat weight = Rat(theta, factorial(m)) *
                         Rat(factorial(n - k - r + d), factorial(n - m));
            ChainType red = tau.reduced();
            out.a0 += weight * h_coeff(red, 0, n - r, k - d, trunc);
            out.a1 += weight * h_coeff(red, 1, n - r, k - d, trunc);
        }
    return out;
}

/// The two integer polynomials of the main closed form together with the
/// verification data gathered while constructing them.
struct AhatPair {
    Partition lambda;
    long l0 = 0, l1 = 0;
    MultiPoly a0{nk_vars()}, a1{nk_vars()};
    long grid_points = 0, extra_points = 0;
    Rat lead0, lead1;  // the verified coefficients of (nk)^{l+l_i-1}
};

/// Fixed cofactor multiplying a^hat_i in the closed form, evaluated at
/// integers k >= 1, n >= k + l - 1.
inline Rat ahat_cofactor(const Partition& lambda, int i, long n, long k) {
    long l = lambda.size();
    long l0 = l / 2, l1 = (l - 1) / 2;
    Rat pre = Rat(factorial(n - l + 1), factorial(k - 1) * factorial(n));
    if (i == 0) {
        Rat t = pow2(-l0) * Rat(factorial(n - l));
        t /= double_factorial(2 * l0 - 1) * Rat(factorial(k)) *
             Rat(factorial(n - k + l0));
        return pre * t;
    }
    Rat t = pow2(-l1) * double_factorial(2 * (n - l) + 1);
    t /= Rat(factorial(l1)) * double_factorial(2 * k - 1) *
         double_factorial(2 * (n - k + l1) + 1);
    return pre * t;
}

/// Expected coefficient of (nk)^{l+l_i-1}: chi^lambda(id_l) when
/// l = i (mod 2), else -sum of chi^mu(id_{l-1}) over mu contained in
/// lambda.  (These are the leading coefficients after the 2^{l-1} scaling
/// on the odd part.)
inline Rat ahat_expected_lead(const Partition& lambda, int i) {
    long l = lambda.size();
    Int c;
    if ((l - i) % 2 == 0) {
        c = character_dimension(lambda);
    } else {
        c = 0;
        for (const Partition& mu : all_partitions(l - 1))
            if (young_contains(lambda, mu))
                c += character_dimension(mu);
        c = -c;
    }
    return (i == 0) ? Rat(c) : Rat(c) * pow2(l - 1);
}

namespace detail {

inline AhatPair ahat_compute(const Partition& lambda) {
    long l = lambda.size();
    if (l < 1)
        throw error("ahat_pair: |lambda| >= 1 required");
    AhatPair out;
    out.lambda = lambda;
    out.l0 = l / 2;
    out.l1 = (l - 1) / 2;
    int trunc = default_trunc(lambda);

    // both components read the same assembly values
    std::map<std::pair<long, long>, SplitA> assembled;
    auto split_at = [&](long n, long k) -> const SplitA& {
        auto [it, inserted] = assembled.try_emplace({n, k});
        if (inserted)
            it->second = a_exact(lambda, n, k, trunc);
        return it->second;
    };

    for (int i = 0; i < 2; ++i) {
        long D = l + (i == 0 ? out.l0 : out.l1);  // degree bound + 1
        std::map<std::vector<long>, Rat> values;
        for (long k = 1; k <= D; ++k)
            for (long j = 0; j < D; ++j) {
                long n = k + l - 1 + j;
                const SplitA& v = split_at(n, k);
                Rat ai = (i == 0) ? v.a0 : v.a1;
                values[{n, k}] = ai / ahat_cofactor(lambda, i, n, k);
            }
        MultiPoly ahat = interp_grid(values, nk_vars(), {static_cast<int>(D - 1),
                                                         static_cast<int>(D - 1)});
        out.grid_points += static_cast<long>(values.size());

        if (!ahat.integer_coefficients())
            throw error("ahat_pair: non-integer coefficients for " + lambda.str());
        if (ahat.degree("n") > D - 1 || ahat.degree("k") > D - 1)
            throw error("ahat_pair: degree bound violated for " + lambda.str());

        // over-determined verification on fresh points
        long extras = 0;
        for (long k = 1; k <= D + 1 && extras < 2 * D + 2; ++k)
            for (long j = D; j <= D + 1 && extras < 2 * D + 2; ++j) {
                long n = k + l - 1 + j;
                const SplitA& v = split_at(n, k);
                Rat ai = (i == 0) ? v.a0 : v.a1;
                Rat predicted = ahat.eval({Rat(n), Rat(k)}) *
                                ahat_cofactor(lambda, i, n, k);
                if (predicted != ai)
                    throw error("ahat_pair: extra-point mismatch for " + lambda.str() +
                                " at n=" + std::to_string(n) + " k=" + std::to_string(k));
                ++extras;
            }
        out.extra_points += extras;

        Rat lead = ahat.coeff({static_cast<int>(D - 1), static_cast<int>(D - 1)});
        if (lead != ahat_expected_lead(lambda, i))
            throw error("ahat_pair: leading coefficient mismatch for " + lambda.str());
        if (i == 0) {
            out.a0 = std::move(ahat);
            out.lead0 = lead;
        } else {
            out.a1 = std::move(ahat);
            out.lead1 = lead;
        }
    }
    return out;
}

} // namespace detail

/// Construct (and cache) the closed-form pair for lambda by exact
/// interpolation against the factored formula, with integrality, degree,
/// extra-point and leading-coefficient verification.
inline const AhatPair& ahat_pair(const Partition& lambda) {
    static std::map<std::vector<long>, AhatPair> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(lambda.parts());
        if (it != memo.end())
            return it->second;
    }
    AhatPair pair = detail::ahat_compute(lambda);
    std::lock_guard<std::mutex> lock(mtx);
    return memo.emplace(lambda.parts(), std::move(pair)).first->second;
}

/// a^lambda(n, k) at arbitrary magnitudes: closed form when it applies,
/// exact assembly otherwise.
inline Rat a_eval(const Partition& lambda, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (lambda.empty())
        return Rat(binomial(n, k), factorial(k));
    long l = lambda.size();
    if (k >= 1 && n >= k + l - 1) {
        const AhatPair& p = ahat_pair(lambda);
        return p.a0.eval({Rat(n), Rat(k)}) * ahat_cofactor(lambda, 0, n, k) +
               p.a1.eval({Rat(n), Rat(k)}) * ahat_cofactor(lambda, 1, n, k);
    }
    return a_exact(lambda, n, k).total();
}

/// The split values at arbitrary magnitudes (same validity rules).
inline SplitA a_eval_split(const Partition& lambda, long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return {0, 0};
    if (lambda.empty())
        return {Rat(binomial(n, k), factorial(k)), 0};
    long l = lambda.size();
    if (k >= 1 && n >= k + l - 1) {
        const AhatPair& p = ahat_pair(lambda);
        return {p.a0.eval({Rat(n), Rat(k)}) * ahat_cofactor(lambda, 0, n, k),
                p.a1.eval({Rat(n), Rat(k)}) * ahat_cofactor(lambda, 1, n, k)};
    }
    return a_exact(lambda, n, k);
}

struct BjPoly {
    Partition lambda;
    long j = 0;
    UniPoly poly;  // in k, degree |lambda| + 2j
};

/// B_j: (j+k)! a(j+k, k) as a polynomial in k, with degree and leading
/// coefficient verified against chi^lambda(id).
inline BjPoly bj_poly(const Partition& lambda, long j) {
    long l = lambda.size();
    if (l < 1 || j < 0)
        throw error("bj_poly: need |lambda| >= 1 and j >= 0");
    long k_start = std::max(l - j, 1L);
    long points = l + 2 * j + 1;
    std::vector<Rat> xs, ys;
    for (long k = k_start; k < k_start + points; ++k) {
        xs.push_back(Rat(k));
        ys.push_back(a_eval(lambda, j + k, k) * Rat(factorial(j + k)));
    }
    UniPoly B = newton_interpolate(xs, ys);
    if (B.degree() != l + 2 * j)
        throw error("bj_poly: degree != l + 2j for " + lambda.str());
    Rat expected_lead = pow2(j) * Rat(character_dimension(lambda));
    expected_lead /= double_factorial(l - 1) * double_factorial(l + 2 * j);
    if (B.leading() != expected_lead)
        throw error("bj_poly: leading coefficient mismatch for " + lambda.str());
    for (long k = k_start + points; k < k_start + points + 2; ++k)
        if (B.eval(Rat(k)) != a_eval(lambda, j + k, k) * Rat(factorial(j + k)))
            throw error("bj_poly: extra-point mismatch for " + lambda.str());
    return {lambda, j, std::move(B)};
}

struct AkPoly {
    Partition lambda;
    long k = 0;
    UniPoly poly;  // in n, degree <= k - |lambda|; equals a(n,k) for n >= k+l
};

/// A_k: the polynomial in n agreeing with a^lambda(n, k) for n >= k + l.
inline AkPoly ak_poly(const Partition& lambda, long k) {
    long l = lambda.size();
    if (k < l)
        throw error("ak_poly: k >= |lambda| required");
    std::vector<Rat> xs, ys;
    for (long n = k + l; n <= 2 * k; ++n) {
        xs.push_back(Rat(n));
        ys.push_back(a_eval(lambda, n, k));
    }
    UniPoly A = newton_interpolate(xs, ys);
    for (long n = 2 * k + 1; n <= 2 * k + 3; ++n)
        if (A.eval(Rat(n)) != a_eval(lambda, n, k))
            throw error("ak_poly: extra-point mismatch for " + lambda.str() +
                        " at k=" + std::to_string(k));
    return {lambda, k, std::move(A)};
}

/// F(n, k) = (1/n!) sum_{pi in S_n} f(pi) N_k(pi) for a polynomial
/// statistic f in the cycle-count variables m_j.
inline Rat expected_value(const MultiPoly& f, long n, long k) {
    long r = graded_degree(f);
    if (r > 10)
        throw error("expected_value: graded degree > 10");
    Rat total = 0;
    for (const auto& [lam, c] : expand_in_x_basis(f, r))
        total += c * a_eval(lam, n, k);
    return total;
}

} // namespace charpoly

#pragma once

#include <vector>

#include "rational.hpp"

namespace charpoly {

inline Int factorial(long n) {
    if (n < 0)
        throw error("factorial: negative argument " + std::to_string(n));
    Int r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// n!! with 0!! = (-1)!! = 1, extended to odd n < -1 by the recursion
/// n!! = n * (n-2)!!, so the values become rational: (-3)!! = -1,
/// (-5)!! = 1/3, (-7)!! = -1/15, ...  Even n < 0 is rejected.
inline Rat double_factorial(long n) {
    if (n >= -1) {
        Int r = 1;
        for (long i = n; i >= 2; i -= 2)
            r *= i;
        return Rat(r);
    }
    if (n % 2 == 0)
        throw error("double_factorial: undefined for even " + std::to_string(n));
    // (n)!! = (n+2)!! / (n+2), iterated up to (-1)!! = 1.
    Int denom = 1;
    for (long t = n + 2; t <= -1; t += 2)
        denom *= t;
    return Rat(Int(1), denom);
}

/// Falling product with step s: prod_{i=0}^{m-1} (a - s*i).
/// The rising variant is obtained at call sites via a sign fix on -a.
inline Rat falling_product(const Rat& a, long m, int step = 1) {
    if (m < 0)
        throw error("falling_product: negative length");
    if (step != 1 && step != 2)
        throw error("falling_product: step must be 1 or 2");
    Rat r = 1, x = a;
    for (long i = 0; i < m; ++i) {
        r *= x;
        x -= Rat(step);
    }
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Generalized binomial: binom(a, k) = a(a-1)...(a-k+1) / k!, valid for
/// rational (e.g. half-integer) a.
inline Rat binomial_general(const Rat& a, long k) {
    if (k < 0)
        return 0;
    return falling_product(a, k, 1) / Rat(factorial(k));
}

/// prod s_i! / prod t_j!, with the convention that the ratio is zero when
/// every s_i >= 0 and some t_j < 0.  Negative s_i is a caller bug.
inline Rat guarded_factorial_ratio(const std::vector<long>& nums,
                                   const std::vector<long>& dens) {
    for (long s : nums)
        if (s < 0)
            throw error("guarded_factorial_ratio: negative numerator argument");
    for (long t : dens)
        if (t < 0)
            return 0;
    Int num = 1, den = 1;
    for (long s : nums)
        num *= factorial(s);
    for (long t : dens)
        den *= factorial(t);
    return Rat(num, den);
}

} // namespace charpoly

#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "factorials.hpp"
#include "multipoly.hpp"
#include "ptau.hpp"
#include "rational.hpp"

namespace charpoly {

/// Truncated bivariate series: a power series in x, Laurent in y with
/// exponents bounded below by y_offset.  Coefficients are stored for
/// j >= 0, k >= y_offset, j + k <= max_total (the window); arithmetic
/// tracks the window on which results stay exact.
class BiSeries {
  public:
    BiSeries(int max_total, int y_offset)
        : max_(max_total), yoff_(y_offset),
          c_(size_of(max_total, y_offset)) {
        if (trunc_order() < 0)
            throw error("BiSeries: empty window");
    }

    static BiSeries zero(int max_total, int y_offset = 0) {
        return BiSeries(max_total, y_offset);
    }
    static BiSeries constant(const Rat& v, int max_total) {
        BiSeries s(max_total, 0);
        s.set(0, 0, v);
        return s;
    }
    static BiSeries monomial(const Rat& v, int j, int k, int max_total) {
        BiSeries s(max_total, std::min(k, 0));
        s.set(j, k, v);
        return s;
    }

    int max_total() const { return max_; }           // cap on j + k
    int y_offset() const { return yoff_; }
    int trunc_order() const { return max_ - yoff_; } // cap on j + (k - yoff)

    bool in_window(long j, long k) const {
        return j >= 0 && k >= yoff_ && j + k <= max_;
    }

    Rat coeff_or_zero(long j, long k) const {
        if (!in_window(j, k))
            return 0;
        return c_[index(j, k)];
    }

    Rat coeff(long j, long k) const {
        if (!in_window(j, k))
            throw error("BiSeries: coefficient (" + std::to_string(j) + "," +
                        std::to_string(k) + ") beyond truncation window");
        return c_[index(j, k)];
    }

    void set(long j, long k, const Rat& v) {
        if (!in_window(j, k))
            throw error("BiSeries: set outside window");
        c_[index(j, k)] = v;
    }

    /// multiply by y^delta
    BiSeries shift_y(int delta) const {
        BiSeries r(max_ + delta, yoff_ + delta);
        r.c_ = c_;
        return r;
    }

    BiSeries operator-() const {
        BiSeries r = *this;
        for (auto& v : r.c_)
            v = -v;
        return r;
    }

    BiSeries operator*(const Rat& s) const {
        BiSeries r = *this;
        for (auto& v : r.c_)
            v *= s;
        return r;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        return combined(a, b, false);
    }
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
        return combined(a, b, true);
    }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        int yoff = a.yoff_ + b.yoff_;
        int max_total = std::min(a.max_ + b.yoff_, b.max_ + a.yoff_);
        BiSeries r(max_total, yoff);
        for (long j1 = 0; j1 <= a.max_ - a.yoff_; ++j1)
            for (long k1 = a.yoff_; j1 + k1 <= a.max_; ++k1) {
                const Rat& v1 = a.c_[a.index(j1, k1)];
                if (v1.is_zero())
                    continue;
                for (long j2 = 0; j2 <= b.max_ - b.yoff_; ++j2) {
                    if (j1 + j2 > max_total - yoff)
                        break;
                    for (long k2 = b.yoff_; j2 + k2 <= b.max_; ++k2) {
                        if (j1 + j2 + k1 + k2 > max_total)
                            break;
                        const Rat& v2 = b.c_[b.index(j2, k2)];
                        if (v2.is_zero())
                            continue;
                        r.c_[r.index(j1 + j2, k1 + k2)] += v1 * v2;
                    }
                }
            }
        return r;
    }

    /// Multiplicative inverse; needs y_offset 0 and nonzero constant term.
    BiSeries inverse() const {
        if (yoff_ != 0)
            throw error("BiSeries: inverse of a shifted series");
        Rat c0 = coeff_or_zero(0, 0);
        if (c0.is_zero())
            throw error("BiSeries: inverse of a non-unit");
        Rat inv0 = Rat(1) / c0;
        BiSeries g(max_, 0);
        g.set(0, 0, inv0);
        for (int total = 1; total <= max_; ++total)
            for (long j = 0; j <= total; ++j) {
                long k = total - j;
                Rat acc = 0;
                for (long p = 0; p <= j; ++p)
                    for (long q = 0; q <= k; ++q) {
                        if (p == 0 && q == 0)
                            continue;
                        const Rat& fv = c_[index(p, q)];
                        if (fv.is_zero())
                            continue;
                        acc += fv * g.c_[g.index(j - p, k - q)];
                    }
                if (!acc.is_zero())
                    g.set(j, k, -inv0 * acc);
            }
        return g;
    }

    BiSeries pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        BiSeries result = constant(1, max_);
        BiSeries base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                result = result * base;
            if (e > 1)
                base = base * base;
        }
        return result;
    }

    /// Substitute x -> X, y -> Y (both with zero constant term, y_offset 0);
    /// requires this->y_offset == 0.
    BiSeries substituted(const BiSeries& X, const BiSeries& Y) const {
        if (yoff_ != 0 || X.y_offset() != 0 || Y.y_offset() != 0)
            throw error("BiSeries: substitution needs unshifted operands");
        if (!X.coeff_or_zero(0, 0).is_zero() || !Y.coeff_or_zero(0, 0).is_zero())
            throw error("BiSeries: substitution images must have zero constant term");
        int M = std::min(X.max_total(), Y.max_total());
        std::vector<BiSeries> xpow{BiSeries::constant(1, M)};
        std::vector<BiSeries> ypow{BiSeries::constant(1, M)};
        BiSeries r(M, 0);
        for (long j = 0; j <= max_; ++j)
            for (long k = 0; j + k <= max_; ++k) {
                const Rat& v = c_[index(j, k)];
                if (v.is_zero())
                    continue;
                while (static_cast<long>(xpow.size()) <= j)
                    xpow.push_back(xpow.back() * X);
                while (static_cast<long>(ypow.size()) <= k)
                    ypow.push_back(ypow.back() * Y);
                BiSeries term = xpow[static_cast<size_t>(j)] * ypow[static_cast<size_t>(k)] * v;
                // term windows can only be >= M here
                for (long a = 0; a <= M; ++a)
                    for (long b = 0; a + b <= M; ++b)
                        r.c_[r.index(a, b)] += term.coeff_or_zero(a, b);
            }
        return r;
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        if (a.max_ != b.max_ || a.yoff_ != b.yoff_)
            return false;
        return a.c_ == b.c_;
    }

    /// Coefficientwise agreement on the intersection of the two windows.
    friend bool agrees(const BiSeries& a, const BiSeries& b) {
        int yoff = std::max(a.yoff_, b.yoff_);
        int max_total = std::min(a.max_, b.max_);
        for (long j = 0; j <= max_total - yoff; ++j)
            for (long k = yoff; j + k <= max_total; ++k)
                if (a.coeff_or_zero(j, k) != b.coeff_or_zero(j, k))
                    return false;
        return true;
    }

  private:
    static size_t size_of(int max_total, int y_offset) {
        long n = max_total - y_offset + 1;
        if (n < 0)
            n = 0;
        return static_cast<size_t>(n) * static_cast<size_t>(n);
    }
    size_t index(long j, long k) const {
        long side = max_ - yoff_ + 1;
        return static_cast<size_t>(j) * static_cast<size_t>(side) +
               static_cast<size_t>(k - yoff_);
    }

    static BiSeries combined(const BiSeries& a, const BiSeries& b, bool subtract) {
        int yoff = std::max(a.yoff_, b.yoff_);
        int max_total = std::min(a.max_, b.max_);
        BiSeries r(max_total, yoff);
        for (long j = 0; j <= max_total - yoff; ++j)
            for (long k = yoff; j + k <= max_total; ++k) {
                Rat v = a.coeff_or_zero(j, k);
                Rat w = b.coeff_or_zero(j, k);
                r.c_[r.index(j, k)] = subtract ? v - w : v + w;
            }
        return r;
    }

    int max_;   // valid for j + k <= max_
    int yoff_;  // valid for k >= yoff_
    std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------

/// Q^{-1} = sum binom(j+k, j)^2 x^j y^k up to total order N.
inline BiSeries q_inverse(int N) {
    BiSeries s(N, 0);
    for (long j = 0; j <= N; ++j)
        for (long k = 0; j + k <= N; ++k) {
            Int b = binomial(j + k, j);
            s.set(j, k, Rat(b * b));
        }
    return s;
}

struct BaseElements {
    BiSeries Qinv, Q, u, v, v_over_y, eta, xi;
};

/// The algebraic generators: Q (with Q^2 = (1-x-y)^2 - 4xy), the units u
/// and v/y, and eta = y/Q^2, xi = x/Q^2.
inline const BaseElements& base_elements(int N) {
    static std::map<int, BaseElements> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(N);
    if (it != memo.end())
        return it->second;

    BiSeries qinv = q_inverse(N);
    BiSeries q = qinv.inverse();
    BiSeries one = BiSeries::constant(1, N);
    BiSeries x = BiSeries::monomial(1, 1, 0, N);
    BiSeries y = BiSeries::monomial(1, 0, 1, N);
    BiSeries u = ((one + x - y) * qinv + one) * Rat(Int(1), Int(2));
    BiSeries v = ((one - x + y) * qinv - one) * Rat(Int(1), Int(2));
    // v = y * (unit); dividing out y keeps everything in nonnegative powers
    BiSeries v_over_y(N, 0);
    for (long j = 0; j <= N; ++j)
        for (long k = 0; j + k <= N; ++k)
            v_over_y.set(j, k, v.coeff_or_zero(j, k + 1));
    BiSeries qinv2 = qinv * qinv;
    BiSeries eta = qinv2.shift_y(1);
    BiSeries xi = (x * qinv2);
    BaseElements be{std::move(qinv), std::move(q),   std::move(u),
                    std::move(v),    std::move(v_over_y), std::move(eta),
                    std::move(xi)};
    return memo.emplace(N, std::move(be)).first->second;
}

namespace detail {

// shared power-product caches; the same u^a v^b and Q^e series serve every
// chain type at a given truncation
inline const BiSeries& uv_power(int N, int sign, long a, long b) {
    static std::map<std::tuple<int, int, long, long>, BiSeries> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    std::function<const BiSeries&(long, long)> get = [&](long aa,
                                                         long bb) -> const BiSeries& {
        auto key = std::make_tuple(N, sign, aa, bb);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        const BaseElements& be = base_elements(N);
        BiSeries one = BiSeries::constant(1, N);
        BiSeries value = one;
        if (aa == 0 && bb == 0) {
            // one
        } else if (bb == 0) {
            BiSeries us = sign > 0 ? be.u : one - be.u;
            value = get(aa - 1, 0) * us;
        } else {
            BiSeries vs = sign > 0 ? be.v : -(one + be.v);
            value = get(aa, bb - 1) * vs;
        }
        return memo.emplace(std::move(key), std::move(value)).first->second;
    };
    return get(a, b);
}

inline const BiSeries& q_power(int N, long e) {
    static std::map<std::pair<int, long>, BiSeries> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    std::function<const BiSeries&(long)> get = [&](long ee) -> const BiSeries& {
        auto key = std::make_pair(N, ee);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        const BaseElements& be = base_elements(N);
        BiSeries value = BiSeries::constant(1, N);
        if (ee > 0)
            value = get(ee - 1) * be.Q;
        else if (ee < 0)
            value = get(ee + 1) * be.Qinv;
        return memo.emplace(std::move(key), std::move(value)).first->second;
    };
    return get(e);
}

} // namespace detail

/// Generating function H^tau for a reduced chain type, or its image under
/// the sign automorphism (sign = -1 sends Q^{-1} to -Q^{-1}, hence
/// u -> 1-u, v -> -1-v).  The returned window allows reading h(n, k) for
/// all n <= N.
inline BiSeries h_series(const ChainType& tau, int sign, int N) {
    if (!tau.is_reduced())
        throw error("h_series: chain type not reduced");
    long r = tau.length(), d = tau.degree(), nu = tau.rank;
    // window N + r >= N + (d - nu) keeps h(n, k) readable for n <= N while
    // letting every type of one length share the power caches
    int Nb = static_cast<int>(N + r);
    const MultiPoly& P = p_tau(tau);

    BiSeries acc(Nb, 0);
    for (const auto& [exps, c] : P.terms()) {
        long a = exps[0], b = exps[1];
        Rat coeff = (a % 2 == 0) ? c : -c;
        acc = acc + detail::uv_power(Nb, sign, r - d - a, r - nu - b) * coeff;
    }
    // eta^{nu-d} Q^{-1-d} = y^{nu-d} Q^{d-2nu-1}
    long qexp = d - 2 * nu - 1;
    BiSeries result = acc * detail::q_power(Nb, qexp);
    if (sign < 0 && (qexp % 2 != 0))
        result = -result;
    return result.shift_y(static_cast<int>(nu - d));
}

/// The split pair (H_0, H_1) with H_i = (H - (-1)^i phi(H)) / 2; cached.
inline const std::pair<BiSeries, BiSeries>& h_split(const ChainType& tau, int N) {
    static std::map<std::pair<std::string, int>, std::pair<BiSeries, BiSeries>> memo;
    static std::mutex mtx;
    auto key = std::make_pair(tau.key(), N);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    BiSeries plus = h_series(tau, +1, N);
    BiSeries minus = h_series(tau, -1, N);
    Rat half(Int(1), Int(2));
    std::pair<BiSeries, BiSeries> split{(plus - minus) * half, (plus + minus) * half};
    std::lock_guard<std::mutex> lock(mtx);
    return memo.emplace(std::move(key), std::move(split)).first->second;
}

/// h_i^tau(n, k) for an arbitrary chain type, via reduction:
/// h_i^tau(n, k) = binom(n + r, m_1(tau)) * h_i^{reduced tau}(n, k).
///
/// The split parts of a reduced type carry coefficients at negative k
/// (bounded below by the type's y-offset); they cancel in h_0 + h_1 but the
/// assembly of a^lambda needs them individually, so reduced types expose
/// them here.  Non-reduced types follow the h(n, k) = 0 convention off the
/// first quadrant.
inline Rat h_coeff(const ChainType& tau, int i, long n, long k, int N) {
    if (i != 0 && i != 1)
        throw error("h_coeff: split index must be 0 or 1");
    if (n - k < 0)
        return 0;
    bool reduced = tau.is_reduced();
    if (!reduced && (k < 0 || n < 0))
        return 0;
    ChainType red = reduced ? tau : tau.reduced();
    int yoff = static_cast<int>(red.rank - red.degree());
    if (k < yoff)
        return 0;
    const auto& split = h_split(red, N);
    const BiSeries& Hi = (i == 0) ? split.first : split.second;
    Rat base = Hi.coeff(n - k, k);  // throws when beyond truncation
    long m = tau.m(1);
    if (m > 0)
        base *= Rat(binomial(n + tau.length(), m));
    return base;
}

/// h^tau(n, k) = h_0 + h_1.
inline Rat h_value(const ChainType& tau, long n, long k, int N) {
    return h_coeff(tau, 0, n, k, N) + h_coeff(tau, 1, n, k, N);
}

/// Closed form for the coefficient of x^j y^k in E_{eps,delta} Q^{-1-r},
/// where E_{0,0} = 1 and otherwise E = (1 + (-1)^delta x + (-1)^eps y)/2.
inline Rat q_closed(int eps, int delta, long r, long j, long k) {
    if ((eps != 0 && eps != 1) || (delta != 0 && delta != 1))
        throw error("q_closed: eps, delta must be 0 or 1");
    long gamma = eps + delta - eps * delta;
    if (j < 0 || k < 0 || j + k < -r + gamma)
        throw error("q_closed: outside the claimed range");
    Rat lead = guarded_factorial_ratio({j + k + r - gamma}, {j, k});
    if (r % 2 == 0) {
        long r0 = r / 2;
        if (j - eps < -r0 || k - delta < -r0)
            return 0;
        Rat val = pow2(-r0) * Rat(factorial(j + k + r0 - eps * delta));
        val /= double_factorial(2 * r0 - 1);
        val /= Rat(factorial(j + r0 - eps));
        val /= Rat(factorial(k + r0 - delta));
        return lead * val;
    }
    long r1 = (r - 1) / 2;  // exact: r odd
    if (r1 < 0)
        return 0;
    Rat val = pow2(-r1 - gamma) * double_factorial(2 * (j + k + r1 - eps * delta) + 1);
    val /= Rat(factorial(r1));
    val /= double_factorial(2 * (j + r1 - eps) + 1);
    val /= double_factorial(2 * (k + r1 - delta) + 1);
    return lead * val;
}

} // namespace charpoly

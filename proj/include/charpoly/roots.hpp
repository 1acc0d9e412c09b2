#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace charpoly {

/// Interval endpoint for root counting: finite value or +-infinity.
struct RootBound {
    enum Kind { NEG_INF, FINITE, POS_INF } kind = FINITE;
    Rat value;

    static RootBound neg_inf() { return {NEG_INF, 0}; }
    static RootBound pos_inf() { return {POS_INF, 0}; }
    static RootBound at(const Rat& v) { return {FINITE, v}; }
};

namespace detail {

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p.primitive());
    UniPoly d = p.derivative();
    if (!d.is_zero())
        chain.push_back(d.primitive());
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero())
            break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

inline int sign_at(const UniPoly& p, const RootBound& x) {
    if (p.is_zero())
        return 0;
    switch (x.kind) {
    case RootBound::FINITE:
        return p.eval(x.value).sign();
    case RootBound::POS_INF:
        return p.leading().sign();
    case RootBound::NEG_INF:
    default:
        return (p.degree() % 2 == 0) ? p.leading().sign() : -p.leading().sign();
    }
}

inline int sign_variations(const std::vector<UniPoly>& chain, const RootBound& x) {
    int vars = 0, last = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++vars;
        last = s;
    }
    return vars;
}

} // namespace detail

/// Number of distinct real roots of p in (lo, hi], by Sturm's theorem with
/// exact rational arithmetic.
inline long sturm_count(const UniPoly& p, const RootBound& lo, const RootBound& hi) {
    if (p.is_zero())
        throw error("sturm_count: zero polynomial");
    if (p.degree() == 0)
        return 0;
    UniPoly sqf = p.squarefree_part();
    std::vector<UniPoly> chain = detail::sturm_chain(sqf);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

inline long sturm_count_real_line(const UniPoly& p) {
    return sturm_count(p, RootBound::neg_inf(), RootBound::pos_inf());
}

/// Real roots counted with multiplicity: distinct roots of the square-free
/// part plus, recursively, the roots of gcd(p, p').
inline long real_roots_with_multiplicity(const UniPoly& p) {
    if (p.is_zero())
        throw error("real_roots_with_multiplicity: zero polynomial");
    if (p.degree() == 0)
        return 0;
    UniPoly g = UniPoly::gcd(p, p.derivative());
    long base = sturm_count_real_line(p.exact_div(g.degree() >= 1 ? g : UniPoly::constant(1)));
    if (g.degree() >= 1)
        return base + real_roots_with_multiplicity(g);
    return base;
}

/// Integer upper bound on the real roots (Cauchy bound).
inline Int root_upper_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0)
        return 0;
    Rat lead = p.leading().abs();
    Rat best = 0;
    for (long i = 0; i < p.degree(); ++i) {
        Rat q = p.coeff(static_cast<size_t>(i)).abs() / lead;
        if (q > best)
            best = q;
    }
    Rat bound = best + Rat(1);
    Int num = bound.num(), den = bound.den();
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Integer U with no real roots above U, located by doubling plus Sturm
/// counts; far tighter than the Cauchy bound when the roots are small.
inline Int sturm_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0)
        return 0;
    Int cauchy = root_upper_bound(p);
    Int u = 1;
    while (u < cauchy && sturm_count(p, RootBound::at(Rat(u)), RootBound::pos_inf()) > 0)
        u *= 2;
    return u < cauchy ? u : cauchy;
}

/// One row of the real-rootedness scan.
struct ScanRow {
    Partition lambda;
    long k = 0;
    long degree = 0;
    long real_roots = 0;       // with multiplicity
    long nonreal_pairs = 0;
    bool squarefree = true;
    bool zero_poly = false;
    std::optional<long> improved_bound;  // when a1 keeps one sign on the test range
};

/// For each lambda |- size and |lambda| <= k <= k_max: the number of
/// conjugate pairs of non-real roots of the polynomial in n agreeing with
/// a(n, k).  Asserts the pair count never exceeds |lambda| - 1.
inline std::vector<ScanRow> scan_nonreal(long size, long k_max) {
    if (size < 1)
        throw error("scan_nonreal: size >= 1 required");
    std::vector<ScanRow> rows;
    for (const Partition& lam : all_partitions(size)) {
        long l = lam.size();
        long l0 = l / 2;
        const AhatPair& pair = ahat_pair(lam);
        for (long k = l; k <= k_max; ++k) {
            ScanRow row;
            row.lambda = lam;
            row.k = k;
            AkPoly A = ak_poly(lam, k);
            if (A.poly.is_zero()) {
                row.zero_poly = true;
                rows.push_back(std::move(row));
                continue;
            }
            row.degree = A.poly.degree();
            row.real_roots = real_roots_with_multiplicity(A.poly);
            row.squarefree = UniPoly::gcd(A.poly, A.poly.derivative()).degree() <= 0;
            row.nonreal_pairs = (row.degree - row.real_roots) / 2;
            if (row.nonreal_pairs > l - 1)
                throw error("scan_nonreal: pair bound exceeded at lambda=" + lam.str() +
                            " k=" + std::to_string(k));
            // sharper bound applies when a1(., k) keeps one sign on [l, k-l0-1]
            bool constant_sign = true;
            int seen = 0;
            for (long n = l; n <= k - l0 - 1; ++n) {
                int s = pair.a1.eval({Rat(n), Rat(k)}).sign();
                if (s == 0)
                    continue;
                if (seen != 0 && s != seen) {
                    constant_sign = false;
                    break;
                }
                seen = s;
            }
            if (constant_sign && k - l0 - 1 >= l)
                row.improved_bound = (l + 2) / 4;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace charpoly

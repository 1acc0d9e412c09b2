#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pipeline.hpp"
#include "roots.hpp"

namespace charpoly {

struct Counterexample {
    long n = 0, k = 0;
    Rat value;
};

/// Finite data certifying a^lambda(n, k) >= 0 for all n >= |lambda| +
/// lambda_1 and k >= 0: a shift t making the relevant polynomials
/// coefficientwise nonnegative, per-j shifts for the diagonal families, and
/// the finite checks below the shift.
struct PositivityCertificate {
    Partition lambda;
    bool certified = false;
    long t = -1;                 // overall shift
    long t_dominance = -1;       // shift for the sign + dominance conditions
    std::vector<long> t_js;      // shift for each B_j, 0 <= j <= l-2
    std::string branch;          // "even" or "odd" dominance
    long diagonal_checks = 0;    // finite checks a(k+j, k) >= 0
    long ray_checks = 0;         // finite checks A_k(n) >= 0
    long revalidation_points = 0;
    std::optional<Counterexample> counterexample;
    std::string failure;         // nonempty when the search capped out
};

namespace detail {

inline const std::vector<std::string>& shift_vars() {
    static const std::vector<std::string> v{"k0", "s"};
    return v;
}

// p(n, k) with n = k0 + t + l - 1 + s and k = k0 + t; nonnegative
// coefficients in (k0, s) certify p >= 0 on k >= t, n >= k + l - 1.
inline MultiPoly shifted_quadrant(const MultiPoly& p, long l, long t) {
    const auto& sv = shift_vars();
    MultiPoly k0 = MultiPoly::variable(sv, "k0");
    MultiPoly s = MultiPoly::variable(sv, "s");
    MultiPoly n_img = k0 + s + MultiPoly::constant(sv, Rat(t + l - 1));
    MultiPoly k_img = k0 + MultiPoly::constant(sv, Rat(t));
    return p.compose({n_img, k_img});
}

inline bool nonneg_coeffs(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c.sign() < 0)
            return false;
    return true;
}

inline bool nonneg_coeffs(const UniPoly& p) {
    for (const auto& c : p.coeffs())
        if (c.sign() < 0)
            return false;
    return true;
}

// shift a univariate polynomial: p(k0 + t)
inline UniPoly shifted_uni(const UniPoly& p, long t) {
    UniPoly x_plus_t = UniPoly({Rat(t), Rat(1)});
    UniPoly acc = UniPoly::constant(0);
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x_plus_t;
        acc += UniPoly::constant(p.coeff(static_cast<size_t>(i)));
    }
    return acc;
}

// p(k0 + 1, s): one unit step of the quadrant shift, since the shift by
// t + 1 equals the shift by t with k0 replaced by k0 + 1
inline MultiPoly step_k0(const MultiPoly& p) {
    const auto& sv = shift_vars();
    MultiPoly k0p1 = MultiPoly::variable(sv, "k0") + MultiPoly::constant(sv, 1);
    return p.compose({k0p1, MultiPoly::variable(sv, "s")});
}

// smallest 0 <= t <= cap with all shifted coefficients nonnegative for every
// polynomial in the batch, or -1
inline long find_shift(const std::vector<const MultiPoly*>& polys, long l, long cap) {
    std::vector<MultiPoly> shifted;
    shifted.reserve(polys.size());
    for (const MultiPoly* p : polys)
        shifted.push_back(shifted_quadrant(*p, l, 0));
    for (long t = 0; t <= cap; ++t) {
        bool ok = true;
        for (const MultiPoly& p : shifted)
            if (!nonneg_coeffs(p)) {
                ok = false;
                break;
            }
        if (ok)
            return t;
        for (MultiPoly& p : shifted)
            p = step_k0(p);
    }
    return -1;
}

} // namespace detail

/// The dominance polynomial whose coefficientwise nonnegativity (after the
/// quadrant shift) makes the positive-leading term of the closed form
/// dominate the other:  for even l,
///   2^{2l-2} a0^2 - l0 (n-l+1)(2(n-k)+l+1)(2k+1) a1^2 >= 0,
/// and for odd l,
///   k (2(n-l)+1) a1^2 - 2^{2l} l (n-k+l1+1) a0^2 >= 0.
inline MultiPoly dominance_poly(const AhatPair& p) {
    long l = p.lambda.size();
    long l0 = p.l0, l1 = p.l1;
    const auto& vars = nk_vars();
    MultiPoly n = MultiPoly::variable(vars, "n");
    MultiPoly k = MultiPoly::variable(vars, "k");
    auto cnst = [&](const Rat& c) { return MultiPoly::constant(vars, c); };
    MultiPoly a0sq = p.a0 * p.a0;
    MultiPoly a1sq = p.a1 * p.a1;
    if (l % 2 == 0) {
        MultiPoly weight = (n - cnst(Rat(l - 1))) *
                           ((n - k) * Rat(2) + cnst(Rat(l + 1))) *
                           (k * Rat(2) + cnst(1)) * Rat(l0);
        return a0sq * pow2(2 * l - 2) - weight * a1sq;
    }
    MultiPoly weight_pos = k * ((n - cnst(Rat(l))) * Rat(2) + cnst(1));
    MultiPoly weight_neg = (n - k + cnst(Rat(l1 + 1))) * Rat(l) * pow2(2 * l);
    return weight_pos * a1sq - weight_neg * a0sq;
}

/// Run the positivity-certification search for lambda (1 <= |lambda| <= 10).
inline PositivityCertificate positivity_certify(const Partition& lambda,
                                                long t_cap = 500,
                                                long revalidate = 200,
                                                unsigned rng_seed = 20240801) {
    long l = lambda.size();
    if (l < 1 || l > 10)
        throw error("positivity_certify: 1 <= |lambda| <= 10 required");
    PositivityCertificate cert;
    cert.lambda = lambda;
    cert.branch = (l % 2 == 0) ? "even" : "odd";

    const AhatPair& pair = ahat_pair(lambda);
    MultiPoly sign0 = (l % 2 == 0) ? pair.a0 : -pair.a0;    // (-1)^l a0
    MultiPoly sign1 = (l % 2 == 0) ? -pair.a1 : pair.a1;    // (-1)^{l-1} a1
    MultiPoly dom = dominance_poly(pair);

    cert.t_dominance = detail::find_shift({&sign0, &sign1, &dom}, l, t_cap);
    if (cert.t_dominance < 0) {
        cert.failure = "dominance shift not found below cap";
        return cert;
    }

    long t = cert.t_dominance;
    std::vector<BjPoly> bjs;
    for (long j = 0; j + 1 <= l - 1; ++j) {
        BjPoly bj = bj_poly(lambda, j);
        long tj = -1;
        for (long cand = 0; cand <= t_cap; ++cand)
            if (detail::nonneg_coeffs(detail::shifted_uni(bj.poly, cand))) {
                tj = cand;
                break;
            }
        if (tj < 0) {
            cert.failure = "B_j shift not found below cap (j=" + std::to_string(j) + ")";
            return cert;
        }
        cert.t_js.push_back(tj);
        t = std::max(t, tj);
        bjs.push_back(std::move(bj));
    }
    cert.t = t;

    // finite check (i): the diagonals n = k + j for 0 <= j <= l-1 below the
    // shift, restricted to n >= |lambda| + lambda_1 where the claim lives.
    // j <= l-2 goes through B_j; the j = l-1 diagonal through B_{l-1}.
    BjPoly b_top = bj_poly(lambda, l - 1);
    for (long j = 0; j <= l - 1; ++j) {
        const UniPoly& Bj = (j <= l - 2) ? bjs[static_cast<size_t>(j)].poly : b_top.poly;
        for (long k = l; k < t; ++k) {
            if (k + j < l + lambda.largest())
                continue;
            Rat value = Bj.eval(Rat(k));
            ++cert.diagonal_checks;
            if (value.sign() < 0) {
                cert.counterexample = Counterexample{k + j, k, value / Rat(factorial(j + k))};
                return cert;
            }
        }
    }

    // finite check (ii): rays n >= k + l for l <= k < t, via integer points
    // up to the largest real root plus the positive leading coefficient
    // beyond it.
    for (long k = l; k < t; ++k) {
        AkPoly A = ak_poly(lambda, k);
        if (A.poly.is_zero())
            continue;
        if (A.poly.leading().sign() < 0) {
            cert.failure = "A_k leading coefficient negative at k=" + std::to_string(k);
            return cert;
        }
        Int bound = sturm_root_bound(A.poly);
        long hi = bound.fits_slong_p() ? bound.get_si() : 0;
        if (!bound.fits_slong_p()) {
            cert.failure = "root bound overflow at k=" + std::to_string(k);
            return cert;
        }
        for (long n = k + l; n <= hi; ++n) {
            Rat value = A.poly.eval(Rat(n));
            ++cert.ray_checks;
            if (value.sign() < 0) {
                cert.counterexample = Counterexample{n, k, value};
                return cert;
            }
        }
        (void)sturm_count(A.poly, RootBound::at(Rat(k + l - 1)), RootBound::pos_inf());
    }

    // re-validate on random in-range points through the closed forms
    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<long> kdist(l, l + 60), jdist(0, 60);
    for (long i = 0; i < revalidate; ++i) {
        long k = kdist(rng), j = jdist(rng);
        long n = k + j;
        if (n < l + lambda.largest())
            continue;
        Rat value = (j <= l - 2) ? bjs[static_cast<size_t>(j)].poly.eval(Rat(k)) /
                                       Rat(factorial(n))
                                 : a_eval(lambda, n, k);
        ++cert.revalidation_points;
        if (value.sign() < 0) {
            cert.counterexample = Counterexample{n, k, value};
            return cert;
        }
    }

    cert.certified = true;
    return cert;
}

} // namespace charpoly

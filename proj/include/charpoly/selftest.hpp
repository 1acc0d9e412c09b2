#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pipeline.hpp"
#include "positivity.hpp"
#include "ptau.hpp"
#include "roots.hpp"

namespace charpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace selftest_detail {

// the published table of a^hat pairs for |lambda| <= 3, built symbolically
inline std::vector<std::pair<Partition, std::pair<MultiPoly, MultiPoly>>> small_table() {
    const auto& vars = nk_vars();
    MultiPoly n = MultiPoly::variable(vars, "n");
    MultiPoly k = MultiPoly::variable(vars, "k");
    auto c = [&](long v) { return MultiPoly::constant(vars, Rat(v)); };
    std::vector<std::pair<Partition, std::pair<MultiPoly, MultiPoly>>> rows;
    rows.push_back({Partition{1}, {c(-1), c(1)}});
    rows.push_back({Partition{2},
                    {(k + c(1)) * (k - c(2)) * n * n - (k * k - k * Rat(5) + c(2)) * n -
                         k * (k - c(1)) * Rat(2),
                     (k - c(2)) * n * Rat(-2) - (k * Rat(2) - c(1))}});
    rows.push_back({Partition{1, 1},
                    {k * (n - c(1)) * ((k + c(1)) * n - (k - c(1)) * Rat(2)),
                     k * n * Rat(-2) + (k * Rat(2) - c(1))}});
    rows.push_back(
        {Partition{3},
         {(k * k * k - k * k * Rat(5) + k * Rat(6) + c(4)) * n.pow(3) * Rat(-1) +
              k * (k * k - k * Rat(7) + c(24)) * n * n +
              (k * k * k - k * k * Rat(10) + k + c(2)) * n * Rat(2) +
              k * (k + c(2)) * (k - c(1)) * Rat(4),
          (k + c(2)) * (k * k * Rat(2) - k * Rat(11) + c(17)) * n.pow(3) * Rat(2) -
              (k * Rat(2) - c(1)) * (k * k * Rat(5) - k * Rat(39) + c(106)) * n * n -
              (k * Rat(3) + c(1)) * (k * k * Rat(2) - k * Rat(17) + c(16)) * n * Rat(3) -
              (k + c(2)) * (k * Rat(2) - c(1)) * (k * Rat(2) - c(3)) * Rat(6)}});
    rows.push_back(
        {Partition{2, 1},
         {k * (n - c(2)) *
              (k * (k - c(3)) * n * n - (k * k - k * Rat(7) + c(4)) * n -
               k * (k - c(1)) * Rat(2)) *
              Rat(-2),
          ((k.pow(3) * Rat(2) - k * k * Rat(3) - k * Rat(9) + c(2)) * n.pow(3) * Rat(2) -
           (k * Rat(2) - c(1)) * (k * k * Rat(9) - k * Rat(35) + c(2)) * n * n +
           (k.pow(3) * Rat(6) - k * k * Rat(97) + k * Rat(131) - c(36)) * n +
           k * (k * Rat(2) - c(1)) * (k * Rat(2) - c(3)) * Rat(6)) *
              Rat(2)}});
    rows.push_back(
        {Partition{1, 1, 1},
         {k * (n - c(2)) *
              (k * (k + c(1)) * n * n - k * (k * Rat(5) - c(3)) * n +
               (k - c(1)) * (k * Rat(3) - c(2)) * Rat(2)) *
              Rat(-1),
          (k * Rat(2) - c(1)) * (n * Rat(2) - c(3)) *
              ((k * k + k + c(6)) * n * n - (k - c(1)) * (k * Rat(5) + c(12)) * n +
               (k * Rat(2) - c(3)) * (k * Rat(3) - c(2)) * Rat(2))}});
    return rows;
}

// the four closed forms for |lambda| <= 2.  At k = 1 the size-2 formulas
// read binom(n - 3/2, k-2) / (k-1), a 0/0; the falling-factorial extension
// F(x, -1) = 1/(x+1) resolves it: binom(x, k-2)/(k-1) = F(x, k-2)/(k-1)!.
inline Rat small_closed_form(const Partition& lam, long n, long k) {
    Rat half(Int(1), Int(2));
    auto binom_over_km1 = [&](const Rat& x) {
        if (k >= 2)
            return binomial_general(x, k - 2) / Rat(k - 1);
        return Rat(1) / ((x + Rat(1)) * Rat(factorial(k - 1)));
    };
    if (lam.empty())
        return Rat(binomial(n, k), factorial(k));
    if (lam == Partition{1}) {
        Rat t1 = -Rat(binomial(n - 1, k - 1), factorial(k));
        Rat t2 = binomial_general(Rat(n) - half, k - 1) * pow2(k - 1) /
                 double_factorial(2 * k - 1);
        return t1 + t2;
    }
    if (lam == Partition{2}) {
        Rat t1 = Rat(binomial(n - 1, k - 2)) / (Rat(2) * Rat(factorial(k - 1)));
        Rat t2 = -Rat(binomial(n - 2, k - 1)) / (Rat(n) * Rat(factorial(k)));
        Rat t3 = -binom_over_km1(Rat(n) - Rat(3) * half) * pow2(k - 2) *
                 (Rat(2 * k - 4) * Rat(n) + Rat(2 * k - 1)) /
                 (Rat(n) * double_factorial(2 * k - 1));
        return t1 + t2 + t3;
    }
    if (lam == Partition{1, 1}) {
        Rat t1 = Rat(binomial(n - 2, k - 2), factorial(k));
        Rat t2 = Rat(binomial(n - 1, k - 2)) / (Rat(2) * Rat(factorial(k - 1)));
        Rat t3 = Rat(binomial(n - 2, k - 1)) / (Rat(n) * Rat(factorial(k)));
        // last-term numerator is 2kn - (2k-1); in every row it equals the
        // negated odd-part polynomial of the closed-form pair
        Rat t4 = -binom_over_km1(Rat(n) - Rat(3) * half) * pow2(k - 2) *
                 (Rat(2 * k) * Rat(n) - Rat(2 * k - 1)) /
                 (Rat(n) * double_factorial(2 * k - 1));
        return t1 + t2 + t3 + t4;
    }
    throw error("small_closed_form: unsupported partition");
}

template <typename F>
CheckResult timed(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline void expect(bool cond, const std::string& msg) {
    if (!cond)
        throw error(msg);
}

} // namespace selftest_detail

/// The acceptance suite: every check is exact (tolerance zero).
inline std::vector<CheckResult> run_selftest(bool extended = false) {
    using namespace selftest_detail;
    std::vector<CheckResult> results;

    results.push_back(timed("ahat_small_table", [] {
        long checked = 0;
        for (const auto& [lam, expected] : small_table()) {
            const AhatPair& p = ahat_pair(lam);
            expect(p.a0 == expected.first && p.a1 == expected.second,
                   "table mismatch for lambda=" + lam.str());
            ++checked;
        }
        return std::to_string(checked) + " pairs match the published table exactly";
    }));

    results.push_back(timed("small_lambda_closed_forms", [] {
        long checked = 0;
        for (const Partition& lam :
             {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}})
            for (long k = 1; k <= 6; ++k)
                for (long n = k + lam.size(); n <= 12; ++n) {
                    expect(a_eval(lam, n, k) == small_closed_form(lam, n, k),
                           "closed-form mismatch at lambda=" + lam.str() +
                               " n=" + std::to_string(n) + " k=" + std::to_string(k));
                    ++checked;
                }
        return std::to_string(checked) + " evaluations equal the four closed forms";
    }));

    results.push_back(timed("akpoly_root_counts", [] {
        AkPoly A = ak_poly(Partition{2, 1}, 14);
        expect(A.poly.degree() == 11, "degree of the k=14 witness is not 11");
        expect(UniPoly::gcd(A.poly, A.poly.derivative()).degree() <= 0,
               "k=14 witness not squarefree");
        long roots = sturm_count_real_line(A.poly);
        expect(roots == 9, "k=14 witness has " + std::to_string(roots) +
                               " real roots, expected 9");
        for (const Partition& lam : all_partitions(3))
            for (long k = 3; k <= 13; ++k) {
                AkPoly Ak = ak_poly(lam, k);
                if (Ak.poly.is_zero())
                    continue;
                long d = Ak.poly.degree();
                expect(real_roots_with_multiplicity(Ak.poly) == d,
                       "A_k not real-rooted at lambda=" + lam.str() +
                           " k=" + std::to_string(k));
            }
        return "degree 11 with 9 real roots at k=14; all k <= 13 real-rooted";
    }));

    results.push_back(timed("oracle_equivalence", [] {
        long checked = 0;
        for (long size = 0; size <= 4; ++size)
            for (const Partition& lam : all_partitions(size))
                for (long n = 0; n <= 8; ++n)
                    for (long k = 0; k <= n; ++k) {
                        Rat exact = a_exact(lam, n, k).total();
                        expect(exact == brute_a(lam, n, k, true),
                               "exact vs oracle mismatch at lambda=" + lam.str() +
                                   " n=" + std::to_string(n) + " k=" + std::to_string(k));
                        if (n >= size + lam.largest())
                            expect(exact == brute_a(lam, n, k, false),
                                   "exact vs character oracle mismatch at lambda=" +
                                       lam.str() + " n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
                        ++checked;
                    }
        return std::to_string(checked) + " points match the S_n oracle";
    }));

    results.push_back(timed("bj_degree_and_leading", [] {
        long checked = 0;
        for (long size = 1; size <= 4; ++size)
            for (const Partition& lam : all_partitions(size))
                for (long j = 0; j <= 3; ++j) {
                    bj_poly(lam, j);  // verifies degree and leading internally
                    ++checked;
                }
        return std::to_string(checked) + " B_j polynomials with verified degree/leading";
    }));

    results.push_back(timed("ahat_degree_and_leading", [] {
        long checked = 0;
        for (long size = 1; size <= 5; ++size)
            for (const Partition& lam : all_partitions(size)) {
                const AhatPair& p = ahat_pair(lam);
                long l = lam.size();
                expect(p.a0.degree("n") == l + p.l0 - 1 &&
                           p.a0.degree("k") == l + p.l0 - 1,
                       "a0 degree off for " + lam.str());
                expect(p.a1.degree("n") == l + p.l1 - 1 &&
                           p.a1.degree("k") == l + p.l1 - 1,
                       "a1 degree off for " + lam.str());
                expect(p.lead0 == ahat_expected_lead(lam, 0) &&
                           p.lead1 == ahat_expected_lead(lam, 1),
                       "leading coefficients off for " + lam.str());
                ++checked;
            }
        return std::to_string(checked) + " pairs with verified degrees and leadings";
    }));

    results.push_back(timed("ptau_properties", [] {
        const auto& vars = ptau_vars();
        long checked = 0, nonneg_violations = 0;
        for (long r = 0; r <= 7; ++r)
            for (const ChainType& tau : enum_chain_types(r)) {
                const MultiPoly& P = p_tau(tau);  // degree/integrality asserted inside
                long d = tau.degree();
                expect((P == MultiPoly::constant(vars, 1)) == (r == d),
                       "P=1 iff r=d fails at " + tau.str());
                if (tau.rank < d) {
                    for (const auto& [e, c] : P.terms())
                        expect(c.num() % 2 == 0, "2 | P fails at " + tau.str());
                    MultiPoly at_w1 = P.compose(
                        {MultiPoly::variable(vars, "z"), MultiPoly::constant(vars, -1)});
                    expect(at_w1.is_zero(), "(w+1) | P fails at " + tau.str());
                }
                for (const auto& [e, c] : P.terms())
                    if (c.sign() < 0)
                        ++nonneg_violations;
                ++checked;
            }
        for (long r = 1; r <= 7; ++r)
            for (long d = 0; d < r; ++d) {
                Rat v = p_tau(loops_and_dots(r, d)).eval({Rat(-1), Rat(-1)});
                expect(v.is_zero(), "P(-1,-1) != 0 at r=" + std::to_string(r) +
                                        " d=" + std::to_string(d));
            }
        return std::to_string(checked) + " chain types; conjectured nonnegativity " +
               (nonneg_violations == 0 ? "holds" : "VIOLATED") + " up to length 7";
    }));

    results.push_back(timed("h_identity_suite", [] {
        long checked = 0;
        // reduction
        for (long r = 0; r <= 5; ++r)
            for (const ChainType& tau : enum_chain_types(r)) {
                ChainType red = tau.reduced();
                for (long n = 0; n <= 5; ++n)
                    for (long k = 0; k <= n; ++k) {
                        expect(brute_h(tau, n, k) ==
                                   binomial(n + r, tau.m(1)) * brute_h(red, n, k),
                               "reduction identity fails at " + tau.str());
                        ++checked;
                    }
            }
        // derivative
        for (long r = 0; r <= 5; ++r)
            for (const ChainType& tau : enum_chain_types(r)) {
                if (!tau.is_reduced())
                    continue;
                ChainType omega = tau.derivative();
                long d = tau.degree();
                for (long n = 0; n <= 5; ++n)
                    for (long k = 0; k <= n; ++k) {
                        Int rhs = 0;
                        for (const ChainType& omp : enum_chain_types(d))
                            rhs += zeta_count(omega, omp) * brute_kappa(omp, n, k);
                        expect(brute_h(tau, n, k) == rhs,
                               "derivative identity fails at " + tau.str());
                        ++checked;
                    }
            }
        // parity
        for (long r = 0; r <= 5; ++r)
            for (const ChainType& tau : enum_chain_types(r)) {
                if (tau.rank >= tau.degree())
                    continue;
                for (long n = 0; n <= 5; ++n)
                    for (long k = 0; k <= n; ++k) {
                        expect(brute_h(tau, n, k) % 2 == 0 &&
                                   brute_kappa(tau, n, k) % 2 == 0,
                               "parity fails at " + tau.str());
                        ++checked;
                    }
            }
        // functional equation, coefficientwise to total order 10:
        // h(A+M, M) = sum_j kappa(M, M-j) binom(A-j+r+2M, r+2M)
        for (long r = 0; r <= 5; ++r)
            for (const ChainType& tau : enum_chain_types(r))
                for (long M = 0; M <= 5; ++M)
                    for (long A = 0; A + M <= 10; ++A) {
                        Rat lhs = h_value(tau, A + M, M, 12);
                        Rat rhs = 0;
                        for (long j = 0; j <= std::min(A, M); ++j)
                            rhs += Rat(brute_kappa(tau, M, M - j) *
                                       binomial(A - j + r + 2 * M, r + 2 * M));
                        expect(lhs == rhs, "functional equation fails at " + tau.str() +
                                               " A=" + std::to_string(A) +
                                               " M=" + std::to_string(M));
                        ++checked;
                    }
        return std::to_string(checked) + " identity instances hold exactly";
    }));

    results.push_back(timed(extended ? "positivity_certificates_extended"
                                     : "positivity_certificates", [extended] {
        long max_size = extended ? 10 : 5;
        long certified = 0;
        for (long size = 1; size <= max_size; ++size)
            for (const Partition& lam : all_partitions(size)) {
                PositivityCertificate c = positivity_certify(lam);
                if (c.counterexample)
                    throw error("NEGATIVE VALUE at lambda=" + lam.str() + " n=" +
                                std::to_string(c.counterexample->n) + " k=" +
                                std::to_string(c.counterexample->k) + " value=" +
                                c.counterexample->value.str());
                expect(c.certified, "certificate search failed for lambda=" + lam.str() +
                                        ": " + c.failure);
                ++certified;
            }
        return std::to_string(certified) + " certificates, each revalidated on random points";
    }));

    results.push_back(timed("expected_statistics", [] {
        const auto vars = stat_vars(3);
        MultiPoly one = MultiPoly::constant(vars, 1);
        MultiPoly m1 = MultiPoly::variable(vars, "m1");
        MultiPoly m2 = MultiPoly::variable(vars, "m2");
        MultiPoly m3 = MultiPoly::variable(vars, "m3");
        std::vector<std::pair<std::string, MultiPoly>> stats = {
            {"1", one},         {"m1", m1},      {"m2", m2},
            {"m1^2", m1 * m1},  {"m1*m2", m1 * m2}, {"m3", m3}};
        long checked = 0;
        for (const auto& [name, f] : stats)
            for (long n = 0; n <= 7; ++n)
                for (long k = 0; k <= n; ++k) {
                    expect(expected_value(f, n, k) == brute_expected(f, n, k),
                           "expected-value mismatch for f=" + name +
                               " n=" + std::to_string(n) + " k=" + std::to_string(k));
                    ++checked;
                }
        return std::to_string(checked) + " expected values match the oracle";
    }));

    return results;
}

/// Print one pass/fail line per criterion; true iff everything passed.
inline bool selftest_main(std::ostream& os, bool extended = false) {
    bool all = true;
    for (const CheckResult& r : run_selftest(extended)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%7.2fs", r.seconds);
        os << (r.pass ? "PASS" : "FAIL") << "  " << buf << "  " << r.name << ": "
           << r.detail << "\n";
        all = all && r.pass;
    }
    return all;
}

} // namespace charpoly

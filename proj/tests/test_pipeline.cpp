#include <gtest/gtest.h>

#include <map>
#include <thread>

#include "charpoly/oracle.hpp"
#include "charpoly/interpolate.hpp"
#include "charpoly/pipeline.hpp"

using namespace charpoly;

TEST(AExact, KnownValues) {
    EXPECT_EQ(a_exact(Partition{}, 4, 2).total(), Rat(3));
    EXPECT_EQ(a_exact(Partition{1}, 3, 2).total(), Rat(Int(2), Int(3)));
    for (long n = 5; n <= 8; ++n)
        for (long k = 0; k <= 2; ++k)
            EXPECT_EQ(a_exact(Partition{2, 1}, n, k).total(), Rat(0)) << n << " " << k;
}

TEST(AExact, MatchesOracleAndSplitsConsistently) {
    for (long size = 0; size <= 3; ++size)
        for (const Partition& lam : all_partitions(size))
            for (long n = 0; n <= 6; ++n)
                for (long k = 0; k <= n; ++k) {
                    SplitA v = a_exact(lam, n, k);
                    EXPECT_EQ(v.total(), brute_a(lam, n, k, true))
                        << lam.str() << " " << n << " " << k;
                    EXPECT_EQ(v.a0 + v.a1, v.total());
                }
}

TEST(AhatPair, FigureValues) {
    const AhatPair& p1 = ahat_pair(Partition{1});
    EXPECT_EQ(p1.a0, MultiPoly::constant(nk_vars(), -1));
    EXPECT_EQ(p1.a1, MultiPoly::constant(nk_vars(), 1));

    const AhatPair& p11 = ahat_pair(Partition{1, 1});
    MultiPoly n = MultiPoly::variable(nk_vars(), "n");
    MultiPoly k = MultiPoly::variable(nk_vars(), "k");
    EXPECT_EQ(p11.a1, k * n * Rat(-2) + k * Rat(2) - MultiPoly::constant(nk_vars(), 1));

    const AhatPair& p2 = ahat_pair(Partition{2});
    EXPECT_EQ(p2.a0.coeff({2, 2}), Rat(1));          // chi^{(2)}(id_2)
    EXPECT_EQ(p2.a1.coeff({1, 1}) * pow2(-1), Rat(-1));  // -chi^{(1)}(id_1)
    EXPECT_THROW(ahat_pair(Partition{}), error);
}

TEST(AEval, ClosedFormAgreesWithAssembly) {
    EXPECT_EQ(a_eval(Partition{1}, 3, 2), Rat(Int(2), Int(3)));
    EXPECT_EQ(a_eval(Partition{1}, 2, 1), Rat(0));
    for (long size = 1; size <= 3; ++size)
        for (const Partition& lam : all_partitions(size))
            for (long k = 1; k <= 4; ++k)
                for (long n = k + size - 1; n <= k + size + 3; ++n)
                    EXPECT_EQ(a_eval(lam, n, k), a_exact(lam, n, k).total())
                        << lam.str() << " " << n << " " << k;
}

TEST(AEval, LargeArgumentsMatchAkPoly) {
    AkPoly A = ak_poly(Partition{2, 1}, 14);
    EXPECT_EQ(a_eval(Partition{2, 1}, 30, 14), A.poly.eval(Rat(30)));
    EXPECT_EQ(a_eval(Partition{2, 1}, 100, 14), A.poly.eval(Rat(100)));
}

TEST(BjPoly, KnownValues) {
    BjPoly b = bj_poly(Partition{1}, 0);
    EXPECT_EQ(b.poly, UniPoly({Rat(-1), Rat(1)}));  // k - 1
    for (long j = 0; j <= 3; ++j) {
        BjPoly bj = bj_poly(Partition{1}, j);
        EXPECT_EQ(bj.poly.degree(), 1 + 2 * j);
        EXPECT_EQ(bj.poly.leading(), pow2(j) / double_factorial(1 + 2 * j));
    }
    BjPoly b21 = bj_poly(Partition{2, 1}, 0);
    EXPECT_EQ(b21.poly.eval(Rat(2)), Rat(0));  // vanishes below k = l
}

TEST(AkPoly, KnownValues) {
    AkPoly deg11 = ak_poly(Partition{2, 1}, 14);
    EXPECT_EQ(deg11.poly.degree(), 11);
    // empty partition: binom(n, k) / k! as a polynomial of degree k
    AkPoly empty = ak_poly(Partition{}, 3);
    EXPECT_EQ(empty.poly.degree(), 3);
    for (long n = 3; n <= 12; ++n)
        EXPECT_EQ(empty.poly.eval(Rat(n)), Rat(binomial(n, 3), factorial(3)));
    // constant-statistic column: identically zero
    EXPECT_TRUE(ak_poly(Partition{1}, 1).poly.is_zero());
    EXPECT_THROW(ak_poly(Partition{2, 1}, 2), error);
}

TEST(Expected, KnownValues) {
    auto vars = stat_vars(2);
    MultiPoly one = MultiPoly::constant(vars, 1);
    MultiPoly m1 = MultiPoly::variable(vars, "m1");
    for (long n = 0; n <= 6; ++n)
        for (long k = 0; k <= n; ++k)
            EXPECT_EQ(expected_value(one, n, k), Rat(binomial(n, k), factorial(k)));
    EXPECT_EQ(expected_value(m1, 3, 2), Rat(Int(13), Int(6)));
    // n = k diagonal recombines the two pieces already tested
    for (long k = 1; k <= 5; ++k)
        EXPECT_EQ(expected_value(m1, k, k),
                  (bj_poly(Partition{1}, 0).poly.eval(Rat(k)) + Rat(1)) /
                      Rat(factorial(k)));
}

TEST(Expected, DiagonalPolynomials) {
    // (j+k)! F(j+k, k) is a polynomial in k of degree <= r + 2j whose
    // k^{r+2j} coefficient is c1 2^j r!! / (r+2j)!!, c1 the m1^r coefficient
    auto vars = stat_vars(2);
    MultiPoly m1 = MultiPoly::variable(vars, "m1");
    MultiPoly m2 = MultiPoly::variable(vars, "m2");
    struct Case {
        MultiPoly f;
        long r;
        Rat c1;
    };
    std::vector<Case> cases = {{m1 * m1, 2, Rat(1)},
                               {m1 * m1 - m2 * Rat(5), 2, Rat(1)},
                               {m2, 2, Rat(0)},
                               {m1 * m2, 3, Rat(0)}};
    for (const auto& [f, r, c1] : cases)
        for (long j = 0; j <= 2; ++j) {
            std::vector<Rat> xs, ys;
            for (long k = r; k <= 2 * r + 2 * j + 1; ++k) {
                xs.push_back(Rat(k));
                ys.push_back(expected_value(f, j + k, k) * Rat(factorial(j + k)));
            }
            UniPoly Fj = newton_interpolate(xs, ys);
            EXPECT_LE(Fj.degree(), r + 2 * j);
            Rat lead = Fj.coeff(static_cast<size_t>(r + 2 * j));
            EXPECT_EQ(lead, c1 * pow2(j) * double_factorial(r) /
                                double_factorial(r + 2 * j));
            for (long k = 2 * r + 2 * j + 2; k <= 2 * r + 2 * j + 4; ++k)
                EXPECT_EQ(Fj.eval(Rat(k)),
                          expected_value(f, j + k, k) * Rat(factorial(j + k)));
        }
}

TEST(Oracle, CountIncreasing) {
    EXPECT_EQ(count_increasing({1, 2, 3}, 2), Int(3));
    EXPECT_EQ(count_increasing({3, 2, 1}, 2), Int(0));
    EXPECT_EQ(count_increasing({1, 3, 2}, 2), Int(2));
    EXPECT_EQ(count_increasing({1, 3, 2}, 0), Int(1));
    EXPECT_EQ(count_increasing({1, 3, 2}, 5), Int(0));
    EXPECT_THROW(check_perm({1, 1, 2}), error);
}

TEST(Oracle, BruteValues) {
    EXPECT_EQ(brute_a(Partition{1}, 3, 2, true), Rat(Int(2), Int(3)));
    EXPECT_EQ(brute_a(Partition{}, 4, 2, true), Rat(3));
    EXPECT_EQ(brute_a(Partition{1}, 2, 1, true), Rat(0));
    EXPECT_EQ(brute_a(Partition{1}, 3, 2, false), Rat(Int(2), Int(3)));
    EXPECT_THROW(brute_a(Partition{1}, 1, 1, false), error);

    auto vars = stat_vars(2);
    MultiPoly m1 = MultiPoly::variable(vars, "m1");
    MultiPoly m2 = MultiPoly::variable(vars, "m2");
    EXPECT_EQ(brute_expected(m1, 3, 2), Rat(Int(13), Int(6)));
    EXPECT_EQ(brute_expected(MultiPoly::constant(vars, 1), 4, 2), Rat(3));
    EXPECT_EQ(brute_expected(m2, 2, 0), Rat(Int(1), Int(2)));
}

TEST(Oracle, PatternCountsInvariantUnderInversion) {
    // the multiset of (N_0, ..., N_n) vectors is preserved by pi -> pi^{-1}
    for (long n = 1; n <= 6; ++n) {
        std::map<std::vector<Int>, long> direct, inverted;
        Perm pi(static_cast<size_t>(n));
        std::iota(pi.begin(), pi.end(), 1);
        do {
            direct[count_increasing_all(pi)]++;
            Perm inv(pi.size());
            for (size_t i = 0; i < pi.size(); ++i)
                inv[static_cast<size_t>(pi[i] - 1)] = static_cast<int>(i + 1);
            inverted[count_increasing_all(inv)]++;
        } while (std::next_permutation(pi.begin(), pi.end()));
        EXPECT_EQ(direct, inverted) << n;
    }
}

TEST(Oracle, FullEnumerationAtDefaultCap) {
    // one pass over S_9 feeds every statistic; spot-check the closed forms
    for (long k = 0; k <= 9; k += 3) {
        EXPECT_EQ(brute_a(Partition{}, 9, k, true), Rat(binomial(9, k), factorial(k)));
        EXPECT_EQ(a_exact(Partition{1}, 9, k, 12).total(), brute_a(Partition{1}, 9, k, true));
    }
    EXPECT_THROW(brute_a(Partition{1}, 10, 1, true), error);
}

TEST(Pipeline, ConcurrentLambdaPipelines) {
    // independent lambda pipelines may run in parallel; the memo tables are
    // guarded, so results must be the same as the serial ones
    std::vector<Partition> lams = all_partitions(4);
    std::vector<Rat> values(lams.size());
    std::vector<std::thread> threads;
    threads.reserve(lams.size());
    for (size_t i = 0; i < lams.size(); ++i)
        threads.emplace_back([&, i] { values[i] = a_eval(lams[i], 12, 6); });
    for (auto& t : threads)
        t.join();
    for (size_t i = 0; i < lams.size(); ++i)
        EXPECT_EQ(values[i], a_exact(lams[i], 12, 6, 16).total()) << lams[i].str();
}

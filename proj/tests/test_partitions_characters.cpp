#include <gtest/gtest.h>

#include "charpoly/characters.hpp"
#include "charpoly/partitions.hpp"
#include "charpoly/statistic_basis.hpp"

using namespace charpoly;

TEST(Partition, BasicsAndValidation) {
    Partition p{3, 2, 2, 1};
    EXPECT_EQ(p.size(), 8);
    EXPECT_EQ(p.len(), 4);
    EXPECT_EQ(p.m(2), 2);
    EXPECT_EQ(p.largest(), 3);
    EXPECT_EQ(p.shaved(), (Partition{2, 1, 1}));
    EXPECT_EQ(Partition{1}.shaved(), Partition{});
    EXPECT_EQ((Partition{2, 1}.padded(6)), (Partition{3, 2, 1}));
    EXPECT_THROW((Partition{2, 1}.padded(4)), error);
    EXPECT_THROW(Partition({1, 2}), error);
    EXPECT_THROW(Partition({0}), error);
    EXPECT_EQ(Partition::parse("2,1"), (Partition{2, 1}));
    EXPECT_EQ(Partition::parse(""), Partition{});
    EXPECT_EQ(Partition{}.str(), "[]");
}

TEST(Partition, EnumerationCounts) {
    const long p_of[11] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n)
        EXPECT_EQ(static_cast<long>(all_partitions(n).size()), p_of[n]) << n;
}

TEST(Partition, YoungContainment) {
    EXPECT_TRUE(young_contains(Partition{2, 1}, Partition{1, 1}));
    EXPECT_FALSE(young_contains(Partition{2, 1}, Partition{3}));
    EXPECT_TRUE(young_contains(Partition{2, 1}, Partition{1}));
    // both mu |- 2 between shaved((2,1)) = (1) and (2,1): exactly {(2),(1,1)}
    std::vector<Partition> between;
    for (const Partition& mu : all_partitions(2))
        if (young_contains(Partition{2, 1}, mu) && young_contains(mu, Partition{1}))
            between.push_back(mu);
    ASSERT_EQ(between.size(), 2u);
    EXPECT_EQ(between[0], Partition{2});
    EXPECT_EQ(between[1], (Partition{1, 1}));
}

TEST(Characters, MurnaghanNakayama) {
    EXPECT_EQ(mn_character(Partition{1, 1}, Partition{2}), Int(-1));
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{1, 1, 1}), Int(2));
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{3}), Int(-1));
    EXPECT_EQ(mn_character(Partition{2, 2}, Partition{2, 1, 1}), Int(0));
    EXPECT_EQ(character_dimension(Partition{3, 2}), Int(5));
    EXPECT_EQ(character_dimension(Partition{2, 2, 1}), Int(5));
    EXPECT_THROW(mn_character(Partition{2}, Partition{3}), error);
}

TEST(Characters, ColumnOrthogonality) {
    for (long n = 1; n <= 6; ++n) {
        std::vector<Partition> parts = all_partitions(n);
        for (const Partition& mu : parts)
            for (const Partition& nu : parts) {
                Rat sum = 0;
                for (const Partition& ct : parts)
                    sum += Rat(class_size(n, ct) * mn_character(mu, ct) *
                               mn_character(nu, ct));
                sum /= Rat(factorial(n));
                EXPECT_EQ(sum, Rat(mu == nu ? 1 : 0))
                    << "mu=" << mu.str() << " nu=" << nu.str();
            }
    }
}

TEST(StatisticBasis, XLambdaSmall) {
    EXPECT_EQ(x_lambda(Partition{}), MultiPoly::constant(stat_vars(1), 1));
    MultiPoly m1 = MultiPoly::variable(stat_vars(1), "m1");
    EXPECT_EQ(x_lambda(Partition{1}), m1 - MultiPoly::constant(stat_vars(1), 1));
    // X^{(1)} at the identity of S_3 equals chi^{(2,1)}(id) = 2
    EXPECT_EQ(eval_at_cycle_type(x_lambda(Partition{1}), Partition{1, 1, 1}), Rat(2));
}

TEST(StatisticBasis, MacdonaldAgreement) {
    // X^lambda evaluated at cycle counts equals the genuine character of
    // lambda[n], for every cycle type of S_n, n <= 8
    for (long n = 1; n <= 8; ++n)
        for (long size = 0; size <= 4; ++size)
            for (const Partition& lam : all_partitions(size)) {
                if (lam.size() + lam.largest() > n)
                    continue;
                MultiPoly X = x_lambda(lam);
                Partition padded = lam.padded(n);
                for (const Partition& ct : all_partitions(n))
                    EXPECT_EQ(eval_at_cycle_type(X, ct), Rat(mn_character(padded, ct)))
                        << "lambda=" << lam.str() << " n=" << n << " ct=" << ct.str();
            }
}

TEST(StatisticBasis, GradedDegree) {
    MultiPoly m1 = MultiPoly::variable(stat_vars(3), "m1");
    MultiPoly m3 = MultiPoly::variable(stat_vars(3), "m3");
    EXPECT_EQ(graded_degree(m1 * m1 * m1), 3);
    EXPECT_EQ(graded_degree(m3), 3);
    EXPECT_EQ(graded_degree(m1 * m3), 4);
}

TEST(StatisticBasis, ExpandInXBasis) {
    MultiPoly m1 = MultiPoly::variable(stat_vars(1), "m1");
    auto coeffs = expand_in_x_basis(m1, 1);
    ASSERT_EQ(coeffs.size(), 2u);
    EXPECT_EQ(coeffs.at(Partition{}), Rat(1));
    EXPECT_EQ(coeffs.at(Partition{1}), Rat(1));

    auto trivial = expand_in_x_basis(MultiPoly::constant(stat_vars(1), 1), 1);
    ASSERT_EQ(trivial.size(), 1u);
    EXPECT_EQ(trivial.at(Partition{}), Rat(1));

    // every basis element expands to a unit vector
    for (long size = 0; size <= 4; ++size)
        for (const Partition& lam : all_partitions(size)) {
            auto roundtrip = expand_in_x_basis(x_lambda(lam), size);
            ASSERT_EQ(roundtrip.size(), 1u) << lam.str();
            EXPECT_EQ(roundtrip.at(lam), Rat(1)) << lam.str();
        }
}

TEST(StatisticBasis, ExpandRecombineInverse) {
    // expanding and recombining is the identity on graded degree <= 6
    std::vector<std::string> vars = stat_vars(6);
    MultiPoly m1 = MultiPoly::variable(vars, "m1");
    MultiPoly m2 = MultiPoly::variable(vars, "m2");
    MultiPoly m6 = MultiPoly::variable(vars, "m6");
    MultiPoly f = m1.pow(6) - m1 * m2 * Rat(3) + m6 * Rat(Int(5), Int(2)) +
                  m2.pow(3) + MultiPoly::constant(vars, 11);
    MultiPoly recombined(vars);
    for (const auto& [lam, c] : expand_in_x_basis(f, 6))
        recombined += x_lambda(lam).extend_vars(vars) * c;
    EXPECT_EQ(recombined, f);
}

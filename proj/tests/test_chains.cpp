#include <gtest/gtest.h>

#include "charpoly/chains.hpp"
#include "charpoly/characters.hpp"

using namespace charpoly;

TEST(ChainType, EnumerationAndOrder) {
    std::vector<ChainType> r2 = enum_chain_types(2);
    ASSERT_EQ(r2.size(), 4u);
    EXPECT_EQ(r2[0], ChainType(2, Partition{}));
    EXPECT_EQ(r2[1], ChainType(1, Partition{1}));
    EXPECT_EQ(r2[2], ChainType(0, Partition{2}));
    EXPECT_EQ(r2[3], ChainType(0, Partition{1, 1}));

    std::vector<ChainType> r0 = enum_chain_types(0);
    ASSERT_EQ(r0.size(), 1u);
    EXPECT_EQ(r0[0], ChainType(0, Partition{}));

    std::vector<ChainType> r1d1 = enum_chain_types(1, 1);
    ASSERT_EQ(r1d1.size(), 1u);
    EXPECT_EQ(r1d1[0], ChainType(1, Partition{}));
}

TEST(ChainType, DerivedQuantities) {
    ChainType tau(1, Partition{3, 2, 1, 1});
    EXPECT_EQ(tau.length(), 8);
    EXPECT_EQ(tau.degree(), 4);
    EXPECT_EQ(tau.reduced(), ChainType(1, Partition{3, 2}));
    EXPECT_EQ(tau.derivative(), ChainType(1, Partition{2, 1}));
    EXPECT_EQ(tau.dotted(), ChainType(1, Partition{3, 2, 1}));
    EXPECT_THROW(ChainType(0, Partition{2}).dotted(), error);
}

TEST(Arrangement, RepresentativeAndType) {
    Arrangement a = representative(ChainType(1, Partition{}));
    EXPECT_EQ(a.pairs, (std::vector<std::pair<long, long>>{{1, 1}}));
    Arrangement b = representative(ChainType(0, Partition{2}));
    EXPECT_EQ(b.pairs, (std::vector<std::pair<long, long>>{{1, 2}}));
    EXPECT_TRUE(representative(ChainType(0, Partition{})).pairs.empty());

    EXPECT_EQ(Arrangement(1, {{1, 1}}).typ(), ChainType(1, Partition{}));
    EXPECT_EQ(Arrangement(2, {{2, 1}}).typ(), ChainType(0, Partition{2}));
    EXPECT_EQ(Arrangement(3, {}).typ(), ChainType(0, Partition{1, 1, 1}));
    EXPECT_THROW(Arrangement(2, {{1, 1}, {2, 1}}), error);

    long count_02 = 0;
    for (const Arrangement& arr : all_arrangements(2))
        if (arr.typ() == ChainType(0, Partition{2}))
            ++count_02;
    EXPECT_EQ(count_02, 2);
}

TEST(Arrangement, RepresentativeRoundTrip) {
    for (long r = 0; r <= 8; ++r)
        for (const ChainType& tau : enum_chain_types(r))
            EXPECT_EQ(representative(tau).typ(), tau) << tau.str();
}

TEST(Chains, ZetaCount) {
    ChainType om(1, Partition{1});
    EXPECT_EQ(zeta_count(om, om), Int(1));
    EXPECT_EQ(zeta_count(ChainType(0, Partition{1}), ChainType(1, Partition{})), Int(1));
    EXPECT_EQ(zeta_count(ChainType(1, Partition{1}), ChainType(2, Partition{})), Int(2));
    EXPECT_THROW(zeta_count(ChainType(1, Partition{}), ChainType(2, Partition{})), error);
}

TEST(Chains, Vartheta) {
    // all-loops type of length l gives the dimension chi^lambda(id)
    for (long size = 1; size <= 5; ++size)
        for (const Partition& lam : all_partitions(size)) {
            ChainType tau_l(size, Partition{});
            EXPECT_EQ(vartheta(tau_l, lam), character_dimension(lam)) << lam.str();
        }
    EXPECT_EQ(vartheta(ChainType(0, Partition{1}), Partition{1}), Int(1));
    // length above |lambda| gives zero
    EXPECT_EQ(vartheta(ChainType(0, Partition{3}), Partition{2}), Int(0));
    EXPECT_EQ(vartheta(ChainType(4, Partition{}), Partition{2, 1}), Int(0));
}

TEST(Chains, VarthetaIntegrality) {
    // vartheta / m_1! is an integer
    for (long r = 0; r <= 5; ++r)
        for (const ChainType& tau : enum_chain_types(r))
            for (long size = 1; size <= 5; ++size)
                for (const Partition& lam : all_partitions(size)) {
                    Int theta = vartheta(tau, lam);
                    EXPECT_EQ(theta % factorial(tau.m(1)), Int(0))
                        << tau.str() << " " << lam.str();
                }
}

TEST(Brute, KnownValues) {
    // h for the empty type is binom(n, k)^2
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
            EXPECT_EQ(brute_h(ChainType(0, Partition{}), n, k),
                      binomial(n, k) * binomial(n, k));
    EXPECT_EQ(brute_h(ChainType(1, Partition{}), 1, 1), Int(2));
    EXPECT_EQ(brute_h(ChainType(0, Partition{2}), 1, 1), Int(4));
    EXPECT_EQ(brute_h(ChainType(0, Partition{2}), 1, 0), Int(6));
    EXPECT_THROW(brute_h(ChainType(0, Partition{}), 9, 0), error);
}

TEST(Brute, KappaAtOrigin) {
    // kappa(0, 0) counts the arrangements of the type
    for (long r = 0; r <= 4; ++r) {
        std::map<ChainType, long> counts;
        for (const Arrangement& a : all_arrangements(r))
            counts[a.typ()]++;
        for (const ChainType& tau : enum_chain_types(r))
            EXPECT_EQ(brute_kappa(tau, 0, 0), Int(counts[tau])) << tau.str();
    }
}

TEST(Brute, ReductionDerivativeParitySmall) {
    // fast desk-scale version of the identity suite
    for (long r = 0; r <= 4; ++r)
        for (const ChainType& tau : enum_chain_types(r)) {
            ChainType red = tau.reduced();
            for (long n = 0; n <= 4; ++n)
                for (long k = 0; k <= n; ++k) {
                    EXPECT_EQ(brute_h(tau, n, k),
                              binomial(n + r, tau.m(1)) * brute_h(red, n, k));
                    if (tau.is_reduced()) {
                        Int rhs = 0;
                        for (const ChainType& omp : enum_chain_types(tau.degree()))
                            rhs += zeta_count(tau.derivative(), omp) *
                                   brute_kappa(omp, n, k);
                        EXPECT_EQ(brute_h(tau, n, k), rhs) << tau.str();
                    }
                    if (tau.rank < tau.degree()) {
                        EXPECT_EQ(brute_h(tau, n, k) % 2, Int(0));
                        EXPECT_EQ(brute_kappa(tau, n, k) % 2, Int(0));
                    }
                }
        }
}

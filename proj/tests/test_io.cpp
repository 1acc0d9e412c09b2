#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "charpoly/cache.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/stat_expr.hpp"

using namespace charpoly;

TEST(JsonIo, RationalsAndPartitions) {
    EXPECT_EQ(rat_to_json(Rat(Int(-2), Int(3))), json("-2/3"));
    EXPECT_EQ(rat_to_json(Rat(5)), json("5"));
    EXPECT_EQ(rat_from_json(json("-2/3")), Rat(Int(-2), Int(3)));
    Partition p{4, 2, 1};
    EXPECT_EQ(partition_from_json(partition_to_json(p)), p);
    EXPECT_EQ(partition_to_json(Partition{}), json::array());
}

TEST(JsonIo, PolynomialRoundTripAndOrder) {
    MultiPoly poly(nk_vars());
    poly.add_term({1, 1}, Rat(Int(-1), Int(2)));
    poly.add_term({0, 0}, 3);
    poly.add_term({2, 0}, -2);
    json j = multipoly_to_json(poly);
    EXPECT_EQ(multipoly_from_json(j), poly);
    // term order in the artifact is graded-lex, leading first
    EXPECT_EQ(j["terms"][0]["exps"], json::array({2, 0}));
    EXPECT_EQ(j["terms"][0]["coeff"], json("-2"));
    EXPECT_EQ(j["terms"][1]["exps"], json::array({1, 1}));
    EXPECT_EQ(j["terms"][2]["exps"], json::array({0, 0}));

    UniPoly u({Rat(1), Rat(Int(1), Int(3))});
    EXPECT_EQ(unipoly_from_json(unipoly_to_json(u)), u);

    ChainType tau(2, Partition{3, 1});
    json jt = chain_type_to_json(tau);
    EXPECT_EQ(chain_type_from_json(jt), tau);
}

TEST(JsonIo, AhatArtifactRoundTrip) {
    const AhatPair& p = ahat_pair(Partition{2});
    json j = ahat_to_json(p);
    AhatPair q = ahat_from_json(j);
    EXPECT_EQ(q.a0, p.a0);
    EXPECT_EQ(q.a1, p.a1);
    EXPECT_EQ(q.l0, p.l0);
    EXPECT_EQ(q.lead1, p.lead1);
    EXPECT_EQ(ahat_to_json(q), j);
}

TEST(Cache, StoreLoadAndByteStability) {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "charpoly_cache_test";
    std::filesystem::remove_all(dir);
    Cache cache(dir);
    json payload = ahat_to_json(ahat_pair(Partition{1, 1}));
    std::string key = ahat_cache_key(Partition{1, 1});
    EXPECT_FALSE(cache.load("ahat", key).has_value());
    cache.store("ahat", key, payload);
    auto loaded = cache.load("ahat", key);
    ASSERT_TRUE(loaded.has_value());
    EXPECT_EQ(*loaded, payload);
    // identical bytes on recomputation
    EXPECT_EQ(Cache::serialize("ahat", key, payload),
              Cache::serialize("ahat", key, ahat_to_json(ahat_pair(Partition{1, 1}))));
    // a different engine version must miss
    {
        std::ifstream in(cache.path_for("ahat", key));
        json entry;
        in >> entry;
        entry["engine_version"] = "other 9.9.9";
        std::ofstream out(cache.path_for("ahat", key));
        out << entry.dump(2) << "\n";
    }
    EXPECT_FALSE(cache.load("ahat", key).has_value());
    std::filesystem::remove_all(dir);
}

TEST(Cache, Keys) {
    EXPECT_EQ(ahat_cache_key(Partition{2, 1}), "lam2-1");
    EXPECT_EQ(ahat_cache_key(Partition{}), "lam0");
    EXPECT_EQ(ptau_cache_key(ChainType(0, Partition{2})), "nu0_mu2");
    EXPECT_EQ(ptau_cache_key(ChainType(3, Partition{})), "nu3_mu0");
}

TEST(StatExpr, ParsesGrammar) {
    auto vars = stat_vars(10);
    MultiPoly m1 = MultiPoly::variable(vars, "m1");
    MultiPoly m2 = MultiPoly::variable(vars, "m2");
    EXPECT_EQ(parse_statistic("m1^2+3*m2"), m1 * m1 + m2 * Rat(3));
    EXPECT_EQ(parse_statistic(" ( m1 - 1 ) * ( m1 + 1 ) "),
              m1 * m1 - MultiPoly::constant(vars, 1));
    EXPECT_EQ(parse_statistic("-m2^3"), -(m2 * m2 * m2));
    EXPECT_EQ(parse_statistic("2"), MultiPoly::constant(vars, 2));
    EXPECT_THROW(parse_statistic("m1 +"), error);
    EXPECT_THROW(parse_statistic("m11^2", 10), error);
    EXPECT_THROW(parse_statistic("q + 1"), error);
}

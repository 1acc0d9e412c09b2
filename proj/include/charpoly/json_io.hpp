#pragma once

#include <json.hpp>

#include "chains.hpp"
#include "multipoly.hpp"
#include "partitions.hpp"
#include "pipeline.hpp"
#include "positivity.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace charpoly {

using json = nlohmann::json;

// Rationals serialize as "p" or "p/q"; exponent vectors as integer arrays;
// term lists in graded-lex order (leading term first) -- byte-stable.

inline json rat_to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const json& j) { return Rat::from_string(j.get<std::string>()); }

inline json partition_to_json(const Partition& p) {
    json a = json::array();
    for (long v : p.parts())
        a.push_back(v);
    return a;
}
inline Partition partition_from_json(const json& j) {
    std::vector<long> parts;
    for (const auto& v : j)
        parts.push_back(v.get<long>());
    return Partition(std::move(parts));
}

inline json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coeff"] = rat_to_json(c);
        t["exps"] = e;
        terms.push_back(std::move(t));
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}
inline MultiPoly multipoly_from_json(const json& j) {
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exps").get<std::vector<int>>(), rat_from_json(t.at("coeff")));
    return p;
}

inline json unipoly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(rat_to_json(c));
    return json{{"coeffs", std::move(coeffs)}};
}
inline UniPoly unipoly_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.push_back(rat_from_json(c));
    return UniPoly(std::move(coeffs));
}

inline json chain_type_to_json(const ChainType& t) {
    return json{{"rank", t.rank}, {"mu", partition_to_json(t.mu)}};
}
inline ChainType chain_type_from_json(const json& j) {
    return ChainType(j.at("rank").get<long>(), partition_from_json(j.at("mu")));
}

inline json ahat_to_json(const AhatPair& p) {
    return json{{"lambda", partition_to_json(p.lambda)},
                {"l0", p.l0},
                {"l1", p.l1},
                {"a0_hat", multipoly_to_json(p.a0)},
                {"a1_hat", multipoly_to_json(p.a1)},
                {"verification",
                 json{{"grid_points", p.grid_points},
                      {"extra_points", p.extra_points},
                      {"leading_coeffs",
                       json::array({rat_to_json(p.lead0), rat_to_json(p.lead1)})}}}};
}
inline AhatPair ahat_from_json(const json& j) {
    AhatPair p;
    p.lambda = partition_from_json(j.at("lambda"));
    p.l0 = j.at("l0").get<long>();
    p.l1 = j.at("l1").get<long>();
    p.a0 = multipoly_from_json(j.at("a0_hat"));
    p.a1 = multipoly_from_json(j.at("a1_hat"));
    const auto& v = j.at("verification");
    p.grid_points = v.at("grid_points").get<long>();
    p.extra_points = v.at("extra_points").get<long>();
    p.lead0 = rat_from_json(v.at("leading_coeffs").at(0));
    p.lead1 = rat_from_json(v.at("leading_coeffs").at(1));
    return p;
}

inline json ptau_to_json(const ChainType& tau, const MultiPoly& p) {
    return json{{"tau", chain_type_to_json(tau)}, {"poly", multipoly_to_json(p)}};
}

inline json akpoly_to_json(const AkPoly& a) {
    return json{{"lambda", partition_to_json(a.lambda)},
                {"k", a.k},
                {"poly", unipoly_to_json(a.poly)}};
}

inline json certificate_to_json(const PositivityCertificate& c) {
    json j{{"lambda", partition_to_json(c.lambda)},
           {"status", c.certified ? "certified" : (c.counterexample ? "counterexample" : "failed")},
           {"t", c.t},
           {"branch", c.branch},
           {"t_dominance", c.t_dominance},
           {"t_js", c.t_js},
           {"finite_checks",
            json{{"diagonal", c.diagonal_checks}, {"ray", c.ray_checks}}},
           {"revalidation_points", c.revalidation_points}};
    if (c.counterexample)
        j["counterexample"] = json{{"n", c.counterexample->n},
                                   {"k", c.counterexample->k},
                                   {"value", rat_to_json(c.counterexample->value)}};
    if (!c.failure.empty())
        j["failure"] = c.failure;
    return j;
}

} // namespace charpoly

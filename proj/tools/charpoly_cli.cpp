// Command-line surface over the character-pattern engine: closed forms,
// exact evaluation, root counting, positivity certification, and the
// brute-force oracle, with JSON artifacts and an on-disk cache.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "charpoly/cache.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/oracle.hpp"
#include "charpoly/pipeline.hpp"
#include "charpoly/positivity.hpp"
#include "charpoly/ptau.hpp"
#include "charpoly/roots.hpp"
#include "charpoly/selftest.hpp"
#include "charpoly/stat_expr.hpp"

namespace {

using namespace charpoly;

struct Options {
    std::string cache_dir;
    int trunc = -1;
    std::string format = "table";
};

std::optional<Cache> open_cache(const Options& opt) {
    std::string dir = opt.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("CHARPOLY_CACHE"))
            dir = env;
    }
    if (dir.empty())
        return std::nullopt;
    return Cache(dir);
}

const AhatPair& cached_ahat(const Options& opt, const Partition& lambda) {
    auto cache = open_cache(opt);
    if (cache) {
        // a hit only skips recomputation when it decodes cleanly
        std::string key = ahat_cache_key(lambda);
        if (auto payload = cache->load("ahat", key)) {
            static std::map<std::vector<long>, AhatPair> loaded;
            auto [it, inserted] = loaded.emplace(lambda.parts(), ahat_from_json(*payload));
            return it->second;
        }
        const AhatPair& pair = ahat_pair(lambda);
        cache->store("ahat", key, ahat_to_json(pair), default_trunc(lambda));
        return pair;
    }
    return ahat_pair(lambda);
}

void emit(const Options& opt, const json& as_json, const std::string& as_table) {
    if (opt.format == "json")
        std::cout << as_json.dump(2) << "\n";
    else
        std::cout << as_table;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact engine for character-weighted increasing-pattern statistics"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--cache-dir", opt.cache_dir,
                   "artifact cache directory (env CHARPOLY_CACHE)");
    app.add_option("--trunc", opt.trunc, "series truncation order override");
    app.add_option("--format", opt.format, "output format: table|json")
        ->check(CLI::IsMember({"table", "json"}));

    std::string lambda_str, mu_str, stat_str, json_out;
    long n = 0, k = 0, j = 0, rank = 0, size = 1, kmax = 10;
    long lambda_max_size = 4, nmax = 8;
    bool count_roots = false, extended = false;

    auto* ahat_cmd = app.add_subcommand("ahat", "closed-form pair for lambda");
    ahat_cmd->add_option("--lambda", lambda_str, "partition, e.g. 2,1")->required();
    ahat_cmd->add_option("--json", json_out, "also write the JSON artifact here");

    auto* eval_cmd = app.add_subcommand("eval", "exact a(n, k)");
    eval_cmd->add_option("--lambda", lambda_str)->required();
    eval_cmd->add_option("--n", n)->required();
    eval_cmd->add_option("--k", k)->required();

    auto* ak_cmd = app.add_subcommand("akpoly", "polynomial in n for fixed k");
    ak_cmd->add_option("--lambda", lambda_str)->required();
    ak_cmd->add_option("--k", k)->required();
    ak_cmd->add_flag("--count-roots", count_roots, "count distinct real roots");

    auto* bj_cmd = app.add_subcommand("bj", "diagonal polynomial B_j in k");
    bj_cmd->add_option("--lambda", lambda_str)->required();
    bj_cmd->add_option("--j", j)->required();

    auto* pos_cmd = app.add_subcommand("positivity", "nonnegativity certificate");
    pos_cmd->add_option("--lambda", lambda_str)->required();

    auto* scan_cmd = app.add_subcommand("scan", "non-real root scan over lambda |- size");
    scan_cmd->add_option("--size", size)->required();
    scan_cmd->add_option("--kmax", kmax)->required();

    auto* exp_cmd = app.add_subcommand("expected", "expected value of a statistic");
    exp_cmd->add_option("--stat", stat_str, "e.g. \"m1^2+3*m2\"")->required();
    exp_cmd->add_option("--n", n)->required();
    exp_cmd->add_option("--k", k)->required();

    auto* oracle_cmd = app.add_subcommand("oracle-check", "closed forms vs S_n brute force");
    oracle_cmd->add_option("--lambda-max-size", lambda_max_size);
    oracle_cmd->add_option("--nmax", nmax);

    auto* ptau_cmd = app.add_subcommand("ptau", "generating-function polynomial P");
    ptau_cmd->add_option("--rank", rank)->required();
    ptau_cmd->add_option("--mu", mu_str, "chain partition, e.g. 2 or 2,1 (empty for none)");

    auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    self_cmd->add_flag("--extended", extended, "positivity up to |lambda| = 10");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();  // global flags may follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (ahat_cmd->parsed()) {
        Partition lam = Partition::parse(lambda_str);
        const AhatPair& p = cached_ahat(opt, lam);
        json artifact = ahat_to_json(p);
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            out << artifact.dump(2) << "\n";
        }
        std::string table = "lambda = " + lam.str() + "\n" +
                            "l0 = " + std::to_string(p.l0) +
                            ", l1 = " + std::to_string(p.l1) + "\n" +
                            "a0_hat = " + p.a0.str() + "\n" +
                            "a1_hat = " + p.a1.str() + "\n" +
                            "verified on " + std::to_string(p.grid_points) +
                            " grid + " + std::to_string(p.extra_points) +
                            " extra points\n";
        emit(opt, artifact, table);
    } else if (eval_cmd->parsed()) {
        Partition lam = Partition::parse(lambda_str);
        Rat v = (opt.trunc > 0 && !(lam.size() > 0 && k >= 1 && n >= k + lam.size() - 1))
                    ? a_exact(lam, n, k, opt.trunc).total()
                    : a_eval(lam, n, k);
        emit(opt,
             json{{"lambda", partition_to_json(lam)}, {"n", n}, {"k", k},
                  {"value", rat_to_json(v)}},
             v.str() + "\n");
    } else if (ak_cmd->parsed()) {
        Partition lam = Partition::parse(lambda_str);
        AkPoly A = ak_poly(lam, k);
        json out = akpoly_to_json(A);
        if (auto cache = open_cache(opt))
            cache->store("akpoly", ahat_cache_key(lam) + "_k" + std::to_string(k), out);
        std::string table = "A(n) = " + A.poly.str("n") + "\n" +
                            "degree = " + std::to_string(A.poly.degree()) + "\n";
        if (count_roots) {
            long roots = A.poly.is_zero() ? 0 : sturm_count_real_line(A.poly);
            out["real_roots"] = roots;
            table += "real roots = " + std::to_string(roots) + "\n";
        }
        emit(opt, out, table);
    } else if (bj_cmd->parsed()) {
        Partition lam = Partition::parse(lambda_str);
        BjPoly B = bj_poly(lam, j);
        emit(opt,
             json{{"lambda", partition_to_json(lam)}, {"j", j},
                  {"poly", unipoly_to_json(B.poly)}},
             "B_j(k) = " + B.poly.str("k") + "\n");
    } else if (pos_cmd->parsed()) {
        Partition lam = Partition::parse(lambda_str);
        PositivityCertificate cert = positivity_certify(lam);
        auto cache = open_cache(opt);
        if (cache)
            cache->store("cert", ahat_cache_key(lam), certificate_to_json(cert));
        std::string table =
            "lambda = " + lam.str() + "\n" +
            "status = " + std::string(cert.certified ? "certified" : "NOT certified") +
            "\n" + "t = " + std::to_string(cert.t) + " (" + cert.branch +
            " dominance)\n";
        if (cert.counterexample)
            table += "counterexample at n=" + std::to_string(cert.counterexample->n) +
                     " k=" + std::to_string(cert.counterexample->k) + "\n";
        emit(opt, certificate_to_json(cert), table);
        if (!cert.certified) {
            std::cerr << certificate_to_json(cert).dump() << "\n";
            return 1;
        }
    } else if (scan_cmd->parsed()) {
        std::vector<ScanRow> rows = scan_nonreal(size, kmax);
        json out = json::array();
        std::string table = "lambda      k  deg  real  pairs\n";
        std::map<std::string, long> first_nonreal;
        for (const ScanRow& r : rows) {
            json row{{"lambda", partition_to_json(r.lambda)},
                     {"k", r.k},
                     {"degree", r.degree},
                     {"real_roots", r.real_roots},
                     {"nonreal_pairs", r.nonreal_pairs},
                     {"zero", r.zero_poly}};
            if (r.improved_bound)
                row["improved_pair_bound"] = *r.improved_bound;
            out.push_back(std::move(row));
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%-9s %4ld %4ld %5ld %6ld%s\n",
                          r.lambda.str().c_str(), r.k, r.degree, r.real_roots,
                          r.nonreal_pairs, r.zero_poly ? "  (zero)" : "");
            table += buf;
            if (r.nonreal_pairs > 0 && !first_nonreal.count(r.lambda.str()))
                first_nonreal[r.lambda.str()] = r.k;
        }
        for (const auto& [lam, kk] : first_nonreal)
            table += "first non-real-rooted k for " + lam + ": " + std::to_string(kk) + "\n";
        emit(opt, out, table);
    } else if (exp_cmd->parsed()) {
        MultiPoly f = parse_statistic(stat_str);
        Rat v = expected_value(f, n, k);
        emit(opt,
             json{{"stat", stat_str}, {"n", n}, {"k", k}, {"value", rat_to_json(v)}},
             v.str() + "\n");
    } else if (oracle_cmd->parsed()) {
        long checked = 0;
        for (long s = 0; s <= lambda_max_size; ++s)
            for (const Partition& lam : all_partitions(s))
                for (long nn = 0; nn <= nmax; ++nn)
                    for (long kk = 0; kk <= nn; ++kk) {
                        Rat exact = a_exact(lam, nn, kk, opt.trunc).total();
                        Rat brute = brute_a(lam, nn, kk, true, nmax > 9);
                        if (exact != brute) {
                            std::cerr << json{{"error", "oracle mismatch"},
                                              {"lambda", partition_to_json(lam)},
                                              {"n", nn},
                                              {"k", kk},
                                              {"exact", rat_to_json(exact)},
                                              {"brute", rat_to_json(brute)}}
                                             .dump()
                                      << "\n";
                            return 1;
                        }
                        ++checked;
                    }
        emit(opt, json{{"checked", checked}, {"status", "ok"}},
             "checked " + std::to_string(checked) + " points, all equal\n");
    } else if (ptau_cmd->parsed()) {
        ChainType tau(rank, Partition::parse(mu_str));
        auto cache = open_cache(opt);
        std::string key = ptau_cache_key(tau);
        if (cache) {
            if (auto payload = cache->load("ptau", key)) {
                emit(opt, *payload,
                     "P(z, w) = " + multipoly_from_json(payload->at("poly")).str() + "\n");
                return 0;
            }
        }
        const MultiPoly& P = p_tau(tau);
        json artifact = ptau_to_json(tau, P);
        if (cache)
            cache->store("ptau", key, artifact);
        emit(opt, artifact, "P(z, w) = " + P.str() + "\n");
    } else if (self_cmd->parsed()) {
        bool ok = selftest_main(std::cout, extended);
        return ok ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const charpoly::error& e) {
        std::cerr << charpoly::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << charpoly::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}

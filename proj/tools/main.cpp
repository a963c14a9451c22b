#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "chainloops/brill_noether.hpp"
#include "chainloops/io.hpp"
#include "chainloops/lattice_path.hpp"
#include "chainloops/oracle.hpp"

namespace {

using namespace chainloops;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_io = 2;
constexpr int exit_invariant = 3;

struct GlobalOptions {
    bool json_out = false;
    OracleConfig oracle;
};

std::string points_str(const std::vector<long long>& p) {
    std::string out = "(";
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j)
            out += ", ";
        out += std::to_string(p[j]);
    }
    return out + ")";
}

void warn_if_not_generic(const ChainGraph& graph) {
    if (!is_generic(graph))
        std::cerr << "warning: graph is not generic; lattice-path rank results would be"
                     " unreliable (this command does not use them)\n";
}

int run_check_generic(const GlobalOptions& opt, const ChainGraph& graph) {
    bool generic = is_generic(graph);
    if (opt.json_out)
        std::cout << json{{"command", "check-generic"},
                          {"genus", graph.genus()},
                          {"generic", generic}}
                         .dump()
                  << "\n";
    else
        std::cout << "genus " << graph.genus() << " chain: " << (generic ? "generic" : "not generic")
                  << "\n";
    return exit_ok;
}

int run_reduce(const GlobalOptions& opt, const ChainGraph& graph, const Divisor& D, int basepoint) {
    warn_if_not_generic(graph);
    Divisor R = reduce(graph, D, basepoint);
    if (opt.json_out)
        std::cout << json{{"command", "reduce"},
                          {"basepoint", basepoint},
                          {"degree", R.degree()},
                          {"input", io::divisor_to_json(D)},
                          {"reduced", io::divisor_to_json(R)}}
                         .dump()
                  << "\n";
    else
        std::cout << "v" << basepoint << "-reduced form: " << R.str() << "\n";
    return exit_ok;
}

int run_rank(const GlobalOptions& opt, const ChainGraph& graph, const Divisor& D,
             const std::string& mode) {
    json doc{{"command", "rank"}, {"degree", D.degree()}, {"mode", mode}};
    if (mode == "fast") {
        long long r = rank(graph, D);
        if (opt.json_out) {
            doc["rank"] = r;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "rank = " << r << "\n";
        }
        return exit_ok;
    }
    if (mode == "oracle") {
        warn_if_not_generic(graph);
        long long r = oracle_rank(graph, D, opt.oracle);
        if (opt.json_out) {
            doc["rank"] = r;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "rank = " << r << "\n";
        }
        return exit_ok;
    }
    long long fast = rank(graph, D);
    long long oracle = oracle_rank(graph, D, opt.oracle);
    bool agree = fast == oracle;
    if (opt.json_out) {
        doc["fast"] = fast;
        doc["oracle"] = oracle;
        doc["agree"] = agree;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "fast = " << fast << "\n"
                  << "oracle = " << oracle << "\n"
                  << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? exit_ok : exit_invariant;
}

int run_path(const GlobalOptions& opt, const ChainGraph& graph, const Divisor& D, int r) {
    Divisor R = reduce(graph, D, 0);
    LatticePath path = build_path(graph, to_reduced_data(graph, R), r);
    bool confined = true;
    for (const auto& p : path.points)
        confined = confined && in_chamber(p);
    if (opt.json_out) {
        std::cout << json{{"command", "path"},
                          {"r", r},
                          {"reduced", io::divisor_to_json(R)},
                          {"path", io::path_to_json(path)},
                          {"confined", confined}}
                         .dump()
                  << "\n";
        return exit_ok;
    }
    std::cout << "v0-reduced form: " << R.str() << "\n";
    std::cout << "p0 = " << points_str(path.points.front()) << "\n";
    for (std::size_t i = 0; i < path.steps.size(); ++i)
        std::cout << "step " << i + 1 << ": " << step_str(path.steps[i]) << " -> p" << i + 1
                  << " = " << points_str(path.points[i + 1]) << "\n";
    std::cout << "confined to the open chamber: " << (confined ? "yes" : "no") << " (rank "
              << (confined ? ">= " : "< ") << r << ")\n";
    return exit_ok;
}

int run_enumerate(const GlobalOptions& opt, const ChainGraph& graph, int r, int d) {
    BNParams params{graph.genus(), r, d};
    std::vector<Divisor> classes = enumerate_classes(graph, params);

    // Verify every class (in parallel when asked); any rank mismatch is
    // an internal failure, not a reportable result.
    std::vector<long long> ranks(classes.size(), -2);
    int threads = std::max(1, opt.oracle.threads);
    std::atomic<std::size_t> cursor{0};
    auto verify = [&] {
        for (;;) {
            std::size_t k = cursor.fetch_add(1);
            if (k >= classes.size())
                return;
            ranks[k] = rank(graph, classes[k]);
        }
    };
    if (threads <= 1 || classes.size() < 2) {
        verify();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(verify);
        for (std::thread& t : pool)
            t.join();
    }
    bool all_verified = true;
    for (long long got : ranks)
        all_verified = all_verified && got == r;

    if (opt.json_out) {
        std::vector<Tableau> tableaux;
        if (r >= 1)
            tableaux = enumerate_tableaux(params.g - params.d + params.r, params.r + 1);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            json line{{"index", k},
                      {"divisor", io::divisor_to_json(classes[k])},
                      {"rank", ranks[k]}};
            if (r >= 1) {
                line["tableau"] = io::tableau_to_json(tableaux[k]);
                line["path"] = io::path_to_json(tableau_to_path(params, tableaux[k]));
            }
            std::cout << line.dump() << "\n";
        }
    } else {
        for (std::size_t k = 0; k < classes.size(); ++k)
            std::cout << "class " << k + 1 << ": " << classes[k].str() << " (rank " << ranks[k]
                      << ")\n";
        std::cout << classes.size() << " classes of degree " << d << " and rank " << r << "\n";
    }
    if (!all_verified)
        throw InvariantError("an enumerated class failed rank verification");
    return exit_ok;
}

int run_count(const GlobalOptions& opt, const BNParams& params) {
    Integer value = lambda(params);
    if (opt.json_out)
        std::cout << json{{"command", "count"},
                          {"g", params.g},
                          {"r", params.r},
                          {"d", params.d},
                          {"lambda", value.str()}}
                         .dump()
                  << "\n";
    else
        std::cout << value.str() << "\n";
    return exit_ok;
}

int run_exists(const GlobalOptions& opt, const BNParams& params) {
    bool exists = path_exists(params);
    long long rho_value = rho(params);
    if (opt.json_out)
        std::cout << json{{"command", "exists"},
                          {"g", params.g},
                          {"r", params.r},
                          {"d", params.d},
                          {"rho", rho_value},
                          {"exists", exists}}
                         .dump()
                  << "\n";
    else
        std::cout << (exists ? "exists" : "empty") << " (rho = " << rho_value << ")\n";
    return exit_ok;
}

int run_dim(const GlobalOptions& opt, const BNParams& params) {
    long long rho_value = rho(params);
    bool exists = path_exists(params);
    json doc{{"command", "dim"}, {"g", params.g},       {"r", params.r},
             {"d", params.d},    {"rho", rho_value},    {"exists", exists}};
    if (!exists) {
        if (opt.json_out)
            std::cout << doc.dump() << "\n";
        else
            std::cout << "empty (rho = " << rho_value << ")\n";
        return exit_ok;
    }
    long long dim = max_lingering(params);
    if (opt.json_out) {
        doc["dim"] = dim;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "dim = " << dim << " (rho = " << rho_value << ")\n";
    }
    return exit_ok;
}

int run_max_d0(const GlobalOptions& opt, const BNParams& params) {
    long long rho_value = rho(params);
    bool exists = path_exists(params);
    json doc{{"command", "max-d0"}, {"g", params.g},    {"r", params.r},
             {"d", params.d},       {"rho", rho_value}, {"exists", exists}};
    if (!exists) {
        if (opt.json_out)
            std::cout << doc.dump() << "\n";
        else
            std::cout << "empty (rho = " << rho_value << ")\n";
        return exit_ok;
    }
    long long value = max_d0(params);
    if (opt.json_out) {
        doc["max_d0"] = value;
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "max d0 = " << value << " (r + rho = " << params.r + rho_value << ")\n";
    }
    return exit_ok;
}

int run_witness(const GlobalOptions& opt, const ChainGraph& graph, const Divisor& D, int r) {
    Divisor E = noether_witness(graph, D, r);
    Divisor R = reduce(graph, D - E, 0);
    if (opt.json_out)
        std::cout << json{{"command", "witness"},
                          {"r", r},
                          {"witness", io::divisor_to_json(E)},
                          {"reduced_difference", io::divisor_to_json(R)},
                          {"difference_effective", R.is_effective()}}
                         .dump()
                  << "\n";
    else
        std::cout << "witness: E = " << E.str() << "\n"
                  << "reduced D - E: " << R.str() << " (not effective; no response wins)\n";
    return exit_ok;
}

int run_verify_rr(const GlobalOptions& opt, const ChainGraph& graph, const Divisor& D) {
    warn_if_not_generic(graph);
    Divisor K = canonical_divisor(graph);
    long long rank_d = oracle_rank(graph, D, opt.oracle);
    long long rank_kd = oracle_rank(graph, K - D, opt.oracle);
    long long deg = D.degree();
    bool holds = rank_d - rank_kd == deg + 1 - graph.genus();
    if (opt.json_out)
        std::cout << json{{"command", "verify-rr"},
                          {"degree", deg},
                          {"rank", rank_d},
                          {"rank_K_minus_D", rank_kd},
                          {"holds", holds}}
                         .dump()
                  << "\n";
    else
        std::cout << "rank(D) = " << rank_d << ", rank(K - D) = " << rank_kd << ", deg(D) = "
                  << deg << "\n"
                  << "rank(D) - rank(K - D) = deg(D) + 1 - g: " << (holds ? "holds" : "VIOLATED")
                  << "\n";
    if (!holds)
        throw InvariantError("Riemann-Roch identity violated; the oracle is buggy");
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor theory on a generic chain of loops: exact chip-firing reductions,"
                 " lattice-path ranks, and class enumeration"};
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_flag("--json", opt.json_out, "emit machine-readable JSON instead of text");
    app.add_option("--seed", opt.oracle.seed, "seed for randomized helpers");
    app.add_option("--budget", opt.oracle.reduction_budget,
                   "max reductions an oracle sweep may perform");
    app.add_option("--parallel", opt.oracle.threads, "worker threads for sweeps and verification");

    std::string graph_path;
    std::string divisor_path;
    std::string mode = "fast";
    int basepoint = 0;
    int r = 1;
    BNParams params;

    auto* check_generic = app.add_subcommand("check-generic", "test the genericity condition");
    check_generic->add_option("--graph", graph_path, "graph JSON file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "compute the basepoint-reduced form");
    reduce_cmd->add_option("--graph", graph_path)->required();
    reduce_cmd->add_option("--divisor", divisor_path)->required();
    reduce_cmd->add_option("--basepoint", basepoint, "basepoint vertex index (default v0)");

    auto* rank_cmd = app.add_subcommand("rank", "rank of a divisor");
    rank_cmd->add_option("--graph", graph_path)->required();
    rank_cmd->add_option("--divisor", divisor_path)->required();
    rank_cmd->add_option("--mode", mode, "fast | oracle | both")
        ->check(CLI::IsMember({"fast", "oracle", "both"}));

    auto* path_cmd = app.add_subcommand("path", "lingering lattice path of a divisor");
    path_cmd->add_option("--graph", graph_path)->required();
    path_cmd->add_option("--divisor", divisor_path)->required();
    path_cmd->add_option("--r", r, "path dimension")->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all rank-r degree-d classes (rho = 0)");
    enumerate_cmd->add_option("--graph", graph_path)->required();
    enumerate_cmd->add_option("--r", params.r)->required();
    enumerate_cmd->add_option("--d", params.d)->required();

    auto* count_cmd = app.add_subcommand("count", "number of rank-r degree-d classes (rho = 0)");
    count_cmd->add_option("--g", params.g)->required();
    count_cmd->add_option("--r", params.r)->required();
    count_cmd->add_option("--d", params.d)->required();

    auto* dim_cmd = app.add_subcommand("dim", "dimension of the space of rank-r degree-d classes");
    dim_cmd->add_option("--g", params.g)->required();
    dim_cmd->add_option("--r", params.r)->required();
    dim_cmd->add_option("--d", params.d)->required();

    auto* exists_cmd = app.add_subcommand("exists", "whether any rank-r degree-d class exists");
    exists_cmd->add_option("--g", params.g)->required();
    exists_cmd->add_option("--r", params.r)->required();
    exists_cmd->add_option("--d", params.d)->required();

    auto* max_d0_cmd = app.add_subcommand("max-d0", "largest v0-coefficient among rank-r classes");
    max_d0_cmd->add_option("--g", params.g)->required();
    max_d0_cmd->add_option("--r", params.r)->required();
    max_d0_cmd->add_option("--d", params.d)->required();

    auto* witness_cmd = app.add_subcommand("witness", "a degree-r challenge defeating a low-rank divisor");
    witness_cmd->add_option("--graph", graph_path)->required();
    witness_cmd->add_option("--divisor", divisor_path)->required();
    witness_cmd->add_option("--r", r, "rank threshold the divisor fails")->required();

    auto* verify_rr_cmd = app.add_subcommand("verify-rr", "check the Riemann-Roch identity");
    verify_rr_cmd->add_option("--graph", graph_path)->required();
    verify_rr_cmd->add_option("--divisor", divisor_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(count_cmd))
            return run_count(opt, params);
        if (app.got_subcommand(dim_cmd))
            return run_dim(opt, params);
        if (app.got_subcommand(exists_cmd))
            return run_exists(opt, params);
        if (app.got_subcommand(max_d0_cmd))
            return run_max_d0(opt, params);

        ChainGraph graph = chainloops::io::load_graph(graph_path);
        if (app.got_subcommand(check_generic))
            return run_check_generic(opt, graph);
        if (app.got_subcommand(enumerate_cmd)) {
            params.g = graph.genus();
            return run_enumerate(opt, graph, params.r, params.d);
        }

        Divisor D = chainloops::io::load_divisor(divisor_path, graph);
        if (app.got_subcommand(reduce_cmd))
            return run_reduce(opt, graph, D, basepoint);
        if (app.got_subcommand(rank_cmd))
            return run_rank(opt, graph, D, mode);
        if (app.got_subcommand(path_cmd))
            return run_path(opt, graph, D, r);
        if (app.got_subcommand(witness_cmd))
            return run_witness(opt, graph, D, r);
        if (app.got_subcommand(verify_rr_cmd))
            return run_verify_rr(opt, graph, D);
        std::cerr << "error: no subcommand\n";
        return exit_domain;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_io;
    } catch (const InvariantError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_invariant;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_domain;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return exit_invariant;
    }
}

// twoclub: command-line front end for the CLIQUE -> 2-CLUB gadget toolkit.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "twoclub/cluster_distance.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/graph_io.hpp"
#include "twoclub/harness.hpp"
#include "twoclub/reduction.hpp"
#include "twoclub/report.hpp"
#include "twoclub/solvers.hpp"

namespace {

using namespace twoclub;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string in;
    std::string out;
    std::string format = "dimacs";
    std::string json;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    bool guard_override = false;
    bool no_timing = false;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--in", c.in, "Input graph (DIMACS or edge list, sniffed)");
    cmd->add_option("--out", c.out, "Output graph path");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"dimacs", "edgelist"}));
    cmd->add_option("--json", c.json, "Write a JSON report here");
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Seed for random corpora");
    cmd->add_flag("--guard-override", c.guard_override, "Run past the size guards");
    cmd->add_flag("--no-timing", c.no_timing, "Write elapsed_ms as 0 for reproducible reports");
}

Graph load_input(const Common &c) {
    if (c.in.empty()) {
        throw Error("--in is required");
    }
    return read_graph_file(c.in);
}

void write_json(const Common &c, const std::string &command, const nlohmann::json &rows,
                const std::vector<VertexList> &certificates, const Stats &stats) {
    if (c.json.empty()) {
        return;
    }
    std::ofstream out(c.json, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + c.json);
    }
    out << make_report(command, rows, certificates, stats, !c.no_timing).dump(2) << '\n';
}

std::string join(const VertexList &vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out << (i ? " " : "") << vs[i];
    }
    return out.str();
}

Stats stats_of(const SolveResult &r) { return {r.nodes_explored, r.elapsed}; }

nlohmann::json solve_row(const SolveResult &r) {
    return nlohmann::json::array({{{"best_size", r.best_size}, {"best_set", r.best_set}}});
}

int cmd_reduce(const Common &c, const std::string &roles_path) {
    if (c.out.empty()) {
        throw Error("--out is required");
    }
    const ReducedInstance inst = reduce(load_input(c));
    write_graph_file(c.out, inst.graph, parse_format_name(c.format));
    if (!roles_path.empty()) {
        std::ofstream roles(roles_path, std::ios::binary);
        if (!roles) {
            throw Error("cannot write " + roles_path);
        }
        roles << emit_roles(inst.layout);
    }
    std::cout << "gadget: " << inst.graph.num_vertices() << " vertices, " << inst.graph.num_edges() << " edges\n";
    return kExitOk;
}

int cmd_solve_clique(const Common &c) {
    const SolveResult r = max_clique(load_input(c));
    std::cout << "max clique size " << r.best_size << ": " << join(r.best_set) << '\n';
    write_json(c, "solve-clique", solve_row(r), {}, stats_of(r));
    return kExitOk;
}

int cmd_solve_club(const Common &c, std::uint32_t s, const std::string &engine) {
    const Graph g = load_input(c);
    const SolveResult r = parse_engine_name(engine) == Engine::Brute ? brute_force_max_s_club(g, s) : max_s_club(g, s);
    std::cout << "max " << s << "-club size " << r.best_size << ": " << join(r.best_set) << '\n';
    write_json(c, "solve-2club", solve_row(r), {}, stats_of(r));
    return kExitOk;
}

int cmd_verify(const Common &c, std::int64_t k) {
    const VerifyReport r = run_verify(load_input(c), k);
    std::cout << "n=" << r.n << " k=" << r.k << " omega=" << r.omega << " target=" << r.target
              << " clique_yes=" << r.clique_yes << " club_yes=" << r.club_yes << " forward_ok=" << r.forward_ok
              << " certificate_ok=" << r.certificate_ok << (r.ok() ? " OK" : " FAILED") << '\n';
    write_json(c, "verify", nlohmann::json::array({to_json(r)}), {r.certificate}, r.stats);
    return r.ok() ? kExitOk : kExitFailed;
}

int cmd_sweep(const Common &c, std::size_t n, SweepOptions options, const std::string &engine) {
    options.engine = parse_engine_name(engine);
    options.threads = c.threads;
    options.guard_override = c.guard_override;
    const SweepReport report = run_equivalence_sweep(n, options);
    nlohmann::json rows = nlohmann::json::array();
    std::size_t failed = 0;
    for (const EquivalenceRow &row : report.rows) {
        rows.push_back(to_json(row));
        if (!row.agree || !row.consistent) {
            ++failed;
            std::cout << "MISMATCH h_id=" << row.h_id << " k=" << row.k << " omega=" << row.omega
                      << " target=" << row.target << " max_2club=" << row.max_2club << '\n';
        }
    }
    std::cout << report.rows.size() << " rows, " << failed << " failed\n";
    write_json(c, "sweep", rows, {}, report.stats);
    return report.ok() ? kExitOk : kExitFailed;
}

int cmd_distance(const Common &c, std::uint32_t s, std::size_t d_max) {
    const Graph g = load_input(c);
    const auto start = std::chrono::steady_clock::now();
    const auto cert = min_deletion_to_s_club_cluster(g, s, d_max);
    const Stats stats{0, std::chrono::steady_clock::now() - start};
    if (!cert) {
        std::cout << "no deletion set of size <= " << d_max << '\n';
        write_json(c, "distance", nlohmann::json::array({{{"distance_gt", d_max}}}), {}, stats);
        return kExitOk;
    }
    const bool ok = verify_deletion(g, cert->deleted, s);
    std::cout << "distance " << cert->deleted.size() << ": delete {" << join(cert->deleted) << "}"
              << (ok ? "" : " (certificate FAILED to verify)") << '\n';
    write_json(c, "distance", nlohmann::json::array({{{"distance", cert->deleted.size()}, {"verified", ok}}}),
               {cert->deleted}, stats);
    return ok ? kExitOk : kExitFailed;
}

int cmd_oracle_check(const Common &c, std::size_t exhaustive_n, std::size_t count, std::size_t min_n,
                     std::size_t max_n, const std::vector<std::uint32_t> &s_values) {
    const OracleCheckReport r = exhaustive_n > 0
                                    ? run_oracle_check_exhaustive(exhaustive_n, s_values, c.threads)
                                    : run_oracle_check_random(count, min_n, max_n, c.seed, s_values, c.threads);
    for (const std::string &f : r.failures) {
        std::cout << "MISMATCH " << f << '\n';
    }
    std::cout << r.graphs << " graphs, " << r.comparisons << " comparisons, " << r.mismatches << " mismatches\n";
    write_json(c, "oracle-check", nlohmann::json::array({to_json(r)}), {}, r.stats);
    return r.mismatches == 0 ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact solvers and checks for the CLIQUE to 2-CLUB gadget"};
    app.require_subcommand(1);

    Common common;
    std::string roles_path;
    std::uint32_t s = 2;
    std::string engine = "branching";
    std::int64_t k = 0;
    std::size_t sweep_n = 2;
    SweepOptions sweep;
    std::size_t d_max = 2;
    std::size_t exhaustive_n = 0;
    std::size_t count = 100;
    std::size_t min_n = 8;
    std::size_t max_n = 16;
    std::vector<std::uint32_t> s_values{1, 2, 3};

    auto *reduce_cmd = app.add_subcommand("reduce", "Build the 2-club gadget of a graph");
    add_common(reduce_cmd, common);
    reduce_cmd->add_option("--roles", roles_path, "Write the vertex role sidecar here");

    auto *clique_cmd = app.add_subcommand("solve-clique", "Maximum clique");
    add_common(clique_cmd, common);

    auto *club_cmd = app.add_subcommand("solve-2club", "Maximum s-club (s = 2 by default)");
    add_common(club_cmd, common);
    club_cmd->add_option("--s", s, "Diameter bound")->check(CLI::PositiveNumber);
    club_cmd->add_option("--engine", engine)->check(CLI::IsMember({"branching", "brute"}));

    auto *verify_cmd = app.add_subcommand("verify", "Check forward map, certificate and decision for (H, k)");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--k", k, "Clique size")->required();

    auto *sweep_cmd = app.add_subcommand("sweep", "Check the equivalence on every labeled H with n vertices");
    add_common(sweep_cmd, common);
    sweep_cmd->add_option("--n", sweep_n, "Vertices of H")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--k-min", sweep.k_min, "Smallest k");
    sweep_cmd->add_option("--k-max", sweep.k_max, "Largest k (default n)");
    sweep_cmd->add_option("--engine", engine)->check(CLI::IsMember({"branching", "brute"}));
    sweep_cmd->add_option("--target-offset", sweep.target_offset)->group("");

    auto *distance_cmd = app.add_subcommand("distance", "Vertex-deletion distance to s-club cluster graphs");
    add_common(distance_cmd, common);
    distance_cmd->add_option("--s", s, "Diameter bound")->check(CLI::PositiveNumber);
    distance_cmd->add_option("--dmax", d_max, "Deletion budget");

    auto *oracle_cmd = app.add_subcommand("oracle-check", "Compare branching solvers with brute force");
    add_common(oracle_cmd, common);
    oracle_cmd->add_option("--exhaustive", exhaustive_n, "Check every labeled graph on this many vertices");
    oracle_cmd->add_option("--count", count, "Random graphs");
    oracle_cmd->add_option("--min-n", min_n);
    oracle_cmd->add_option("--max-n", max_n);
    oracle_cmd->add_option("--s", s_values, "Values of s")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reduce_cmd->parsed()) {
            return cmd_reduce(common, roles_path);
        }
        if (clique_cmd->parsed()) {
            return cmd_solve_clique(common);
        }
        if (club_cmd->parsed()) {
            return cmd_solve_club(common, s, engine);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(common, k);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(common, sweep_n, sweep, engine);
        }
        if (distance_cmd->parsed()) {
            return cmd_distance(common, s, d_max);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle_check(common, exhaustive_n, count, min_n, max_n, s_values);
        }
    } catch (const twoclub::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

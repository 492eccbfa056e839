#include "twoclub/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "twoclub/cluster_distance.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/reduction.hpp"
#include "twoclub/solvers.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    workers.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct GraphCheck {
    std::uint64_t nodes = 0;
    std::size_t comparisons = 0;
    std::vector<std::string> failures;
};

GraphCheck check_against_oracles(const Graph &g, const std::vector<std::uint32_t> &s_values,
                                 const std::string &label) {
    GraphCheck out;
    auto mismatch = [&](const std::string &what, std::size_t got, std::size_t want) {
        std::ostringstream msg;
        msg << label << ": " << what << " = " << got << ", oracle = " << want;
        out.failures.push_back(msg.str());
    };
    for (std::uint32_t s : s_values) {
        SolveResult fast = max_s_club(g, s);
        SolveResult slow = brute_force_max_s_club(g, s);
        out.nodes += fast.nodes_explored;
        ++out.comparisons;
        if (fast.best_size != slow.best_size) {
            mismatch("max_s_club(s=" + std::to_string(s) + ")", fast.best_size, slow.best_size);
        }
        if (s == 1) {
            SolveResult clique = max_clique(g);
            SolveResult clique_oracle = brute_force_max_clique(g);
            out.nodes += clique.nodes_explored;
            out.comparisons += 2;
            if (clique.best_size != clique_oracle.best_size) {
                mismatch("max_clique", clique.best_size, clique_oracle.best_size);
            }
            if (clique.best_size != fast.best_size) {
                mismatch("max_s_club(s=1) vs max_clique", fast.best_size, clique.best_size);
            }
        }
    }
    return out;
}

OracleCheckReport collect(std::vector<GraphCheck> &checks, Clock::time_point start) {
    constexpr std::size_t kMaxReported = 20;
    OracleCheckReport report;
    report.graphs = checks.size();
    for (GraphCheck &check : checks) {
        report.stats.nodes_explored += check.nodes;
        report.comparisons += check.comparisons;
        report.mismatches += check.failures.size();
        for (std::string &f : check.failures) {
            if (report.failures.size() < kMaxReported) {
                report.failures.push_back(std::move(f));
            }
        }
    }
    report.stats.elapsed = Clock::now() - start;
    return report;
}

} // namespace

Engine parse_engine_name(const std::string &name) {
    if (name == "branching") {
        return Engine::Branching;
    }
    if (name == "brute") {
        return Engine::Brute;
    }
    throw Error("unknown engine '" + name + "'");
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    if (pair_count(n) > 63) {
        throw TooLarge("edge masks are limited to graphs with at most 11 vertices");
    }
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1u) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

std::uint64_t mask_of(const Graph &h) {
    const std::size_t n = h.num_vertices();
    if (pair_count(n) > 63) {
        throw TooLarge("edge masks are limited to graphs with at most 11 vertices");
    }
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
            if (h.adjacent(i, j)) {
                mask |= std::uint64_t{1} << bit;
            }
        }
    }
    return mask;
}

bool SweepReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const EquivalenceRow &r) { return r.agree && r.consistent; });
}

SweepReport run_equivalence_sweep(std::size_t n, const SweepOptions &options) {
    if (n == 0) {
        throw EmptyGraph("sweep needs n >= 1");
    }
    const std::size_t guard = options.engine == Engine::Brute ? kSweepGuardBrute : kSweepGuardBranching;
    if (n > guard && !options.guard_override) {
        throw TooLarge("sweep with n = " + std::to_string(n) + " exceeds the engine guard of " +
                       std::to_string(guard) + "; pass the guard override to run it anyway");
    }
    const std::int64_t k_max = options.k_max == 0 ? static_cast<std::int64_t>(n) : options.k_max;
    const std::size_t num_graphs = std::size_t{1} << pair_count(n);
    const auto start = Clock::now();

    std::vector<std::vector<EquivalenceRow>> per_graph(num_graphs);
    std::vector<std::uint64_t> nodes(num_graphs, 0);

    parallel_for(num_graphs, options.threads, [&](std::size_t h_id) {
        const Graph h = graph_from_mask(n, h_id);
        const SolveResult clique = max_clique(h);
        const ReducedInstance inst = reduce(h);
        const SolveResult club = options.engine == Engine::Brute ? brute_force_max_s_club(inst.graph, 2)
                                                                 : max_s_club(inst.graph, 2);
        nodes[h_id] = clique.nodes_explored + club.nodes_explored;

        for (std::int64_t k = options.k_min; k <= k_max; ++k) {
            EquivalenceRow row;
            row.h_id = h_id;
            row.n = n;
            row.k = k;
            row.omega = clique.best_size;
            row.max_2club = club.best_size;
            row.formula_max = target_size(n, clique.best_size);
            if (k > 0) {
                row.target = static_cast<std::uint64_t>(
                    static_cast<std::int64_t>(target_size_unchecked(n, k)) + options.target_offset);
            }
            bool decided = club.best_size >= row.target;
            if (k <= 0) {
                row.clique_yes = true;
                row.club_yes = true;
            } else {
                row.clique_yes = clique.best_size >= static_cast<std::size_t>(k);
                row.club_yes = decided;
                if (options.engine == Engine::Branching) {
                    row.club_yes = has_s_club_of_size(inst.graph, 2, row.target);
                }
            }
            row.agree = row.clique_yes == row.club_yes;
            row.consistent = row.max_2club == row.formula_max && (k <= 0 || row.club_yes == decided);
            per_graph[h_id].push_back(row);
        }
    });

    SweepReport report;
    for (std::size_t h_id = 0; h_id < num_graphs; ++h_id) {
        report.rows.insert(report.rows.end(), per_graph[h_id].begin(), per_graph[h_id].end());
        report.stats.nodes_explored += nodes[h_id];
    }
    report.stats.elapsed = Clock::now() - start;
    return report;
}

VerifyReport run_verify(const Graph &h, std::int64_t k) {
    const auto start = Clock::now();
    VerifyReport report;
    report.n = h.num_vertices();
    report.k = k;

    const SolveResult clique = max_clique(h);
    const ReducedInstance inst = reduce(h);
    report.omega = clique.best_size;
    report.clique = clique.best_set;
    report.stats.nodes_explored = clique.nodes_explored;

    report.certificate = {inst.layout.special_a(), inst.layout.special_b()};
    report.certificate_ok = verify_deletion(inst.graph, report.certificate, 2);

    if (k <= 0) {
        report.target = 0;
        report.clique_yes = true;
        report.club_yes = true;
    } else {
        report.target = target_size_unchecked(report.n, k);
        report.clique_yes = clique.best_size >= static_cast<std::size_t>(k);
        if (report.clique_yes) {
            VertexList subset(clique.best_set.begin(), clique.best_set.begin() + k);
            report.forward_set = forward_map(inst, subset);
            report.forward_ok =
                report.forward_set.size() == report.target && is_s_club(inst.graph, report.forward_set, 2);
        }
        report.club_yes = has_s_club_of_size(inst.graph, 2, report.target);
    }
    report.agree = report.clique_yes == report.club_yes;
    report.stats.elapsed = Clock::now() - start;
    return report;
}

OracleCheckReport run_oracle_check_exhaustive(std::size_t n, const std::vector<std::uint32_t> &s_values,
                                              unsigned threads) {
    if (n == 0) {
        throw EmptyGraph("oracle check needs n >= 1");
    }
    if (pair_count(n) > 24) {
        throw TooLarge("exhaustive oracle check is limited to n <= 7");
    }
    const auto start = Clock::now();
    std::vector<GraphCheck> checks(std::size_t{1} << pair_count(n));
    parallel_for(checks.size(), threads, [&](std::size_t mask) {
        checks[mask] = check_against_oracles(graph_from_mask(n, mask), s_values,
                                             "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    });
    return collect(checks, start);
}

Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

OracleCheckReport run_oracle_check_random(std::size_t count, std::size_t min_n, std::size_t max_n,
                                          std::uint64_t seed, const std::vector<std::uint32_t> &s_values,
                                          unsigned threads) {
    if (min_n == 0 || min_n > max_n) {
        throw Error("need 1 <= min_n <= max_n");
    }
    const auto start = Clock::now();
    std::vector<GraphCheck> checks(count);
    parallel_for(count, threads, [&](std::size_t i) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
        const double density = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
        const Graph g = random_graph(n, density, rng());
        checks[i] = check_against_oracles(g, s_values, "random #" + std::to_string(i) + " n=" + std::to_string(n));
    });
    return collect(checks, start);
}

} // namespace twoclub

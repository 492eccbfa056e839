#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "twoclub/graph.hpp"

namespace twoclub {

enum class Engine { Branching, Brute };

Engine parse_engine_name(const std::string &name);

/// Labeled graph on n vertices whose edge set is the bitmask `mask` over
/// the pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in that order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t mask_of(const Graph &h);

struct EquivalenceRow {
    std::uint64_t h_id = 0;
    std::size_t n = 0;
    std::int64_t k = 0;
    std::size_t omega = 0;
    std::uint64_t target = 0;
    std::size_t max_2club = 0;
    bool clique_yes = false;
    bool club_yes = false;
    bool agree = false;
    /// target_size(n, omega); the optimum the construction predicts.
    std::uint64_t formula_max = 0;
    /// max_2club == formula_max, and the decision solve agreed with the
    /// optimum when the branching engine ran it.
    bool consistent = false;
};

struct SweepOptions {
    std::int64_t k_min = 1;
    /// 0 selects n.
    std::int64_t k_max = 0;
    Engine engine = Engine::Branching;
    unsigned threads = 1;
    bool guard_override = false;
    /// Added to every target; test hook for exercising failure reporting.
    std::int64_t target_offset = 0;
};

/// Largest n each engine accepts without guard_override.
inline constexpr std::size_t kSweepGuardBranching = 3;
inline constexpr std::size_t kSweepGuardBrute = 2;

struct Stats {
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SweepReport {
    std::vector<EquivalenceRow> rows;
    Stats stats;

    bool ok() const;
};

/// One row per labeled H on n vertices and k in range, sorted by (h_id, k).
/// Throws TooLarge past the engine guard unless overridden.
SweepReport run_equivalence_sweep(std::size_t n, const SweepOptions &options);

struct VerifyReport {
    std::size_t n = 0;
    std::int64_t k = 0;
    std::size_t omega = 0;
    VertexList clique;
    std::uint64_t target = 0;
    bool clique_yes = false;
    bool club_yes = false;
    /// forward_map of a k-subset of a maximum clique is a 2-club of exactly
    /// the target size (vacuous when no such clique exists).
    bool forward_ok = true;
    VertexList forward_set;
    /// {a, b} leaves a 2-club cluster graph.
    bool certificate_ok = false;
    VertexList certificate;
    bool agree = false;
    Stats stats;

    bool ok() const { return agree && forward_ok && certificate_ok; }
};

/// Checks the construction on one (H, k). k <= 0 is trivially yes on both
/// sides; k > n is no on the clique side and the 2-club side is checked
/// against the formula extended past n.
VerifyReport run_verify(const Graph &h, std::int64_t k);

struct OracleCheckReport {
    std::size_t graphs = 0;
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    /// Human-readable description of the first few mismatches.
    std::vector<std::string> failures;
    Stats stats;
};

/// Branching solvers against the exhaustive oracles on every labeled graph
/// with n vertices, for each s in s_values; s = 1 is also compared with
/// max_clique.
OracleCheckReport run_oracle_check_exhaustive(std::size_t n, const std::vector<std::uint32_t> &s_values,
                                              unsigned threads);

/// Same comparison on `count` random graphs with min_n..max_n vertices. The
/// corpus depends only on the seed.
OracleCheckReport run_oracle_check_random(std::size_t count, std::size_t min_n, std::size_t max_n,
                                          std::uint64_t seed, const std::vector<std::uint32_t> &s_values,
                                          unsigned threads);

Graph random_graph(std::size_t n, double density, std::uint64_t seed);

} // namespace twoclub

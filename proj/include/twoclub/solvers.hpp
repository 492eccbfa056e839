#pragma once

#include <chrono>
#include <cstdint>

#include "twoclub/graph.hpp"

namespace twoclub {

struct SolveResult {
    VertexList best_set;
    std::size_t best_size = 0;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Exact maximum clique: branch and bound over bitsets with a greedy
/// colouring bound. Throws EmptyGraph on a graph without vertices.
SolveResult max_clique(const Graph &h);

/// Exact maximum s-club.
///
/// Each node keeps a candidate set C and a set of vertices fixed into the
/// solution. Vertices farther than s from a fixed vertex inside G[C] are
/// dropped, since distances only grow as C shrinks. If G[C] is still not an
/// s-club, the lexicographically first pair at distance > s splits the node:
/// drop the first endpoint, or fix it and drop the second. Nodes with
/// |C| <= best are pruned. The incumbent starts from the largest closed
/// ball of radius floor(s/2) (a greedy clique when s = 1).
SolveResult max_s_club(const Graph &g, std::uint32_t s);

/// True iff some s-club has at least t vertices. Stops at the first one.
bool has_s_club_of_size(const Graph &g, std::uint32_t s, std::size_t t);

/// Vertex-count limit of the exhaustive oracles.
inline constexpr std::size_t kBruteForceLimit = 22;

/// Exhaustive subset scan; throws TooLarge above kBruteForceLimit vertices.
SolveResult brute_force_max_s_club(const Graph &g, std::uint32_t s);
SolveResult brute_force_max_clique(const Graph &h);

} // namespace twoclub

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace twoclub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Dense vertex set; one bit per vertex id.
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Shortest-path length, or unreachable. Unreachable orders after every
/// finite value.
class Distance {
public:
    static constexpr std::uint32_t kUnreachableValue = std::numeric_limits<std::uint32_t>::max();

    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t v) : value_(v) {}

    static constexpr Distance unreachable() { return Distance{}; }

    constexpr bool reachable() const { return value_ != kUnreachableValue; }
    constexpr std::uint32_t value() const { return value_; }

    constexpr auto operator<=>(const Distance &) const = default;

private:
    std::uint32_t value_ = kUnreachableValue;
};

/// Undirected simple graph over ids 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidVertex for ids >= n and InvalidEdge for self-loops.
    /// Duplicate and reversed edges collapse into one.
    Graph(std::size_t n_vertices, std::span<const Edge> edges);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    const Bitset &neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }

    /// Edges as (u, v) with u < v in ascending order.
    std::vector<Edge> edges() const;

    /// Bitset of size num_vertices() with every bit set.
    Bitset all_vertices() const { return Bitset(num_vertices()).set(); }

    bool operator==(const Graph &other) const { return adjacency_ == other.adjacency_; }

private:
    std::vector<Bitset> adjacency_;
    std::size_t num_edges_ = 0;
};

Graph build_graph(std::size_t n_vertices, std::span<const Edge> edges);

Bitset to_bitset(std::size_t n_vertices, std::span<const Vertex> vertices);
VertexList to_list(const Bitset &set);

std::vector<Distance> bfs_distances(const Graph &g, Vertex source);

/// Longest shortest path; unreachable when g is disconnected, 0 for K1.
/// Throws EmptyGraph on a graph without vertices.
Distance diameter(const Graph &g);

struct InducedSubgraph {
    Graph graph;
    /// new id -> old id; ascending, so new ids preserve the original order.
    VertexList to_original;
};

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);

/// True iff G[S] has diameter at most s. |S| <= 1 counts as an s-club; a
/// disconnected G[S] does not.
bool is_s_club(const Graph &g, std::span<const Vertex> vertices, std::uint32_t s);
bool is_s_club(const Graph &g, const Bitset &vertices, std::uint32_t s);

/// Vertices of `within` at distance <= radius from `source` inside G[within].
/// `source` must belong to `within`.
Bitset ball(const Graph &g, const Bitset &within, Vertex source, std::uint32_t radius);

/// Partition into maximal connected sets, ordered by smallest member; each
/// component is listed in ascending order.
std::vector<VertexList> connected_components(const Graph &g);

/// Components of G[within], same ordering rules.
std::vector<Bitset> connected_components(const Graph &g, const Bitset &within);

bool is_clique(const Graph &g, std::span<const Vertex> vertices);

} // namespace twoclub

#include "twoclub/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

void check_vertex(const Graph &g, Vertex v) {
    if (v >= g.num_vertices()) {
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(g.num_vertices()) + " vertices");
    }
}

} // namespace

Graph::Graph(std::size_t n_vertices, std::span<const Edge> edges)
    : adjacency_(n_vertices, Bitset(n_vertices)) {
    for (auto [u, v] : edges) {
        if (u >= n_vertices || v >= n_vertices) {
            throw InvalidVertex("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") has an endpoint >= " + std::to_string(n_vertices));
        }
        if (u == v) {
            throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        }
        if (!adjacency_[u].test(v)) {
            adjacency_[u].set(v);
            adjacency_[v].set(u);
            ++num_edges_;
        }
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u) {
        for (auto v = adjacency_[u].find_next(u); v != Bitset::npos; v = adjacency_[u].find_next(v)) {
            out.emplace_back(u, static_cast<Vertex>(v));
        }
    }
    return out;
}

Graph build_graph(std::size_t n_vertices, std::span<const Edge> edges) { return Graph(n_vertices, edges); }

Bitset to_bitset(std::size_t n_vertices, std::span<const Vertex> vertices) {
    Bitset out(n_vertices);
    for (Vertex v : vertices) {
        if (v >= n_vertices) {
            throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph with " +
                                std::to_string(n_vertices) + " vertices");
        }
        out.set(v);
    }
    return out;
}

VertexList to_list(const Bitset &set) {
    VertexList out;
    out.reserve(set.count());
    for (auto v = set.find_first(); v != Bitset::npos; v = set.find_next(v)) {
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::vector<Distance> bfs_distances(const Graph &g, Vertex source) {
    check_vertex(g, source);
    std::vector<Distance> dist(g.num_vertices());
    std::deque<Vertex> queue{source};
    dist[source] = Distance{0};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        const Bitset &nbrs = g.neighbors(u);
        for (auto v = nbrs.find_first(); v != Bitset::npos; v = nbrs.find_next(v)) {
            if (!dist[v].reachable()) {
                dist[v] = Distance{dist[u].value() + 1};
                queue.push_back(static_cast<Vertex>(v));
            }
        }
    }
    return dist;
}

Distance diameter(const Graph &g) {
    if (g.num_vertices() == 0) {
        throw EmptyGraph("diameter of a graph without vertices is undefined");
    }
    Distance best{0};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto dist = bfs_distances(g, v);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
        if (!best.reachable()) {
            break;
        }
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
    Bitset keep = to_bitset(g.num_vertices(), vertices);
    InducedSubgraph out;
    out.to_original = to_list(keep);

    std::vector<Vertex> to_new(g.num_vertices(), 0);
    for (Vertex i = 0; i < out.to_original.size(); ++i) {
        to_new[out.to_original[i]] = i;
    }
    std::vector<Edge> edges;
    for (Vertex old_u : out.to_original) {
        Bitset nbrs = g.neighbors(old_u) & keep;
        for (auto old_v = nbrs.find_next(old_u); old_v != Bitset::npos; old_v = nbrs.find_next(old_v)) {
            edges.emplace_back(to_new[old_u], to_new[old_v]);
        }
    }
    out.graph = Graph(out.to_original.size(), edges);
    return out;
}

Bitset ball(const Graph &g, const Bitset &within, Vertex source, std::uint32_t radius) {
    Bitset reached(g.num_vertices());
    reached.set(source);
    Bitset frontier = reached;
    for (std::uint32_t level = 0; level < radius && frontier.any(); ++level) {
        Bitset next(g.num_vertices());
        for (auto u = frontier.find_first(); u != Bitset::npos; u = frontier.find_next(u)) {
            next |= g.neighbors(static_cast<Vertex>(u));
        }
        next &= within;
        next -= reached;
        reached |= next;
        frontier = std::move(next);
    }
    return reached;
}

bool is_s_club(const Graph &g, const Bitset &vertices, std::uint32_t s) {
    if (vertices.count() <= 1) {
        return true;
    }
    for (auto v = vertices.find_first(); v != Bitset::npos; v = vertices.find_next(v)) {
        if (ball(g, vertices, static_cast<Vertex>(v), s) != vertices) {
            return false;
        }
    }
    return true;
}

bool is_s_club(const Graph &g, std::span<const Vertex> vertices, std::uint32_t s) {
    return is_s_club(g, to_bitset(g.num_vertices(), vertices), s);
}

std::vector<Bitset> connected_components(const Graph &g, const Bitset &within) {
    std::vector<Bitset> out;
    Bitset unseen = within;
    const auto unbounded = static_cast<std::uint32_t>(g.num_vertices());
    for (auto v = unseen.find_first(); v != Bitset::npos; v = unseen.find_first()) {
        Bitset component = ball(g, within, static_cast<Vertex>(v), unbounded);
        unseen -= component;
        out.push_back(std::move(component));
    }
    return out;
}

std::vector<VertexList> connected_components(const Graph &g) {
    std::vector<VertexList> out;
    for (const Bitset &component : connected_components(g, g.all_vertices())) {
        out.push_back(to_list(component));
    }
    return out;
}

bool is_clique(const Graph &g, std::span<const Vertex> vertices) {
    Bitset set = to_bitset(g.num_vertices(), vertices);
    for (Vertex v : vertices) {
        Bitset others = set;
        others.reset(v);
        if (!others.is_subset_of(g.neighbors(v))) {
            return false;
        }
    }
    return true;
}

} // namespace twoclub

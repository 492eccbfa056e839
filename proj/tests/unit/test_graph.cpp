#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/graph.hpp"

using namespace twoclub;

namespace {

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    }
    return Graph(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

Graph two_triangles() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    return Graph(6, edges);
}

Distance d(std::uint32_t v) { return Distance{v}; }

} // namespace

TEST_CASE("build_graph") {
    SUBCASE("path") {
        const std::vector<Edge> edges{{0, 1}, {1, 2}};
        Graph g = build_graph(3, edges);
        CHECK(g.num_vertices() == 3);
        CHECK(g.num_edges() == 2);
        CHECK(g.adjacent(1, 0));
        CHECK_FALSE(g.adjacent(0, 2));
    }
    SUBCASE("isolated vertex") {
        Graph g = build_graph(1, {});
        CHECK(g.num_vertices() == 1);
        CHECK(g.num_edges() == 0);
    }
    SUBCASE("self-loop") {
        const std::vector<Edge> edges{{0, 0}};
        CHECK_THROWS_AS(build_graph(3, edges), InvalidEdge);
    }
    SUBCASE("out of range") {
        const std::vector<Edge> edges{{0, 3}};
        CHECK_THROWS_AS(build_graph(3, edges), InvalidVertex);
    }
    SUBCASE("duplicates and reversed pairs collapse") {
        const std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}, {2, 1}};
        Graph g = build_graph(3, edges);
        CHECK(g.num_edges() == 2);
        CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    }
}

TEST_CASE("bfs_distances") {
    CHECK(bfs_distances(path(3), 0) == std::vector<Distance>{d(0), d(1), d(2)});
    CHECK(bfs_distances(Graph(2, {}), 0) == std::vector<Distance>{d(0), Distance::unreachable()});
    CHECK(bfs_distances(complete(3), 2) == std::vector<Distance>{d(1), d(1), d(0)});
    CHECK_THROWS_AS(bfs_distances(path(3), 3), InvalidVertex);
}

TEST_CASE("Distance ordering puts unreachable last") {
    CHECK(d(0) < d(1));
    CHECK(d(1000000) < Distance::unreachable());
    CHECK_FALSE(Distance::unreachable().reachable());
}

TEST_CASE("diameter") {
    CHECK(diameter(complete(3)) == d(1));
    CHECK(diameter(path(3)) == d(2));
    const std::vector<Edge> matching{{0, 1}, {2, 3}};
    CHECK(diameter(Graph(4, matching)) == Distance::unreachable());
    CHECK(diameter(Graph(1, {})) == d(0));
    CHECK_THROWS_AS(diameter(Graph(0, {})), EmptyGraph);
}

TEST_CASE("induced_subgraph") {
    SUBCASE("K4 on three vertices is K3") {
        const VertexList s{0, 1, 2};
        auto sub = induced_subgraph(complete(4), s);
        CHECK(sub.graph == complete(3));
        CHECK(sub.to_original == s);
    }
    SUBCASE("ends of P3") {
        const VertexList s{2, 0};
        auto sub = induced_subgraph(path(3), s);
        CHECK(sub.graph.num_vertices() == 2);
        CHECK(sub.graph.num_edges() == 0);
        CHECK(sub.to_original == VertexList{0, 2});
    }
    SUBCASE("empty set") {
        auto sub = induced_subgraph(path(3), {});
        CHECK(sub.graph.num_vertices() == 0);
    }
    SUBCASE("foreign id") {
        const VertexList s{5};
        CHECK_THROWS_AS(induced_subgraph(path(3), s), InvalidVertex);
    }
}

TEST_CASE("is_s_club") {
    const VertexList all5{0, 1, 2, 3, 4};
    CHECK(is_s_club(cycle(5), all5, 2));
    CHECK_FALSE(is_s_club(cycle(5), all5, 1));
    const VertexList all4{0, 1, 2, 3};
    CHECK_FALSE(is_s_club(path(4), all4, 2));
    CHECK(is_s_club(path(4), all4, 3));

    SUBCASE("trivial sets") {
        CHECK(is_s_club(path(4), VertexList{}, 1));
        CHECK(is_s_club(path(4), VertexList{3}, 1));
    }
    SUBCASE("disconnected sets are not clubs") {
        CHECK_FALSE(is_s_club(path(4), VertexList{0, 3}, 100));
    }
    SUBCASE("distances are measured inside the set") {
        // 0 and 2 are at distance 2 in C5 but only through 1.
        CHECK_FALSE(is_s_club(cycle(5), VertexList{0, 2, 3, 4}, 2));
    }
}

TEST_CASE("connected_components") {
    auto comps = connected_components(two_triangles());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexList{0, 1, 2});
    CHECK(comps[1] == VertexList{3, 4, 5});
    CHECK(connected_components(Graph(1, {})) == std::vector<VertexList>{{0}});
    CHECK(connected_components(path(3)) == std::vector<VertexList>{{0, 1, 2}});

    const std::vector<Edge> edges{{3, 0}, {1, 2}};
    CHECK(connected_components(Graph(5, edges)) == std::vector<VertexList>{{0, 3}, {1, 2}, {4}});
}

TEST_CASE("distance properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(n, p, rng);
        const auto fw = oracle::floyd_warshall(g);

        std::vector<std::vector<Distance>> dist;
        for (Vertex v = 0; v < n; ++v) {
            dist.push_back(bfs_distances(g, v));
        }
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                // symmetry and agreement with Floyd-Warshall
                CHECK(dist[u][v] == dist[v][u]);
                if (fw[u][v] == oracle::kInf) {
                    CHECK_FALSE(dist[u][v].reachable());
                } else {
                    CHECK(dist[u][v] == d(static_cast<std::uint32_t>(fw[u][v])));
                }
                for (Vertex w = 0; w < n; ++w) {
                    if (dist[u][v].reachable() && dist[v][w].reachable()) {
                        CHECK(dist[u][w].value() <= dist[u][v].value() + dist[v][w].value());
                    }
                }
            }
        }

        const int fw_diameter = oracle::diameter(g);
        const Distance diam = diameter(g);
        if (fw_diameter == oracle::kInf) {
            CHECK_FALSE(diam.reachable());
        } else {
            CHECK(diam == d(static_cast<std::uint32_t>(fw_diameter)));
        }

        // is_s_club is monotone in s and matches the matrix oracle.
        VertexList subset;
        for (Vertex v = 0; v < n; ++v) {
            if (rng() & 1u) {
                subset.push_back(v);
            }
        }
        for (std::uint32_t s = 1; s <= 4; ++s) {
            const bool club = is_s_club(g, subset, s);
            CHECK(club == oracle::is_s_club(g, subset, static_cast<int>(s)));
            if (club) {
                CHECK(is_s_club(g, subset, s + 1));
            }
        }
    }
}

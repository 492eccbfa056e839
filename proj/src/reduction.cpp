#include "twoclub/reduction.hpp"

#include <sstream>

#include "twoclub/errors.hpp"

namespace twoclub {

std::string to_string(const Role &role) {
    switch (role.kind) {
    case RoleKind::Original:
        return "orig:" + std::to_string(role.index);
    case RoleKind::Copy:
        return "copy:" + std::to_string(role.index) + ":" + std::to_string(role.copy);
    case RoleKind::SpecialA:
        return "a";
    case RoleKind::SpecialB:
        return "b";
    case RoleKind::SpecialU:
        return "u";
    case RoleKind::X1:
        return "x1:" + std::to_string(role.index);
    case RoleKind::X2:
        return "x2:" + std::to_string(role.index);
    }
    return {};
}

Role GadgetLayout::role_of(Vertex v) const {
    std::size_t id = v;
    if (id >= num_vertices()) {
        throw InvalidVertex("vertex " + std::to_string(v) + " is not part of the gadget");
    }
    if (id < n_) {
        return {RoleKind::Original, id, 0};
    }
    id -= n_;
    if (id < n_ * n_) {
        return {RoleKind::Copy, id / n_, id % n_};
    }
    id -= n_ * n_;
    if (id < 3) {
        static constexpr RoleKind specials[] = {RoleKind::SpecialA, RoleKind::SpecialB, RoleKind::SpecialU};
        return {specials[id], 0, 0};
    }
    id -= 3;
    if (id < num_x1()) {
        return {RoleKind::X1, id, 0};
    }
    return {RoleKind::X2, id - num_x1(), 0};
}

ReducedInstance reduce(const Graph &h) {
    const std::size_t n = h.num_vertices();
    if (n == 0) {
        throw EmptyGraph("cannot reduce a graph without vertices");
    }
    GadgetLayout layout(n);
    const Vertex a = layout.special_a();
    const Vertex b = layout.special_b();
    const Vertex u = layout.special_u();

    std::vector<Edge> edges = h.edges();
    edges.emplace_back(a, b);
    for (std::size_t t = 0; t < layout.num_x1(); ++t) {
        edges.emplace_back(a, layout.x1(t));
        edges.emplace_back(b, layout.x1(t));
    }
    for (std::size_t t = 0; t < layout.num_x2(); ++t) {
        edges.emplace_back(b, layout.x2(t));
        edges.emplace_back(u, layout.x2(t));
        for (std::size_t i = 0; i < n; ++i) {
            edges.emplace_back(layout.original(i), layout.x2(t));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(b, layout.original(i));
        edges.emplace_back(u, layout.original(i));
        for (std::size_t j = 0; j < n; ++j) {
            edges.emplace_back(a, layout.copy(i, j));
            edges.emplace_back(u, layout.copy(i, j));
            edges.emplace_back(layout.original(i), layout.copy(i, j));
        }
    }
    return {Graph(layout.num_vertices(), edges), layout, n};
}

std::uint64_t target_size_unchecked(std::size_t n, std::int64_t k) {
    const auto nn = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(nn * nn * nn + nn * nn + (k - 1) * nn + k + 2);
}

std::uint64_t target_size(std::size_t n, std::size_t k) {
    if (n == 0 || k < 1 || k > n) {
        throw InvalidK("k = " + std::to_string(k) + " is outside [1, " + std::to_string(n) + "]");
    }
    return target_size_unchecked(n, static_cast<std::int64_t>(k));
}

VertexList forward_map(const ReducedInstance &inst, std::span<const Vertex> clique) {
    const GadgetLayout &layout = inst.layout;
    if (clique.empty()) {
        throw NotAClique("forward_map needs a non-empty clique");
    }
    Bitset members = to_bitset(inst.n, clique);
    for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
        Bitset others = members;
        others.reset(i);
        for (auto j = others.find_first(); j != Bitset::npos; j = others.find_next(j)) {
            if (!inst.graph.adjacent(layout.original(i), layout.original(j))) {
                throw NotAClique("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are not adjacent");
            }
        }
    }

    Bitset out(layout.num_vertices());
    for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) {
        out.set(layout.original(i));
        for (std::size_t j = 0; j < inst.n; ++j) {
            out.set(layout.copy(i, j));
        }
    }
    out.set(layout.special_a());
    out.set(layout.special_b());
    for (std::size_t t = 0; t < layout.num_x1(); ++t) {
        out.set(layout.x1(t));
    }
    for (std::size_t t = 0; t < layout.num_x2(); ++t) {
        out.set(layout.x2(t));
    }
    return to_list(out);
}

VertexList extract_clique(const ReducedInstance &inst, std::span<const Vertex> club) {
    const GadgetLayout &layout = inst.layout;
    Bitset in_club = to_bitset(layout.num_vertices(), club);
    VertexList out;
    for (std::size_t i = 0; i < inst.n; ++i) {
        if (!in_club.test(layout.original(i))) {
            continue;
        }
        for (std::size_t j = 0; j < inst.n; ++j) {
            if (in_club.test(layout.copy(i, j))) {
                out.push_back(static_cast<Vertex>(i));
                break;
            }
        }
    }
    return out;
}

namespace {

// Whether the construction joins two vertices with the given roles. Edges
// among Originals come from H and are handled by the caller.
bool construction_requires(const Role &x, const Role &y) {
    auto is = [](const Role &r, RoleKind k) { return r.kind == k; };
    auto pair = [&](RoleKind p, RoleKind q) {
        return (is(x, p) && is(y, q)) || (is(x, q) && is(y, p));
    };
    if (pair(RoleKind::Original, RoleKind::Copy)) {
        const Role &orig = is(x, RoleKind::Original) ? x : y;
        const Role &copy = is(x, RoleKind::Copy) ? x : y;
        return orig.index == copy.index;
    }
    return pair(RoleKind::SpecialA, RoleKind::SpecialB) || pair(RoleKind::SpecialA, RoleKind::X1) ||
           pair(RoleKind::SpecialA, RoleKind::Copy) || pair(RoleKind::SpecialB, RoleKind::X1) ||
           pair(RoleKind::SpecialB, RoleKind::Original) || pair(RoleKind::SpecialB, RoleKind::X2) ||
           pair(RoleKind::Original, RoleKind::X2) || pair(RoleKind::SpecialU, RoleKind::Copy) ||
           pair(RoleKind::SpecialU, RoleKind::Original) || pair(RoleKind::SpecialU, RoleKind::X2);
}

} // namespace

std::optional<GadgetViolation> validate_gadget(const ReducedInstance &inst) {
    const GadgetLayout &layout = inst.layout;
    const Graph &g = inst.graph;
    if (g.num_vertices() != layout.num_vertices()) {
        throw InvalidVertex("graph has " + std::to_string(g.num_vertices()) + " vertices, layout expects " +
                            std::to_string(layout.num_vertices()));
    }
    std::vector<Role> roles(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        roles[v] = layout.role_of(v);
    }
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        for (Vertex y = x + 1; y < g.num_vertices(); ++y) {
            // Original-Original adjacency is H itself and is free.
            if (roles[x].kind == RoleKind::Original && roles[y].kind == RoleKind::Original) {
                continue;
            }
            bool required = construction_requires(roles[x], roles[y]);
            if (required != g.adjacent(x, y)) {
                return GadgetViolation{x, y, required};
            }
        }
    }
    return std::nullopt;
}

Graph source_graph(const ReducedInstance &inst) {
    std::vector<Edge> edges;
    for (auto [u, v] : inst.graph.edges()) {
        if (u < inst.n && v < inst.n) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(inst.n, edges);
}

std::string emit_roles(const GadgetLayout &layout) {
    std::ostringstream out;
    for (Vertex v = 0; v < layout.num_vertices(); ++v) {
        out << v << ' ' << to_string(layout.role_of(v)) << '\n';
    }
    return out.str();
}

} // namespace twoclub

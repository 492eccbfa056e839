#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "twoclub/graph.hpp"

namespace twoclub {

enum class RoleKind { Original, Copy, SpecialA, SpecialB, SpecialU, X1, X2 };

/// Role of one gadget vertex. `index` is i for Original and Copy, t for X1
/// and X2; `copy` is j for Copy(i, j).
struct Role {
    RoleKind kind = RoleKind::Original;
    std::size_t index = 0;
    std::size_t copy = 0;

    bool operator==(const Role &) const = default;
};

/// "orig:i", "copy:i:j", "a", "b", "u", "x1:t", "x2:t".
std::string to_string(const Role &role);

/// Id layout of the gadget built from an n-vertex graph H:
///
///   [0, n)                 Original(i)
///   [n, n + n^2)           Copy(i, j) at n + i*n + j
///   n + n^2, +1, +2        a, b, u
///   next n^3 ids           X1
///   last n^2 - n ids       X2
class GadgetLayout {
public:
    GadgetLayout() = default;
    explicit GadgetLayout(std::size_t n) : n_(n) {}

    std::size_t source_size() const { return n_; }
    std::size_t num_vertices() const { return n_ * n_ * n_ + 2 * n_ * n_ + 3; }
    std::size_t num_x1() const { return n_ * n_ * n_; }
    std::size_t num_x2() const { return n_ * n_ - n_; }

    Vertex original(std::size_t i) const { return static_cast<Vertex>(i); }
    Vertex copy(std::size_t i, std::size_t j) const { return static_cast<Vertex>(n_ + i * n_ + j); }
    Vertex special_a() const { return static_cast<Vertex>(n_ + n_ * n_); }
    Vertex special_b() const { return special_a() + 1; }
    Vertex special_u() const { return special_a() + 2; }
    Vertex x1(std::size_t t) const { return static_cast<Vertex>(n_ + n_ * n_ + 3 + t); }
    Vertex x2(std::size_t t) const { return static_cast<Vertex>(n_ + n_ * n_ + 3 + num_x1() + t); }

    /// Throws InvalidVertex for ids outside the gadget.
    Role role_of(Vertex v) const;

private:
    std::size_t n_ = 0;
};

struct ReducedInstance {
    Graph graph;
    GadgetLayout layout;
    std::size_t n = 0;
};

/// Builds the 2-club gadget of H. The gadget depends on H alone; the clique
/// size k only enters through target_size. Throws EmptyGraph when H has no
/// vertices.
ReducedInstance reduce(const Graph &h);

/// n^3 + n^2 + (k-1)n + k + 2. Throws InvalidK unless 1 <= k <= n.
std::uint64_t target_size(std::size_t n, std::size_t k);

/// Same formula without the range check on k.
std::uint64_t target_size_unchecked(std::size_t n, std::int64_t k);

/// Maps a non-empty clique S of H to the 2-club
/// X1 u X2 u S u (copies of S) u {a, b}. Throws NotAClique otherwise.
VertexList forward_map(const ReducedInstance &inst, std::span<const Vertex> clique);

/// Originals of Y that have at least one of their copies in Y.
VertexList extract_clique(const ReducedInstance &inst, std::span<const Vertex> club);

struct GadgetViolation {
    Vertex u = 0;
    Vertex v = 0;
    /// True when the edge is required but absent; false when present but
    /// not part of the construction.
    bool missing = false;
};

/// First pair (u < v, ascending) whose adjacency disagrees with the
/// construction, or nullopt when the gadget is exact.
std::optional<GadgetViolation> validate_gadget(const ReducedInstance &inst);

/// Source graph H recovered from the Original-Original edges.
Graph source_graph(const ReducedInstance &inst);

/// One "<id> <role>" line per vertex.
std::string emit_roles(const GadgetLayout &layout);

} // namespace twoclub

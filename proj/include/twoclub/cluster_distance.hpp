#pragma once

#include <cstdint>
#include <optional>

#include "twoclub/graph.hpp"

namespace twoclub {

/// Deleting `deleted` leaves a graph whose every component has diameter
/// at most class_s.
struct DeletionCertificate {
    VertexList deleted;
    std::uint32_t class_s = 2;
};

/// Every connected component is an s-club. The empty graph qualifies.
bool is_s_club_cluster(const Graph &g, std::uint32_t s);

/// Same test restricted to G[alive].
bool is_s_club_cluster(const Graph &g, const Bitset &alive, std::uint32_t s);

bool verify_deletion(const Graph &g, std::span<const Vertex> deleted, std::uint32_t s);

/// Largest deletion budget accepted by min_deletion_to_s_club_cluster.
inline constexpr std::size_t kMaxDeletionBudget = 4;

/// Smallest deletion set of size <= d_max that turns g into an s-club
/// cluster graph; ties go to the lexicographically smallest id list.
/// Exhaustive by size, skipping any set that misses a component of g
/// which already violates the diameter bound. Throws TooLarge when d_max
/// exceeds kMaxDeletionBudget.
std::optional<DeletionCertificate> min_deletion_to_s_club_cluster(const Graph &g, std::uint32_t s,
                                                                  std::size_t d_max);

} // namespace twoclub

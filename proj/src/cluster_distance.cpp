#include "twoclub/cluster_distance.hpp"

#include <string>
#include <utility>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

// Every deletion set must hit each of these components; deleting elsewhere
// never changes them.
std::vector<Bitset> violating_components(const Graph &g, std::uint32_t s) {
    std::vector<Bitset> out;
    for (Bitset &component : connected_components(g, g.all_vertices())) {
        if (!is_s_club(g, component, s)) {
            out.push_back(std::move(component));
        }
    }
    return out;
}

// A component has diameter <= s iff no vertex has another at distance
// exactly s + 1. Scans `hint` first, then the rest; returns the first vertex
// with such a partner.
class ViolationScan {
public:
    ViolationScan(const Graph &g, std::uint32_t s)
        : g_(g), s_(s), reached_(g.num_vertices()), frontier_(g.num_vertices()), next_(g.num_vertices()) {}

    std::optional<Vertex> find(const Bitset &alive, std::optional<Vertex> hint = std::nullopt) {
        if (hint && alive.test(*hint) && escapes(alive, *hint)) {
            return hint;
        }
        for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
            if (escapes(alive, static_cast<Vertex>(v))) {
                return static_cast<Vertex>(v);
            }
        }
        return std::nullopt;
    }

private:
    bool escapes(const Bitset &alive, Vertex source) {
        reached_.reset();
        reached_.set(source);
        frontier_ = reached_;
        for (std::uint32_t level = 0; level <= s_; ++level) {
            next_.reset();
            for (auto u = frontier_.find_first(); u != Bitset::npos; u = frontier_.find_next(u)) {
                next_ |= g_.neighbors(static_cast<Vertex>(u));
            }
            next_ &= alive;
            next_ -= reached_;
            if (next_.none()) {
                return false;
            }
            reached_ |= next_;
            std::swap(frontier_, next_);
        }
        return true;
    }

    const Graph &g_;
    std::uint32_t s_;
    Bitset reached_;
    Bitset frontier_;
    Bitset next_;
};

bool hits_all(const std::vector<Vertex> &chosen, const std::vector<Bitset> &components) {
    for (const Bitset &component : components) {
        bool hit = false;
        for (Vertex v : chosen) {
            if (component.test(v)) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_s_club_cluster(const Graph &g, const Bitset &alive, std::uint32_t s) {
    return !ViolationScan(g, s).find(alive).has_value();
}

bool is_s_club_cluster(const Graph &g, std::uint32_t s) { return is_s_club_cluster(g, g.all_vertices(), s); }

bool verify_deletion(const Graph &g, std::span<const Vertex> deleted, std::uint32_t s) {
    Bitset alive = g.all_vertices();
    alive -= to_bitset(g.num_vertices(), deleted);
    return is_s_club_cluster(g, alive, s);
}

std::optional<DeletionCertificate> min_deletion_to_s_club_cluster(const Graph &g, std::uint32_t s,
                                                                  std::size_t d_max) {
    if (d_max > kMaxDeletionBudget) {
        throw TooLarge("deletion budget " + std::to_string(d_max) + " exceeds the limit of " +
                       std::to_string(kMaxDeletionBudget));
    }
    const auto violating = violating_components(g, s);
    if (violating.empty()) {
        return DeletionCertificate{{}, s};
    }
    const std::size_t n = g.num_vertices();
    const Bitset all = g.all_vertices();
    ViolationScan scan(g, s);
    std::optional<Vertex> last_witness;

    for (std::size_t size = violating.size(); size <= std::min(d_max, n); ++size) {
        // Lexicographic enumeration of size-element combinations.
        std::vector<Vertex> chosen(size);
        for (std::size_t i = 0; i < size; ++i) {
            chosen[i] = static_cast<Vertex>(i);
        }
        while (true) {
            if (hits_all(chosen, violating)) {
                Bitset alive = all;
                for (Vertex v : chosen) {
                    alive.reset(v);
                }
                last_witness = scan.find(alive, last_witness);
                if (!last_witness) {
                    return DeletionCertificate{chosen, s};
                }
            }
            std::size_t i = size;
            while (i > 0 && chosen[i - 1] == n - size + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++chosen[i - 1];
            for (std::size_t j = i; j < size; ++j) {
                chosen[j] = chosen[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

} // namespace twoclub

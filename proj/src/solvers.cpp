#include "twoclub/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twoclub/errors.hpp"

namespace twoclub {

namespace {

using Clock = std::chrono::steady_clock;

void require_vertices(const Graph &g, const char *what) {
    if (g.num_vertices() == 0) {
        throw EmptyGraph(std::string(what) + " on a graph without vertices");
    }
}

// ---------------------------------------------------------------------------
// Maximum clique

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph &h) : order_(h.num_vertices()) {
        // Highest degree first; the colouring bound is tighter on that order.
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex x, Vertex y) { return h.degree(x) > h.degree(y); });
        std::vector<Vertex> position(order_.size());
        for (Vertex p = 0; p < order_.size(); ++p) {
            position[order_[p]] = p;
        }
        adjacency_.assign(order_.size(), Bitset(order_.size()));
        for (auto [x, y] : h.edges()) {
            adjacency_[position[x]].set(position[y]);
            adjacency_[position[y]].set(position[x]);
        }
    }

    SolveResult run() {
        Bitset all(order_.size());
        all.set();
        expand(all);
        SolveResult result;
        for (Vertex p : best_) {
            result.best_set.push_back(order_[p]);
        }
        std::sort(result.best_set.begin(), result.best_set.end());
        result.best_size = result.best_set.size();
        result.nodes_explored = nodes_;
        return result;
    }

private:
    void expand(Bitset candidates) {
        ++nodes_;
        std::vector<Vertex> ordered;
        std::vector<std::size_t> colour;
        colour_sort(candidates, ordered, colour);
        for (std::size_t idx = ordered.size(); idx-- > 0;) {
            if (current_.size() + colour[idx] <= best_.size()) {
                return;
            }
            Vertex v = ordered[idx];
            current_.push_back(v);
            Bitset next = candidates & adjacency_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                }
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    // Greedy sequential colouring; colour[i] bounds the clique size among
    // ordered[0..i].
    void colour_sort(const Bitset &candidates, std::vector<Vertex> &ordered, std::vector<std::size_t> &colour) const {
        Bitset uncoloured = candidates;
        std::size_t k = 0;
        while (uncoloured.any()) {
            ++k;
            Bitset available = uncoloured;
            for (auto v = available.find_first(); v != Bitset::npos; v = available.find_next(v)) {
                available -= adjacency_[v];
                uncoloured.reset(v);
                ordered.push_back(static_cast<Vertex>(v));
                colour.push_back(k);
            }
        }
    }

    std::vector<Vertex> order_;
    std::vector<Bitset> adjacency_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Maximum s-club

Bitset greedy_clique(const Graph &g) {
    Bitset best(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) + 1 <= best.count()) {
            continue;
        }
        Bitset clique(g.num_vertices());
        clique.set(v);
        Bitset candidates = g.neighbors(v);
        for (auto w = candidates.find_first(); w != Bitset::npos; w = candidates.find_first()) {
            clique.set(w);
            candidates &= g.neighbors(static_cast<Vertex>(w));
        }
        if (clique.count() > best.count()) {
            best = std::move(clique);
        }
    }
    return best;
}

// A closed ball of radius floor(s/2) is an s-club: shortest paths to its
// centre stay inside it.
Bitset initial_club(const Graph &g, std::uint32_t s) {
    if (s == 1) {
        return greedy_clique(g);
    }
    const Bitset all = g.all_vertices();
    Bitset best(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Bitset b = ball(g, all, v, s / 2);
        if (b.count() > best.count()) {
            best = std::move(b);
        }
    }
    return best;
}

class ClubSearch {
public:
    ClubSearch(const Graph &g, std::uint32_t s) : g_(g), s_(s) {}

    /// Full optimisation.
    SolveResult optimise() {
        best_ = initial_club(g_, s_);
        best_size_ = best_.count();
        search(g_.all_vertices(), Bitset(g_.num_vertices()));
        return result();
    }

    /// Stops as soon as an s-club of `target` vertices is known.
    bool reaches(std::size_t target) {
        target_ = target;
        best_ = initial_club(g_, s_);
        best_size_ = best_.count();
        if (best_size_ < target) {
            best_size_ = target - 1;
            best_.reset();
            search(g_.all_vertices(), Bitset(g_.num_vertices()));
        }
        return best_.any() && best_.count() >= target;
    }

    SolveResult result() const {
        SolveResult r;
        r.best_set = to_list(best_);
        r.best_size = r.best_set.size();
        r.nodes_explored = nodes_;
        return r;
    }

private:
    bool done() const { return target_ != 0 && best_.count() >= target_; }

    // Drops vertices beyond distance s from a fixed vertex until stable.
    // Returns false when a fixed vertex is lost or the bound prunes the node.
    bool tighten(Bitset &candidates, const Bitset &fixed) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto f = fixed.find_first(); f != Bitset::npos; f = fixed.find_next(f)) {
                Bitset reach = ball(g_, candidates, static_cast<Vertex>(f), s_);
                if (reach != candidates) {
                    candidates = std::move(reach);
                    changed = true;
                    if (!fixed.is_subset_of(candidates) || candidates.count() <= best_size_) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void search(Bitset candidates, Bitset fixed) {
        if (done()) {
            return;
        }
        ++nodes_;
        if (candidates.count() <= best_size_ || !tighten(candidates, fixed)) {
            return;
        }
        for (auto u = candidates.find_first(); u != Bitset::npos; u = candidates.find_next(u)) {
            Bitset reach = ball(g_, candidates, static_cast<Vertex>(u), s_);
            if (reach == candidates) {
                continue;
            }
            // Every earlier vertex reaches all of C, so the far partner
            // comes after u and neither endpoint is fixed.
            const auto w = (candidates - reach).find_first();

            Bitset without_u = candidates;
            without_u.reset(u);
            search(std::move(without_u), fixed);

            candidates.reset(w);
            fixed.set(u);
            search(std::move(candidates), std::move(fixed));
            return;
        }
        best_ = std::move(candidates);
        best_size_ = best_.count();
    }

    const Graph &g_;
    std::uint32_t s_;
    std::size_t target_ = 0;
    Bitset best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

void check_club(const Graph &g, const SolveResult &r, std::uint32_t s) {
    if (r.best_size != r.best_set.size() || !is_s_club(g, r.best_set, s)) {
        throw std::logic_error("s-club solver returned an invalid set");
    }
}

void check_clique(const Graph &g, const SolveResult &r) {
    if (r.best_size != r.best_set.size() || !is_clique(g, r.best_set)) {
        throw std::logic_error("clique solver returned an invalid set");
    }
}

// ---------------------------------------------------------------------------
// Exhaustive oracles over 32-bit masks

std::vector<std::uint32_t> adjacency_masks(const Graph &g) {
    if (g.num_vertices() > kBruteForceLimit) {
        throw TooLarge("brute force is limited to " + std::to_string(kBruteForceLimit) + " vertices, got " +
                       std::to_string(g.num_vertices()));
    }
    std::vector<std::uint32_t> masks(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        masks[u] |= 1u << v;
        masks[v] |= 1u << u;
    }
    return masks;
}

bool mask_is_club(const std::vector<std::uint32_t> &adj, std::uint32_t set, std::uint32_t s) {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        std::uint32_t reached = 1u << v;
        std::uint32_t frontier = reached;
        for (std::uint32_t level = 0; level < s && frontier != 0; ++level) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
                next |= adj[std::countr_zero(f)];
            }
            frontier = next & set & ~reached;
            reached |= frontier;
        }
        if (reached != set) {
            return false;
        }
    }
    return true;
}

bool mask_is_clique(const std::vector<std::uint32_t> &adj, std::uint32_t set) {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((set & ~(1u << v) & ~adj[v]) != 0) {
            return false;
        }
    }
    return true;
}

template <typename Accept>
SolveResult scan_subsets(std::size_t n, Accept &&accept) {
    SolveResult r;
    std::uint32_t best = 0;
    int best_count = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m < limit; ++m) {
        const auto mask = static_cast<std::uint32_t>(m);
        if (std::popcount(mask) <= best_count) {
            continue;
        }
        ++r.nodes_explored;
        if (accept(mask)) {
            best = mask;
            best_count = std::popcount(mask);
        }
    }
    for (std::uint32_t rest = best; rest != 0; rest &= rest - 1) {
        r.best_set.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    }
    r.best_size = r.best_set.size();
    return r;
}

template <typename Fn>
SolveResult timed(Fn &&fn) {
    const auto start = Clock::now();
    SolveResult r = fn();
    r.elapsed = Clock::now() - start;
    return r;
}

} // namespace

SolveResult max_clique(const Graph &h) {
    require_vertices(h, "max_clique");
    return timed([&] {
        SolveResult r = CliqueSearch(h).run();
        check_clique(h, r);
        return r;
    });
}

SolveResult max_s_club(const Graph &g, std::uint32_t s) {
    require_vertices(g, "max_s_club");
    if (s == 0) {
        throw Error("s must be positive");
    }
    return timed([&] {
        SolveResult r = ClubSearch(g, s).optimise();
        check_club(g, r, s);
        return r;
    });
}

bool has_s_club_of_size(const Graph &g, std::uint32_t s, std::size_t t) {
    if (s == 0) {
        throw Error("s must be positive");
    }
    if (t <= 1) {
        return t == 0 || g.num_vertices() >= 1;
    }
    if (t > g.num_vertices()) {
        return false;
    }
    ClubSearch search(g, s);
    const bool found = search.reaches(t);
    if (found) {
        check_club(g, search.result(), s);
    }
    return found;
}

SolveResult brute_force_max_s_club(const Graph &g, std::uint32_t s) {
    require_vertices(g, "brute_force_max_s_club");
    if (s == 0) {
        throw Error("s must be positive");
    }
    const auto adj = adjacency_masks(g);
    return timed([&] { return scan_subsets(g.num_vertices(), [&](std::uint32_t m) { return mask_is_club(adj, m, s); }); });
}

SolveResult brute_force_max_clique(const Graph &h) {
    require_vertices(h, "brute_force_max_clique");
    const auto adj = adjacency_masks(h);
    return timed([&] { return scan_subsets(h.num_vertices(), [&](std::uint32_t m) { return mask_is_clique(adj, m); }); });
}

} // namespace twoclub

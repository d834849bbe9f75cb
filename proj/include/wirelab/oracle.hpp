// oracle.hpp - ground-truth minimum wirelength by branch-and-bound over all
// vertex bijections
#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wirelab/embedding.hpp"
#include "wirelab/graph.hpp"
#include "wirelab/isoperimetric.hpp"

namespace wirelab {

inline constexpr std::uint64_t kDefaultPermutationBudget = 3'628'800;  // 10!

struct OracleResult {
    long long minimum_wirelength = 0;
    std::vector<int> witness_map;  // lexicographically least optimal bijection
    std::uint64_t searched = 0;    // complete bijections evaluated
    std::uint64_t pruned = 0;      // bijections skipped by the bound
};

namespace detail {

struct OracleSearch {
    int n;
    const std::vector<std::pair<int, int>>& guest_edges;
    std::vector<std::vector<int>> adj;       // guest adjacency
    std::vector<std::vector<int>> host_dist; // all-pairs host distances
    std::vector<int> assignment;             // guest -> host, -1 when free
    std::vector<char> host_used;
    std::vector<std::uint64_t> factorial;
    OracleResult result;

    // Admissible bound for the unassigned part: every guest edge with exactly
    // one mapped endpoint costs at least the distance from that endpoint's
    // image to the nearest free host vertex.
    long long half_edge_bound() const {
        long long bound = 0;
        for (auto [x, y] : guest_edges) {
            int ax = assignment[static_cast<std::size_t>(x)];
            int ay = assignment[static_cast<std::size_t>(y)];
            if ((ax < 0) == (ay < 0)) continue;
            int mapped = ax < 0 ? ay : ax;
            int nearest = std::numeric_limits<int>::max();
            for (int h = 0; h < n; ++h)
                if (!host_used[static_cast<std::size_t>(h)])
                    nearest = std::min(nearest, host_dist[static_cast<std::size_t>(mapped)]
                                                         [static_cast<std::size_t>(h)]);
            bound += nearest;
        }
        return bound;
    }

    void run(int depth, long long cost) {
        if (depth == n) {
            ++result.searched;
            if (cost < result.minimum_wirelength) {
                result.minimum_wirelength = cost;
                result.witness_map = assignment;
            }
            return;
        }
        for (int h = 0; h < n; ++h) {
            if (host_used[static_cast<std::size_t>(h)]) continue;
            long long added = 0;
            for (int w : adj[static_cast<std::size_t>(depth)]) {
                int aw = assignment[static_cast<std::size_t>(w)];
                if (aw >= 0) added += host_dist[static_cast<std::size_t>(h)][static_cast<std::size_t>(aw)];
            }
            assignment[static_cast<std::size_t>(depth)] = h;
            host_used[static_cast<std::size_t>(h)] = 1;
            long long lower = cost + added + half_edge_bound();
            if (lower >= result.minimum_wirelength)
                result.pruned += factorial[static_cast<std::size_t>(n - depth - 1)];
            else
                run(depth + 1, cost + added);
            assignment[static_cast<std::size_t>(depth)] = -1;
            host_used[static_cast<std::size_t>(h)] = 0;
        }
    }
};

}  // namespace detail

// Exact minimum of the distance-sum wirelength over all guest->host bijections.
// Deterministic: guest vertices are assigned in label order and host candidates
// tried ascending, so the witness is the lexicographically least minimizer.
// Refuses when |V|! exceeds the permutation budget.
inline OracleResult brute_force_min_wirelength(const Graph& guest, const Graph& host,
                                               std::uint64_t budget = kDefaultPermutationBudget) {
    int n = guest.vertex_count();
    if (n != host.vertex_count())
        throw std::invalid_argument("brute_force_min_wirelength: orders differ");
    if (n == 0) throw std::invalid_argument("brute_force_min_wirelength: empty graphs");
    if (!host.is_connected())
        throw std::invalid_argument("brute_force_min_wirelength: host must be connected");

    std::uint64_t permutations = 1;
    std::vector<std::uint64_t> factorial{1};
    for (int t = 1; t <= n; ++t) {
        if (permutations > budget / static_cast<std::uint64_t>(t)) {
            throw BudgetExceeded("brute_force_min_wirelength: " + std::to_string(n) +
                                 "! exceeds permutation budget " + std::to_string(budget));
        }
        permutations *= static_cast<std::uint64_t>(t);
        factorial.push_back(permutations);
    }

    detail::OracleSearch search{n,
                                guest.edges(),
                                {},
                                {},
                                std::vector<int>(static_cast<std::size_t>(n), -1),
                                std::vector<char>(static_cast<std::size_t>(n), 0),
                                std::move(factorial),
                                {}};
    search.adj.reserve(static_cast<std::size_t>(n));
    search.host_dist.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        search.adj.push_back(guest.neighbors(v));
        search.host_dist.push_back(host.bfs_distances(v));
    }
    search.result.minimum_wirelength = std::numeric_limits<long long>::max();
    search.run(0, 0);
    return search.result;
}

// True when the embedding's wirelength matches the brute-force minimum.
inline bool certify_optimal(const Embedding& e,
                            std::uint64_t budget = kDefaultPermutationBudget) {
    OracleResult oracle = brute_force_min_wirelength(e.guest, e.host, budget);
    return wirelength_by_distance(e) == oracle.minimum_wirelength;
}

}  // namespace wirelab

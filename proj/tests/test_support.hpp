// test_support.hpp - deterministic random graphs/bijections for property tests
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "wirelab/graph.hpp"

namespace wirelab::testing {

// mt19937 is fully specified by the standard; drawing with explicit modulo
// keeps the streams identical across platforms (std::uniform_int_distribution
// is not portable).
class Rng {
  public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint32_t>(bound)); }

  private:
    std::mt19937 engine_;
};

// Connected graph on n vertices: random spanning tree plus extra_edges random
// non-parallel edges.
inline Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    int attempts = 0;
    while (extra_edges > 0 && attempts < 50 * n) {
        ++attempts;
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        bool present = false;
        for (auto [a, b] : edges)
            if (a == u && b == v) present = true;
        if (present) continue;
        edges.emplace_back(u, v);
        --extra_edges;
    }
    return Graph(n, std::move(edges));
}

inline std::vector<int> random_bijection(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)],
                                              perm[static_cast<std::size_t>(rng.below(i + 1))]);
    return perm;
}

}  // namespace wirelab::testing

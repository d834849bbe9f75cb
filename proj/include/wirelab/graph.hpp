// graph.hpp - immutable simple undirected graph with dense integer labels
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wirelab {

// Provenance tag for the construction that produced a graph.
enum class Family {
    generic,
    hypercube,
    folded_hypercube,
    circulant,
    ladder,
    cycle_of_ladders,
    star_of_cycle,
    product,
};

inline const char* to_string(Family f) {
    switch (f) {
        case Family::hypercube: return "hypercube";
        case Family::folded_hypercube: return "folded-hypercube";
        case Family::circulant: return "circulant";
        case Family::ladder: return "ladder";
        case Family::cycle_of_ladders: return "cycle-of-ladders";
        case Family::star_of_cycle: return "star-of-cycle";
        case Family::product: return "product";
        case Family::generic: break;
    }
    return "generic";
}

inline Family family_from_string(std::string_view s) {
    if (s == "hypercube") return Family::hypercube;
    if (s == "folded-hypercube") return Family::folded_hypercube;
    if (s == "circulant") return Family::circulant;
    if (s == "ladder") return Family::ladder;
    if (s == "cycle-of-ladders") return Family::cycle_of_ladders;
    if (s == "star-of-cycle") return Family::star_of_cycle;
    if (s == "product") return Family::product;
    if (s == "generic") return Family::generic;
    throw std::invalid_argument("unknown family tag: " + std::string(s));
}

// Simple undirected graph. Vertices are 0..n-1; edges are stored canonically
// (u < v, sorted lexicographically) and never change after construction.
// family_params carries the construction parameters (e.g. the jump list of a
// circulant) so downstream certificates can recover them; it is advisory and
// not part of the serialized form.
class Graph {
  public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
          Family family = Family::generic, std::vector<int> family_params = {})
        : n_(vertex_count),
          edges_(std::move(edge_list)),
          family_(family),
          params_(std::move(family_params)) {
        if (n_ < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("parallel edge in edge list");
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    Family family() const { return family_; }
    const std::vector<int>& family_params() const { return params_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }

    // Index of a canonical edge within edges(), or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // r if every vertex has degree r, else -1 (single-vertex graphs are 0-regular).
    int regularity() const {
        if (n_ == 0) return -1;
        int r = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != r) return -1;
        return r;
    }

    std::vector<int> bfs_distances(int src) const {
        check_vertex(src);
        std::vector<int> dist(static_cast<std::size_t>(n_), -1);
        std::vector<int> queue;
        queue.reserve(static_cast<std::size_t>(n_));
        dist[static_cast<std::size_t>(src)] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        auto dist = bfs_distances(0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " not in [0," +
                                    std::to_string(n_) + ")");
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    Family family_ = Family::generic;
    std::vector<int> params_;
};

}  // namespace wirelab

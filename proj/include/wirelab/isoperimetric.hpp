// isoperimetric.hpp - exact and closed-form solvers for the maximum-subgraph
// and minimum-cut problems (I_G(a), theta_G(a)) with witness certification
#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wirelab/graph.hpp"

namespace wirelab {

// Exhaustive enumeration refuses loudly instead of hanging.
class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Subset-count budget sized so that C(32,6) fits and C(32,16), C(64,6) do not.
inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000;

// C(n, k), saturating at cap instead of overflowing.
inline std::uint64_t binomial_capped(int n, int k,
                                     std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // multiply by (n-k+i)/i exactly; check the multiply against the cap
        std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (result > cap / factor) return cap;
        result = result * factor / static_cast<std::uint64_t>(i);
        if (result >= cap) return cap;
    }
    return result;
}

struct IsoperimetricProfile {
    int size = 0;                    // a
    long long i_value = 0;           // max edges induced by an a-set
    long long theta_value = 0;       // min boundary edges of an a-set
    std::vector<int> witness_i;      // lexicographically least attaining set
    std::vector<int> witness_theta;  // lexicographically least attaining set
};

namespace detail {

// Adjacency rows as bit words for fast induced/boundary counting.
struct BitAdjacency {
    int words;
    std::vector<std::uint64_t> rows;  // n * words

    explicit BitAdjacency(const Graph& g)
        : words((g.vertex_count() + 63) / 64),
          rows(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(std::max(words, 1)), 0) {
        for (auto [u, v] : g.edges()) {
            rows[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64);
            rows[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
        }
    }

    const std::uint64_t* row(int v) const { return rows.data() + static_cast<std::size_t>(v) * words; }
};

inline long long count_intersection(const std::uint64_t* row, const std::uint64_t* mask, int words) {
    long long c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
    return c;
}

}  // namespace detail

// Edges with both endpoints in S. Vertices are checked against the graph.
inline long long induced_edge_count(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : subset) {
        g.check_vertex(v);
        in[static_cast<std::size_t>(v)] = 1;
    }
    long long count = 0;
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]) ++count;
    return count;
}

// Edges with exactly one endpoint in S.
inline long long boundary_edge_count(const Graph& g, const std::vector<int>& subset) {
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : subset) {
        g.check_vertex(v);
        in[static_cast<std::size_t>(v)] = 1;
    }
    long long count = 0;
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) ++count;
    return count;
}

// Exhaustive profile over all a-subsets, in colex order, with lexicographically
// least witnesses. Refuses when C(|V|, a) exceeds the subset budget.
inline IsoperimetricProfile exact_profile(const Graph& g, int a,
                                          std::uint64_t subset_budget = kDefaultSubsetBudget) {
    int n = g.vertex_count();
    if (a < 0 || a > n) throw std::invalid_argument("exact_profile: size out of range");
    std::uint64_t subsets = binomial_capped(n, a);
    if (subsets > subset_budget)
        throw BudgetExceeded("exact_profile: C(" + std::to_string(n) + "," + std::to_string(a) +
                             ") = " + std::to_string(subsets) + " exceeds budget " +
                             std::to_string(subset_budget));

    IsoperimetricProfile profile;
    profile.size = a;
    if (a == 0) return profile;  // empty set: I = 0, theta = 0

    detail::BitAdjacency adj(g);
    int words = adj.words;
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(words), 0);
    std::vector<long long> degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<int> combo(static_cast<std::size_t>(a));
    std::iota(combo.begin(), combo.end(), 0);

    long long best_i = -1, best_theta = std::numeric_limits<long long>::max();
    while (true) {
        for (auto& w : mask) w = 0;
        long long deg_sum = 0;
        for (int v : combo) {
            mask[static_cast<std::size_t>(v / 64)] |= 1ull << (v % 64);
            deg_sum += degree[static_cast<std::size_t>(v)];
        }
        long long induced = 0;
        for (int v : combo) induced += detail::count_intersection(adj.row(v), mask.data(), words);
        induced /= 2;
        long long boundary = deg_sum - 2 * induced;

        if (induced > best_i || (induced == best_i && combo < profile.witness_i)) {
            best_i = induced;
            profile.witness_i = combo;
        }
        if (boundary < best_theta || (boundary == best_theta && combo < profile.witness_theta)) {
            best_theta = boundary;
            profile.witness_theta = combo;
        }

        // next combination, colex order
        int p = 0;
        while (p < a && combo[static_cast<std::size_t>(p)] + 1 ==
                            (p + 1 < a ? combo[static_cast<std::size_t>(p + 1)] : n))
            ++p;
        if (p == a) break;
        ++combo[static_cast<std::size_t>(p)];
        for (int t = 0; t < p; ++t) combo[static_cast<std::size_t>(t)] = t;
    }
    profile.i_value = best_i;
    profile.theta_value = best_theta;
    return profile;
}

// Maximum induced-edge count of l successive vertices in G(n; +/-{1..j}).
// Three-branch closed form; the last branch uses l where the usual statement
// misprints another symbol, which makes xi(n) equal the total edge count.
inline long long circulant_xi(int n, int j, int l) {
    if (n < 3) throw std::invalid_argument("circulant_xi: need n >= 3");
    if (j < 1 || j >= n / 2)
        throw std::invalid_argument("circulant_xi: need 1 <= j < floor(n/2)");
    if (l < 1 || l > n) throw std::invalid_argument("circulant_xi: need 1 <= l <= n");
    long long L = l, J = j, N = n;
    if (l <= j + 1) return L * (L - 1) / 2;
    if (l <= n - j) return L * J - J * (J + 1) / 2;
    long long numerator = (N - L) * (N - L) + (4 * J + 1) * L - (2 * J + 1) * N;
    return numerator / 2;
}

// For an r-regular graph, 2 I(a) + theta(a) = r a; recover theta from I.
inline long long theta_from_regularity(int regularity, int a, long long i_value) {
    return static_cast<long long>(regularity) * a - 2 * i_value;
}

// Profile of the initial segment {0, ..., a-1} under the graph's canonical
// labeling. For hypercubes, folded hypercubes and circulants these segments
// are the candidate optimal sets; callers certify the claim separately.
inline IsoperimetricProfile lex_segment_profile(const Graph& g, int a) {
    if (a < 0 || a > g.vertex_count())
        throw std::invalid_argument("lex_segment_profile: size out of range");
    std::vector<int> segment(static_cast<std::size_t>(a));
    std::iota(segment.begin(), segment.end(), 0);
    IsoperimetricProfile profile;
    profile.size = a;
    profile.i_value = induced_edge_count(g, segment);
    profile.theta_value = boundary_edge_count(g, segment);
    profile.witness_i = segment;
    profile.witness_theta = std::move(segment);
    return profile;
}

}  // namespace wirelab

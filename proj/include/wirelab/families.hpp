// families.hpp - constructors for the guest/host graph families and their
// canonical labelings (Gray codes, ladder/star coordinate views)
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wirelab/graph.hpp"

namespace wirelab {

// Reflected binary Gray code of a rank: successive ranks differ in one bit,
// including the wraparound 2^bits-1 -> 0.
inline std::uint32_t gray_code(std::uint32_t rank, int bits) {
    if (bits < 0 || bits > 31) throw std::invalid_argument("gray_code: bits out of range");
    if (rank >= (1u << bits)) throw std::out_of_range("gray_code: rank out of range");
    return rank ^ (rank >> 1);
}

inline std::uint32_t gray_rank(std::uint32_t code, int bits) {
    if (bits < 0 || bits > 31) throw std::invalid_argument("gray_rank: bits out of range");
    if (code >= (1u << bits)) throw std::out_of_range("gray_rank: code out of range");
    std::uint32_t rank = 0;
    for (std::uint32_t x = code; x != 0; x >>= 1) rank ^= x;
    return rank;
}

inline std::string bit_string(std::uint32_t value, int bits) {
    std::string s(static_cast<std::size_t>(bits), '0');
    for (int b = 0; b < bits; ++b)
        if (value & (1u << (bits - 1 - b))) s[static_cast<std::size_t>(b)] = '1';
    return s;
}

// Path with `length` edges (length+1 vertices); length 0 is a single vertex.
inline Graph build_path(int length) {
    if (length < 0) throw std::invalid_argument("build_path: negative length");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
    return Graph(length + 1, std::move(edges));
}

inline Graph build_cycle(int n) {
    if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph build_complete(int n) {
    if (n < 1) throw std::invalid_argument("build_complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// s-dimensional hypercube: vertices are s-bit strings read as integers,
// edges join labels differing in exactly one bit. s = 0 is a single vertex.
inline Graph build_hypercube(int s) {
    if (s < 0 || s > 26) throw std::invalid_argument("build_hypercube: s out of range");
    int n = 1 << s;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < s; ++b) {
            int w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph(n, std::move(edges), Family::hypercube, {s});
}

// Hypercube plus an edge between every vertex and its bitwise complement.
// For s = 1 the complementary edge coincides with the cube edge; the result
// is plain K2.
inline Graph build_folded_hypercube(int s) {
    if (s < 1 || s > 26) throw std::invalid_argument("build_folded_hypercube: s out of range");
    int n = 1 << s;
    std::set<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < s; ++b) {
            int w = v ^ (1 << b);
            edges.emplace(std::min(v, w), std::max(v, w));
        }
        int c = v ^ (n - 1);
        edges.emplace(std::min(v, c), std::max(v, c));
    }
    return Graph(n, {edges.begin(), edges.end()}, Family::folded_hypercube, {s});
}

// Circulant G(n; +/-S): edge (i, i+s mod n) for every jump s in S.
// Jumps must lie in {1, ..., floor(n/2)}; the half-order jump contributes a
// single edge per pair. family_params stores the jump list after n.
inline Graph build_circulant(int n, const std::vector<int>& jumps) {
    if (n < 3) throw std::invalid_argument("build_circulant: need n >= 3");
    if (jumps.empty()) throw std::invalid_argument("build_circulant: empty jump set");
    std::set<int> jump_set;
    for (int s : jumps) {
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("build_circulant: jump " + std::to_string(s) +
                                        " outside {1..floor(n/2)}");
        jump_set.insert(s);
    }
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int s : jump_set) {
            int w = (i + s) % n;
            edges.emplace(std::min(i, w), std::max(i, w));
        }
    std::vector<int> params{n};
    params.insert(params.end(), jump_set.begin(), jump_set.end());
    return Graph(n, {edges.begin(), edges.end()}, Family::circulant, std::move(params));
}

// True when the circulant was built with the contiguous jump set {1..j}.
inline bool circulant_has_prefix_jumps(const Graph& g, int* j_out = nullptr) {
    if (g.family() != Family::circulant) return false;
    const auto& p = g.family_params();
    if (p.size() < 2 || p[0] != g.vertex_count()) return false;
    for (std::size_t t = 1; t < p.size(); ++t)
        if (p[t] != static_cast<int>(t)) return false;
    if (j_out) *j_out = static_cast<int>(p.size()) - 1;
    return true;
}

// The cartesian product: vertex set V(a) x V(b), (a1,b1) ~ (a2,b2) iff one
// coordinate is equal and the other adjacent. Vertex (x, y) gets label
// x * |V(b)| + y.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
    if (a.vertex_count() == 0 || b.vertex_count() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    int nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < a.vertex_count(); ++x)
        for (auto [u, v] : b.edges()) edges.emplace_back(x * nb + u, x * nb + v);
    for (auto [x, y] : a.edges())
        for (int w = 0; w < nb; ++w) edges.emplace_back(x * nb + w, y * nb + w);
    return Graph(a.vertex_count() * nb, std::move(edges), Family::product);
}

// Ladder L(r) = path of length r times K2. Vertex (band b, rung t) gets
// label 2t + b; the rungs are the edges (2t, 2t+1).
inline Graph build_ladder(int r) {
    if (r < 0) throw std::invalid_argument("build_ladder: negative length");
    Graph prod = cartesian_product(build_path(r), build_complete(2));
    return Graph(prod.vertex_count(), prod.edges(), Family::ladder, {r});
}

// Coordinate view of a cycle-of-ladders vertex.
struct ColCoordinates {
    int ladder = 0;  // which ladder, in [0, l)
    int band = 0;    // 0 or 1
    int rung = 0;    // in [0, r]
};

// The canonical COL labeling walks a Hamiltonian cycle: ascend band 0 of a
// ladder from the bottom rung, cross the top rung, descend band 1, then step
// along the bone cycle to the next ladder. Ladder i owns labels
// [2(r+1)i, 2(r+1)(i+1)).
inline int col_label(const ColCoordinates& c, int l, int r) {
    if (c.ladder < 0 || c.ladder >= l || (c.band != 0 && c.band != 1) || c.rung < 0 || c.rung > r)
        throw std::out_of_range("col_label: coordinates out of range");
    int q = r + 1;
    return 2 * q * c.ladder + (c.band == 0 ? c.rung : q + (r - c.rung));
}

inline ColCoordinates col_coordinates(int label, int l, int r) {
    int q = r + 1;
    if (label < 0 || label >= 2 * l * q) throw std::out_of_range("col_coordinates: label out of range");
    ColCoordinates c;
    c.ladder = label / (2 * q);
    int within = label % (2 * q);
    c.band = within < q ? 0 : 1;
    c.rung = within < q ? within : r - (within - q);
    return c;
}

// Cycle-of-ladders COL(l, r): l ladders of length r whose bottom rungs lie on
// a bone cycle. The bone cycle visits (0,0)_0,(1,0)_0,(0,0)_1,(1,0)_1,... so
// every bottom rung is a bone-cycle edge; COL(l,0) collapses to the cycle C_{2l}.
inline Graph build_cycle_of_ladders(int l, int r) {
    if (l < 2) throw std::invalid_argument("build_cycle_of_ladders: need l >= 2");
    if (r < 0) throw std::invalid_argument("build_cycle_of_ladders: negative ladder length");
    std::set<std::pair<int, int>> edges;
    auto add = [&edges](int u, int v) { edges.emplace(std::min(u, v), std::max(u, v)); };
    for (int i = 0; i < l; ++i) {
        for (int t = 0; t <= r; ++t)  // rungs
            add(col_label({i, 0, t}, l, r), col_label({i, 1, t}, l, r));
        for (int t = 0; t < r; ++t) {  // bands
            add(col_label({i, 0, t}, l, r), col_label({i, 0, t + 1}, l, r));
            add(col_label({i, 1, t}, l, r), col_label({i, 1, t + 1}, l, r));
        }
        // bone-cycle edge (1,0)_i -- (0,0)_{i+1}
        add(col_label({i, 1, 0}, l, r), col_label({(i + 1) % l, 0, 0}, l, r));
    }
    return Graph(2 * l * (r + 1), {edges.begin(), edges.end()}, Family::cycle_of_ladders, {l, r});
}

// Coordinate view of a star-of-cycle vertex.
struct StarOfCycleCoordinates {
    bool central = false;
    int cycle = 0;     // which block: central vertex index, or outer-cycle index
    int position = 0;  // position within the outer cycle (outer role only)
};

// Central vertex i gets label i(k+1); outer cycle i gets labels
// i(k+1)+1 .. i(k+1)+k, attached to its central vertex at position 0.
inline int star_label(const StarOfCycleCoordinates& c, int k, int m) {
    if (c.cycle < 0 || c.cycle >= m) throw std::out_of_range("star_label: cycle out of range");
    if (c.central) return c.cycle * (k + 1);
    if (c.position < 0 || c.position >= k) throw std::out_of_range("star_label: position out of range");
    return c.cycle * (k + 1) + 1 + c.position;
}

inline StarOfCycleCoordinates star_coordinates(int label, int k, int m) {
    if (label < 0 || label >= m * (k + 1)) throw std::out_of_range("star_coordinates: label out of range");
    StarOfCycleCoordinates c;
    c.cycle = label / (k + 1);
    int within = label % (k + 1);
    c.central = (within == 0);
    c.position = c.central ? 0 : within - 1;
    return c;
}

// Star of cycle C_k*(m): a central cycle on m vertices, each carrying an
// outer k-cycle joined by a single attachment edge.
inline Graph build_star_of_cycle(int k, int m) {
    if (m < 3 || k < 3) throw std::invalid_argument("build_star_of_cycle: need k >= 3 and m >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int c = i * (k + 1);
        edges.emplace_back(c, ((i + 1) % m) * (k + 1));  // central cycle
        edges.emplace_back(c, c + 1);                    // attachment
        for (int p = 0; p + 1 < k; ++p) edges.emplace_back(c + 1 + p, c + 2 + p);
        edges.emplace_back(c + 1, c + k);                // close the outer cycle
    }
    return Graph(m * (k + 1), std::move(edges), Family::star_of_cycle, {k, m});
}

}  // namespace wirelab

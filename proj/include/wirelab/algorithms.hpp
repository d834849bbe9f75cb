// algorithms.hpp - the two named embedding constructions with their edge-cut
// partitions and the closed-form wirelength evaluators
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wirelab/embedding.hpp"
#include "wirelab/families.hpp"
#include "wirelab/graph.hpp"
#include "wirelab/isoperimetric.hpp"

namespace wirelab {

// Algorithm A: folded hypercube FQ^s into the cycle-of-ladders COL(4, 2^{s-3}-1).
// The guest vertex with Gray rank i sits at host label i (the COL labeling is
// the Hamiltonian traversal, so consecutive host labels are adjacent). Cuts:
//   A_i : all rungs of ladders i and i+2          (2 cuts, 2q edges each)
//   B_j : the bone-cycle edges between ladder pairs (j, j+1), (j+2, j+3)
//   S_i^j : the two band edges of ladder i between rungs r-j and r-j+1
struct AlgorithmAInstance {
    int s = 0;
    Embedding embedding;
    CutPartition cuts;
};

inline AlgorithmAInstance algorithm_a(int s) {
    if (s < 3) throw std::invalid_argument("algorithm_a: need s >= 3");
    int q = 1 << (s - 3);  // rungs per ladder; ladder length r = q - 1
    int r = q - 1;
    Graph guest = build_folded_hypercube(s);
    Graph host = build_cycle_of_ladders(4, r);

    std::vector<int> vertex_map(static_cast<std::size_t>(guest.vertex_count()));
    for (int v = 0; v < guest.vertex_count(); ++v)
        vertex_map[static_cast<std::size_t>(v)] =
            static_cast<int>(gray_rank(static_cast<std::uint32_t>(v), s));

    AlgorithmAInstance instance;
    instance.s = s;
    instance.embedding = route_all(std::move(guest), host, std::move(vertex_map));

    auto rung_edge = [&](int ladder, int t) {
        return std::make_pair(col_label({ladder, 0, t}, 4, r), col_label({ladder, 1, t}, 4, r));
    };
    auto bone_edge = [&](int ladder) {  // (1,0)_ladder -- (0,0)_{ladder+1}
        return std::make_pair(col_label({ladder, 1, 0}, 4, r),
                              col_label({(ladder + 1) % 4, 0, 0}, 4, r));
    };
    auto band_edge = [&](int ladder, int band, int t) {  // rung t -- rung t+1
        return std::make_pair(col_label({ladder, band, t}, 4, r),
                              col_label({ladder, band, t + 1}, 4, r));
    };

    for (int i = 0; i < 2; ++i) {
        std::vector<std::pair<int, int>> edges;
        for (int t = 0; t <= r; ++t) {
            edges.push_back(rung_edge(i, t));
            edges.push_back(rung_edge(i + 2, t));
        }
        instance.cuts.cuts.push_back(make_edge_cut(host, std::move(edges), "A" + std::to_string(i)));
    }
    for (int j = 0; j < 2; ++j) {
        instance.cuts.cuts.push_back(
            make_edge_cut(host, {bone_edge(j), bone_edge(j + 2)}, "B" + std::to_string(j)));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 1; j <= r; ++j) {
            instance.cuts.cuts.push_back(make_edge_cut(
                host, {band_edge(i, 0, r - j), band_edge(i, 1, r - j)},
                "S" + std::to_string(i) + "^" + std::to_string(j)));
        }
    instance.cuts.multiplicity = 1;
    validate_partition(host, instance.cuts);
    return instance;
}

// Closed-form wirelength of Algorithm A: 2^{s+2} + 4 * sum_{j=1}^{2^{s-3}-1}
// theta(2j), with theta taken from the folded hypercube's initial segments.
inline long long closed_form_wirelength_a(int s) {
    if (s < 3) throw std::invalid_argument("closed_form_wirelength_a: need s >= 3");
    Graph guest = build_folded_hypercube(s);
    int q = 1 << (s - 3);
    long long total = 1ll << (s + 2);
    for (int j = 1; j <= q - 1; ++j)
        total += 4 * lex_segment_profile(guest, 2 * j).theta_value;
    return total;
}

// Algorithm B: circulant G(n; +/-{1..j}) into the star of cycle C_k*(m),
// n = m(k+1). Vertex i maps to star label i (central vertex of block i at
// i(k+1), then its outer cycle). Cut families, derived from the host geometry
// and machine-verified downstream:
//   C_c : opposite pairs of central-cycle edges       (sides: runs of blocks)
//   T_i : the attachment edge of outer cycle i         (side: that k-cycle)
//   O_i^p : pairs of outer-cycle edges                 (sides: cycle arcs)
// m even (k even required): the families tile E(host) once. m odd: every host
// edge is covered exactly twice (central pairs rotate, attachment cuts repeat,
// outer pairs rotate all the way around).
enum class ParityCase { even, odd };

struct AlgorithmBInstance {
    int n = 0, j = 0, k = 0, m = 0;
    ParityCase parity = ParityCase::even;
    Embedding embedding;
    CutPartition cuts;
};

inline AlgorithmBInstance algorithm_b(int n, int j, int k, int m) {
    if (m < 3 || k < 3) throw std::invalid_argument("algorithm_b: need k >= 3 and m >= 3");
    if (n != m * (k + 1))
        throw std::invalid_argument("algorithm_b: need n = m(k+1), got n=" + std::to_string(n));
    if (j < 1 || j >= n / 2) throw std::invalid_argument("algorithm_b: need 1 <= j < floor(n/2)");
    bool m_even = (m % 2 == 0);
    if (m_even && k % 2 != 0)
        throw std::invalid_argument("algorithm_b: k odd in even case (need k even when m is even)");

    std::vector<int> jumps(static_cast<std::size_t>(j));
    for (int t = 0; t < j; ++t) jumps[static_cast<std::size_t>(t)] = t + 1;
    Graph guest = build_circulant(n, jumps);
    Graph host = build_star_of_cycle(k, m);

    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) identity[static_cast<std::size_t>(v)] = v;

    AlgorithmBInstance instance;
    instance.n = n;
    instance.j = j;
    instance.k = k;
    instance.m = m;
    instance.parity = m_even ? ParityCase::even : ParityCase::odd;
    instance.embedding = route_all(std::move(guest), host, std::move(identity));

    auto central_edge = [&](int c) {  // central vertex c -- central vertex c+1
        return std::make_pair(c * (k + 1), ((c + 1) % m) * (k + 1));
    };
    auto attachment_edge = [&](int i) {
        return std::make_pair(i * (k + 1), i * (k + 1) + 1);
    };
    auto outer_edge = [&](int i, int t) {  // position t -- position t+1 mod k
        int base = i * (k + 1) + 1;
        return t + 1 < k ? std::make_pair(base + t, base + t + 1) : std::make_pair(base, base + k - 1);
    };

    auto& cuts = instance.cuts.cuts;
    if (m_even) {
        instance.cuts.multiplicity = 1;
        for (int c = 0; c < m / 2; ++c)
            cuts.push_back(make_edge_cut(host, {central_edge(c), central_edge(c + m / 2)},
                                         "C" + std::to_string(c)));
        for (int i = 0; i < m; ++i)
            cuts.push_back(make_edge_cut(host, {attachment_edge(i)}, "T" + std::to_string(i)));
        for (int i = 0; i < m; ++i)
            for (int p = 1; p <= k / 2; ++p)
                cuts.push_back(make_edge_cut(host, {outer_edge(i, p - 1), outer_edge(i, p - 1 + k / 2)},
                                             "O" + std::to_string(i) + "^" + std::to_string(p)));
    } else {
        instance.cuts.multiplicity = 2;
        int central_step = m / 2, outer_step = k / 2;
        for (int c = 0; c < m; ++c)
            cuts.push_back(make_edge_cut(host, {central_edge(c), central_edge((c + central_step) % m)},
                                         "C" + std::to_string(c)));
        for (int i = 0; i < m; ++i) {
            cuts.push_back(make_edge_cut(host, {attachment_edge(i)}, "T" + std::to_string(i) + "a"));
            cuts.push_back(make_edge_cut(host, {attachment_edge(i)}, "T" + std::to_string(i) + "b"));
        }
        for (int i = 0; i < m; ++i)
            for (int a = 0; a < k; ++a)
                cuts.push_back(make_edge_cut(host, {outer_edge(i, a), outer_edge(i, (a + outer_step) % k)},
                                             "O" + std::to_string(i) + "^" + std::to_string(a)));
    }
    validate_partition(host, instance.cuts);
    return instance;
}

// Closed-form wirelength value with a suspect flag. theta comes from the
// circulant regularity identity with the three-branch maximum-subgraph count.
// The odd case floors its non-integral arguments (one of m(k+1)/2, k/2 is
// always fractional there) and is flagged suspect; the value is tabulated for
// comparison, never trusted.
struct FormulaValue {
    long long value = 0;
    bool suspect = false;
};

inline FormulaValue closed_form_wirelength_b(int n, int j, int k, int m) {
    if (m < 2 || k < 2)
        throw std::invalid_argument("closed_form_wirelength_b: need k >= 2 and m >= 2");
    if (n != m * (k + 1))
        throw std::invalid_argument("closed_form_wirelength_b: need n = m(k+1)");
    if (j < 1 || j >= n / 2)
        throw std::invalid_argument("closed_form_wirelength_b: need 1 <= j < floor(n/2)");
    auto theta = [&](int l) {
        return theta_from_regularity(2 * j, l, circulant_xi(n, j, l));
    };
    FormulaValue result;
    if (m % 2 == 0) {
        long long sum = theta(m * (k + 1) / 2) + theta(k);
        for (int t = 1; t <= m / 2; ++t) sum += theta(k / 2);
        result.value = (k / 2) * sum;
        result.suspect = (k % 2 != 0);  // k odd also floors k/2 in the even case
    } else {
        result.suspect = true;  // one of the arguments is always fractional
        long long sum = 0;
        for (int t = 1; t <= m - 1; ++t) sum += theta(m * (k + 1) / 2);
        for (int t = 1; t <= m - 1; ++t) sum += theta(k);
        for (int t = 1; t <= k / 2; ++t) sum += theta(k / 2);
        result.value = sum / 2;
    }
    return result;
}

}  // namespace wirelab

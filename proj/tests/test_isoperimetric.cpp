#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "wirelab/families.hpp"
#include "wirelab/isoperimetric.hpp"

using namespace wirelab;

TEST_CASE("induced and boundary edge counts") {
    Graph c4 = build_cycle(4);
    CHECK(induced_edge_count(c4, {0, 1}) == 1);

    Graph k4 = build_complete(4);
    CHECK(induced_edge_count(k4, {0, 1, 2, 3}) == 6);

    Graph fq3 = build_folded_hypercube(3);
    CHECK(induced_edge_count(fq3, {0, 1, 2, 3}) == 4);

    Graph c8 = build_cycle(8);
    CHECK(boundary_edge_count(c8, {0, 1, 2, 3}) == 2);
    CHECK(boundary_edge_count(c8, {}) == 0);
    std::vector<int> all(8);
    std::iota(all.begin(), all.end(), 0);
    CHECK(boundary_edge_count(c8, all) == 0);

    Graph g82 = build_circulant(8, {1, 2});
    CHECK(boundary_edge_count(g82, {0, 1, 2, 3}) == 6);

    CHECK_THROWS_AS(induced_edge_count(c4, {0, 4}), std::out_of_range);
}

TEST_CASE("exact profiles with witnesses") {
    SECTION("C8 arcs") {
        auto p = exact_profile(build_cycle(8), 4);
        CHECK(p.theta_value == 2);
        CHECK(p.i_value == 3);
        CHECK(p.witness_i == std::vector<int>{0, 1, 2, 3});
        CHECK(p.witness_theta == std::vector<int>{0, 1, 2, 3});
    }
    SECTION("FQ3 adjacent pair") {
        auto p = exact_profile(build_folded_hypercube(3), 2);
        CHECK(p.theta_value == 6);
        CHECK(p.i_value == 1);
    }
    SECTION("Q3 square face") {
        auto p = exact_profile(build_hypercube(3), 4);
        CHECK(p.i_value == 4);
    }
    SECTION("degenerate sizes") {
        Graph c8 = build_cycle(8);
        CHECK(exact_profile(c8, 0).i_value == 0);
        CHECK(exact_profile(c8, 0).theta_value == 0);
        CHECK(exact_profile(c8, 8).i_value == 8);
        CHECK(exact_profile(c8, 8).theta_value == 0);
    }
    SECTION("budget refusal is explicit") {
        CHECK_THROWS_AS(exact_profile(build_hypercube(5), 16, 1000), BudgetExceeded);
    }
}

TEST_CASE("binomial is exact below the cap and saturates at it") {
    CHECK(binomial_capped(8, 4) == 70);
    CHECK(binomial_capped(32, 6) == 906192);
    CHECK(binomial_capped(20, 10) == 184756);
    CHECK(binomial_capped(64, 32, 1'000'000) == 1'000'000);
    CHECK(binomial_capped(5, 7) == 0);
}

TEST_CASE("circulant maximum-subgraph closed form") {
    CHECK(circulant_xi(8, 2, 5) == 7);
    CHECK(circulant_xi(8, 2, 1) == 0);
    CHECK(circulant_xi(8, 2, 8) == 16);  // whole graph: equals |E|
    CHECK_THROWS_AS(circulant_xi(8, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(circulant_xi(8, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(circulant_xi(8, 2, 9), std::invalid_argument);

    SECTION("matches exhaustion on n=8, all jumps and sizes") {
        for (int j = 1; j < 4; ++j) {
            std::vector<int> jumps;
            for (int t = 1; t <= j; ++t) jumps.push_back(t);
            Graph g = build_circulant(8, jumps);
            for (int l = 1; l <= 8; ++l)
                CHECK(circulant_xi(8, j, l) == exact_profile(g, l).i_value);
        }
    }
}

TEST_CASE("regularity identity recovers theta") {
    CHECK(theta_from_regularity(4, 4, 5) == 6);
    CHECK(theta_from_regularity(2, 1, 0) == 2);
    CHECK(theta_from_regularity(4, 8, 16) == 0);

    SECTION("2 I(a) + theta(a) = r a, exhaustively on FQ3 and C8") {
        for (const Graph& g : {build_folded_hypercube(3), build_cycle(8)}) {
            int r = g.regularity();
            REQUIRE(r > 0);
            for (int a = 0; a <= g.vertex_count(); ++a) {
                auto p = exact_profile(g, a);
                CHECK(2 * p.i_value + p.theta_value == static_cast<long long>(r) * a);
            }
        }
    }
}

TEST_CASE("boundary is complement-symmetric") {
    // theta(a) == theta(n-a) for arbitrary graphs
    Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {1, 5}});
    for (int a = 0; a <= 7; ++a)
        CHECK(exact_profile(g, a).theta_value == exact_profile(g, 7 - a).theta_value);
}

TEST_CASE("lex segments attain the exact optimum on small hypercube families") {
    SECTION("Q^s, s <= 4") {
        for (int s = 1; s <= 4; ++s) {
            Graph q = build_hypercube(s);
            for (int a = 0; a <= q.vertex_count(); ++a)
                CHECK(lex_segment_profile(q, a).i_value == exact_profile(q, a).i_value);
        }
    }
    SECTION("FQ^s, s <= 4") {
        for (int s = 2; s <= 4; ++s) {
            Graph fq = build_folded_hypercube(s);
            for (int a = 0; a <= fq.vertex_count(); ++a)
                CHECK(lex_segment_profile(fq, a).i_value == exact_profile(fq, a).i_value);
        }
    }
    SECTION("FQ^5 for a <= 6") {
        Graph fq5 = build_folded_hypercube(5);
        for (int a = 0; a <= 6; ++a)
            CHECK(lex_segment_profile(fq5, a).i_value == exact_profile(fq5, a).i_value);
    }
    SECTION("circulant successive segments, G(8;1,2)") {
        Graph g = build_circulant(8, {1, 2});
        CHECK(lex_segment_profile(g, 5).i_value == 7);
        for (int a = 1; a <= 8; ++a)
            CHECK(lex_segment_profile(g, a).i_value == exact_profile(g, a).i_value);
    }
}

TEST_CASE("witnesses are the lexicographically least attaining sets") {
    // on a path, both {0,1} and {3,4} induce one edge; lex tie-break picks {0,1}
    Graph p = build_path(4);
    auto profile = exact_profile(p, 2);
    CHECK(profile.i_value == 1);
    CHECK(profile.witness_i == std::vector<int>{0, 1});
}

TEST_CASE("witnesses attain the reported values") {
    for (const Graph& g : {build_folded_hypercube(3), build_star_of_cycle(3, 3),
                           build_cycle_of_ladders(2, 1)}) {
        for (int a = 0; a <= g.vertex_count(); ++a) {
            auto p = exact_profile(g, a);
            CHECK(static_cast<int>(p.witness_i.size()) == a);
            CHECK(static_cast<int>(p.witness_theta.size()) == a);
            CHECK(induced_edge_count(g, p.witness_i) == p.i_value);
            CHECK(boundary_edge_count(g, p.witness_theta) == p.theta_value);
        }
    }
}

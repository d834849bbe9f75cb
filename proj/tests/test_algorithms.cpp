#include <catch2/catch_amalgamated.hpp>

#include "wirelab/algorithms.hpp"
#include "wirelab/report.hpp"

using namespace wirelab;

TEST_CASE("algorithm A structure") {
    SECTION("s=3 host is the 8-cycle") {
        AlgorithmAInstance instance = algorithm_a(3);
        CHECK(instance.embedding.host.vertex_count() == 8);
        CHECK(instance.embedding.host.edge_count() == 8);
        CHECK(instance.embedding.host.regularity() == 2);
        CHECK(instance.cuts.cuts.size() == 4);  // two rung cuts, two bone cuts
    }
    SECTION("s=4: 8 cuts partition the 20 host edges") {
        AlgorithmAInstance instance = algorithm_a(4);
        CHECK(instance.embedding.host.vertex_count() == 16);
        CHECK(instance.embedding.host.edge_count() == 20);
        CHECK(instance.cuts.cuts.size() == 8);  // 2 + 2 + 4*1
        std::size_t covered = 0;
        for (const auto& cut : instance.cuts.cuts) covered += cut.edges.size();
        CHECK(covered == 20);
    }
    SECTION("s=5: 16 cuts partition the 44 host edges") {
        AlgorithmAInstance instance = algorithm_a(5);
        CHECK(instance.embedding.host.vertex_count() == 32);
        CHECK(instance.embedding.host.edge_count() == 44);
        CHECK(instance.cuts.cuts.size() == 16);  // 2 + 2 + 4*3
    }
    SECTION("the vertex map is the Gray ranking and host labels form a Hamiltonian cycle") {
        AlgorithmAInstance instance = algorithm_a(4);
        const auto& map = instance.embedding.vertex_map;
        std::vector<char> hit(16, 0);
        for (int h : map) hit[static_cast<std::size_t>(h)] = 1;
        for (char c : hit) CHECK(c == 1);
        const Graph& host = instance.embedding.host;
        for (int label = 0; label < 16; ++label) CHECK(host.has_edge(label, (label + 1) % 16));
        // guest vertex with Gray rank i sits at host label i
        for (int v = 0; v < 16; ++v) CHECK(map[static_cast<std::size_t>(v)] == static_cast<int>(gray_rank(v, 4)));
    }
    CHECK_THROWS_AS(algorithm_a(2), std::invalid_argument);
}

TEST_CASE("algorithm A wirelength agreement") {
    for (int s : {3, 4}) {
        AlgorithmAInstance instance = algorithm_a(s);
        long long by_distance = wirelength_by_distance(instance.embedding);
        long long by_cuts = wirelength_by_cuts(instance.embedding, instance.cuts);
        CHECK(by_distance == by_cuts);
        CHECK(by_distance == closed_form_wirelength_a(s));
    }
    CHECK(closed_form_wirelength_a(3) == 32);
    CHECK(closed_form_wirelength_a(4) == 96);   // 64 + 4*theta_{FQ4}(2) = 64 + 4*8
    CHECK(closed_form_wirelength_a(5) == 320);  // 128 + 4*(10+16+22)
}

TEST_CASE("algorithm B preconditions") {
    CHECK_THROWS_AS(algorithm_b(16, 1, 3, 4), std::invalid_argument);   // k odd in even case
    CHECK_THROWS_AS(algorithm_b(21, 2, 4, 4), std::invalid_argument);   // n != m(k+1)
    CHECK_THROWS_AS(algorithm_b(20, 10, 4, 4), std::invalid_argument);  // j too large
    CHECK_THROWS_AS(algorithm_b(20, 0, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(algorithm_b(8, 1, 3, 2), std::invalid_argument);    // m < 3
}

TEST_CASE("algorithm B even case") {
    AlgorithmBInstance instance = algorithm_b(20, 2, 4, 4);
    CHECK(instance.parity == ParityCase::even);
    CHECK(instance.embedding.host.vertex_count() == 20);
    CHECK(instance.embedding.host.edge_count() == 24);
    CHECK(instance.cuts.multiplicity == 1);
    // m/2 central pair cuts + m attachment cuts + m*(k/2) outer pair cuts
    CHECK(instance.cuts.cuts.size() == 2 + 4 + 8);

    long long by_distance = wirelength_by_distance(instance.embedding);
    long long by_cuts = wirelength_by_cuts(instance.embedding, instance.cuts);
    CHECK(by_distance == 84);
    CHECK(by_cuts == 84);

    for (const auto& cut : instance.cuts.cuts)
        CHECK(verify_cut_minimality(instance.embedding, cut).passed());
}

TEST_CASE("algorithm B odd case uses a multiplicity-2 cover") {
    AlgorithmBInstance instance = algorithm_b(12, 2, 3, 3);
    CHECK(instance.parity == ParityCase::odd);
    CHECK(instance.cuts.multiplicity == 2);
    CHECK(instance.embedding.host.edge_count() == 15);
    CHECK(instance.cuts.cuts.size() == 3 + 6 + 9);
    std::size_t covered = 0;
    for (const auto& cut : instance.cuts.cuts) covered += cut.edges.size();
    CHECK(covered == 30);  // every host edge exactly twice

    long long by_distance = wirelength_by_distance(instance.embedding);
    CHECK(by_distance == 48);
    CHECK(wirelength_by_cuts(instance.embedding, instance.cuts) == by_distance);

    for (const auto& cut : instance.cuts.cuts)
        CHECK(verify_cut_minimality(instance.embedding, cut).passed());
}

TEST_CASE("algorithm B odd case with even outer cycles") {
    AlgorithmBInstance instance = algorithm_b(15, 2, 4, 3);
    CHECK(instance.cuts.multiplicity == 2);
    long long by_distance = wirelength_by_distance(instance.embedding);
    CHECK(by_distance == 63);
    CHECK(wirelength_by_cuts(instance.embedding, instance.cuts) == by_distance);
}

TEST_CASE("closed-form wirelength for algorithm B") {
    SECTION("even case evaluates the printed formula") {
        FormulaValue v = closed_form_wirelength_b(20, 2, 4, 4);
        CHECK(v.value == 48);  // 2*(theta(10)+theta(4)+2*theta(2)) = 2*(6+6+12)
        CHECK_FALSE(v.suspect);
    }
    SECTION("m=2 exercises only the evaluator") {
        FormulaValue v = closed_form_wirelength_b(10, 2, 4, 2);
        CHECK(v.value == 36);  // 2*(theta(5)+theta(4)+theta(2)) = 2*(6+6+6)
        CHECK_FALSE(v.suspect);
    }
    SECTION("odd case floors its arguments and is flagged suspect") {
        FormulaValue v = closed_form_wirelength_b(12, 2, 3, 3);
        CHECK(v.suspect);
        CHECK(v.value == 14);  // (2*theta(6) + 2*theta(3) + theta(1))/2 = (12+12+4)/2
    }
    SECTION("whole-graph theta contributes zero") {
        CHECK(theta_from_regularity(4, 20, circulant_xi(20, 2, 20)) == 0);
    }
}

TEST_CASE("report rows expose the agreement and suspect flags") {
    InstanceReport a4 = report_algorithm_a(4);
    CHECK(a4.row.wl_distance == 96);
    CHECK(a4.row.wl_cuts == 96);
    CHECK(a4.row.wl_formula == 96);
    CHECK(a4.row.formula_agrees);
    CHECK_FALSE(a4.row.formula_suspect);
    CHECK(a4.row.all_cuts_verified);
    CHECK(verification_passed(a4));

    InstanceReport b = report_algorithm_b(20, 2, 4, 4);
    CHECK(b.row.wl_distance == 84);
    CHECK(b.row.wl_cuts == 84);
    CHECK(b.row.wl_formula == 48);
    CHECK_FALSE(b.row.formula_agrees);  // the printed formula disagrees with the measurement
    CHECK(b.row.all_cuts_verified);
    CHECK(verification_passed(b));  // formula agreement does not gate algorithm B

    InstanceReport odd = report_algorithm_b(12, 2, 3, 3);
    CHECK(odd.row.formula_suspect);
    CHECK(odd.row.wl_distance == odd.row.wl_cuts);
    CHECK(verification_passed(odd));
}

// wirelab - batch front door: build the graph families, run the embedding
// algorithms, verify cut certificates, run the brute-force oracle, export
// reports as JSON/CSV/DOT
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wirelab/algorithms.hpp"
#include "wirelab/families.hpp"
#include "wirelab/io.hpp"
#include "wirelab/oracle.hpp"
#include "wirelab/report.hpp"

namespace {

constexpr int kExitVerificationFailure = 2;
constexpr int kExitBudgetRefusal = 3;
constexpr int kExitInvalidParameters = 4;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

// Designator mini-syntax: name:p1,p2 with a trailing-digit shorthand
// (fq3 == fq:3). Names: q/hypercube, fq/folded-hypercube, circ/circulant
// (n,j for jumps {1..j}), cycle, path, complete, ladder, col, star.
wirelab::Graph parse_family_spec(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            params.push_back(std::stoi(rest.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    } else {
        auto digits = spec.find_first_of("0123456789");
        if (digits != std::string::npos) {
            name = spec.substr(0, digits);
            params.push_back(std::stoi(spec.substr(digits)));
        }
    }
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw std::invalid_argument("designator '" + spec + "': expected " +
                                        std::to_string(count) + " parameter(s)");
    };
    using namespace wirelab;
    if (name == "q" || name == "hypercube") { need(1); return build_hypercube(params[0]); }
    if (name == "fq" || name == "folded-hypercube") { need(1); return build_folded_hypercube(params[0]); }
    if (name == "circ" || name == "circulant") {
        need(2);
        std::vector<int> jumps;
        for (int t = 1; t <= params[1]; ++t) jumps.push_back(t);
        return build_circulant(params[0], jumps);
    }
    if (name == "cycle") { need(1); return build_cycle(params[0]); }
    if (name == "path") { need(1); return build_path(params[0]); }
    if (name == "complete") { need(1); return build_complete(params[0]); }
    if (name == "ladder") { need(1); return build_ladder(params[0]); }
    if (name == "col" || name == "cycle-of-ladders") { need(2); return build_cycle_of_ladders(params[0], params[1]); }
    if (name == "star" || name == "star-of-cycle") { need(2); return build_star_of_cycle(params[0], params[1]); }
    throw std::invalid_argument("unknown family designator: " + spec);
}

struct FamilyFlags {
    int s = -1, n = -1, j = -1, k = -1, m = -1, l = -1, r = -1;
};

wirelab::Graph build_from_flags(const std::string& family, const FamilyFlags& f) {
    using namespace wirelab;
    auto need = [&](int value, const char* flag) {
        if (value < 0) throw std::invalid_argument("family '" + family + "' requires --" + flag);
        return value;
    };
    if (family == "hypercube" || family == "q") return build_hypercube(need(f.s, "s"));
    if (family == "folded-hypercube" || family == "fq") return build_folded_hypercube(need(f.s, "s"));
    if (family == "circulant" || family == "circ") {
        std::vector<int> jumps;
        for (int t = 1; t <= need(f.j, "j"); ++t) jumps.push_back(t);
        return build_circulant(need(f.n, "n"), jumps);
    }
    if (family == "ladder") return build_ladder(need(f.r, "r"));
    if (family == "cycle-of-ladders" || family == "col")
        return build_cycle_of_ladders(need(f.l, "l"), need(f.r, "r"));
    if (family == "star-of-cycle" || family == "star")
        return build_star_of_cycle(need(f.k, "k"), need(f.m, "m"));
    if (family == "cycle") return build_cycle(need(f.n, "n"));
    if (family == "path") return build_path(need(f.r, "r"));
    if (family == "complete") return build_complete(need(f.n, "n"));
    throw std::invalid_argument("unknown family: " + family);
}

wirelab::InstanceReport run_instance(const std::string& algorithm, const FamilyFlags& f,
                                     std::uint64_t subset_budget, bool run_oracle) {
    if (algorithm == "A") {
        if (f.s < 0) throw std::invalid_argument("--algorithm A requires --s");
        return wirelab::report_algorithm_a(f.s, subset_budget, run_oracle);
    }
    if (f.n < 0 || f.j < 0 || f.k < 0 || f.m < 0)
        throw std::invalid_argument("--algorithm B requires --n --j --k --m");
    return wirelab::report_algorithm_b(f.n, f.j, f.k, f.m, subset_budget, run_oracle);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph embedding wirelength laboratory"};
    app.require_subcommand(1);

    FamilyFlags flags;
    std::string family, format = "json", out_path, algorithm = "A";
    std::string guest_spec, host_spec;
    std::uint64_t subset_budget = wirelab::kDefaultSubsetBudget;
    std::uint64_t permutation_budget = wirelab::kDefaultPermutationBudget;
    bool with_oracle = false;
    std::string embedding_out;

    auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("--s", flags.s, "dimension (hypercube families)");
        cmd->add_option("--n", flags.n, "order (circulant/cycle/complete)");
        cmd->add_option("--j", flags.j, "largest jump; jump set is {1..j}");
        cmd->add_option("--k", flags.k, "outer cycle length (star-of-cycle)");
        cmd->add_option("--m", flags.m, "central cycle length (star-of-cycle)");
        cmd->add_option("--l", flags.l, "ladder count (cycle-of-ladders)");
        cmd->add_option("--r", flags.r, "ladder/path length");
    };

    auto* build = app.add_subcommand("build", "construct a graph family and export it");
    build->add_option("--family", family, "family name")->required();
    add_family_flags(build);
    build->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* embed = app.add_subcommand("embed", "run an embedding algorithm and report wirelengths");
    embed->add_option("--algorithm", algorithm, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
    add_family_flags(embed);
    embed->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    embed->add_option("--budget", subset_budget, "subset budget for exhaustive certification");
    embed->add_flag("--oracle", with_oracle, "also run the brute-force oracle");
    embed->add_option("--embedding-out", embedding_out, "write the embedding JSON to a file");
    embed->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "verify the cut certificates of an embedding");
    verify->add_option("--algorithm", algorithm, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
    add_family_flags(verify);
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--budget", subset_budget, "subset budget for exhaustive certification");
    verify->add_flag("--oracle", with_oracle, "also gate on the brute-force oracle");
    verify->add_option("--out", out_path, "output file (default stdout)");

    auto* oracle = app.add_subcommand("oracle", "brute-force minimum wirelength over all bijections");
    oracle->add_option("--guest", guest_spec, "guest designator, e.g. fq3 or circ:8,2")->required();
    oracle->add_option("--host", host_spec, "host designator, e.g. col:4,0")->required();
    oracle->add_option("--budget", permutation_budget, "permutation budget (default 10!)");
    oracle->add_option("--out", out_path, "output file (default stdout)");

    auto* report = app.add_subcommand("report", "run the standard sweep and tabulate all instances");
    report->add_option("--algorithm", algorithm, "restrict to A or B")->check(CLI::IsMember({"A", "B"}));
    report->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--budget", subset_budget, "subset budget for exhaustive certification");
    report->add_flag("--oracle", with_oracle, "add the brute-force column where the instance fits");
    report->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            wirelab::Graph g = build_from_flags(family, flags);
            write_output(format == "dot" ? wirelab::graph_to_dot(g) : wirelab::graph_to_json(g).dump(2) + "\n",
                         out_path);
            return 0;
        }
        if (embed->parsed() || verify->parsed()) {
            wirelab::InstanceReport result = run_instance(algorithm, flags, subset_budget, with_oracle);
            if (!embedding_out.empty()) {
                if (algorithm == "A") {
                    auto instance = wirelab::algorithm_a(flags.s);
                    write_output(wirelab::embedding_to_json(instance.embedding).dump(2) + "\n", embedding_out);
                } else {
                    auto instance = wirelab::algorithm_b(flags.n, flags.j, flags.k, flags.m);
                    write_output(wirelab::embedding_to_json(instance.embedding).dump(2) + "\n", embedding_out);
                }
            }
            if (embed->parsed()) {
                write_output(format == "csv"
                                 ? std::string(wirelab::report_csv_header()) + "\n" +
                                       wirelab::report_csv_row(result.row) + "\n"
                                 : wirelab::report_row_json(result.row).dump(2) + "\n",
                             out_path);
                return 0;
            }
            // verify: emit verdicts, gate on the soundness flags
            nlohmann::json verdicts = nlohmann::json::array();
            for (const auto& v : result.verdicts) verdicts.push_back(wirelab::verdict_to_json(v));
            nlohmann::json summary{{"row", wirelab::report_row_json(result.row)},
                                   {"verdicts", verdicts},
                                   {"passed", wirelab::verification_passed(result)}};
            write_output(summary.dump(2) + "\n", out_path);
            if (!wirelab::verification_passed(result)) {
                for (const auto& v : result.verdicts)
                    if (!v.passed())
                        std::cerr << "verification failed: cut " << v.cut_tag << "\n";
                if (result.row.wl_distance != result.row.wl_cuts)
                    std::cerr << "verification failed: wl_distance != wl_cuts\n";
                if (algorithm == "A" && !result.row.formula_agrees)
                    std::cerr << "verification failed: closed form disagrees with measured wirelength\n";
                return kExitVerificationFailure;
            }
            return 0;
        }
        if (oracle->parsed()) {
            wirelab::Graph guest = parse_family_spec(guest_spec);
            wirelab::Graph host = parse_family_spec(host_spec);
            wirelab::OracleResult result =
                wirelab::brute_force_min_wirelength(guest, host, permutation_budget);
            nlohmann::json out{{"minimum_wirelength", result.minimum_wirelength},
                               {"witness_map", result.witness_map},
                               {"searched", result.searched},
                               {"pruned", result.pruned}};
            write_output(out.dump(2) + "\n", out_path);
            return 0;
        }
        if (report->parsed()) {
            bool want_a = !report->count("--algorithm") || algorithm == "A";
            bool want_b = !report->count("--algorithm") || algorithm == "B";
            auto reports = wirelab::standard_sweep(subset_budget, want_a, want_b, with_oracle);
            std::vector<wirelab::ReportRow> rows;
            bool all_passed = true;
            for (const auto& rep : reports) {
                rows.push_back(rep.row);
                if (!wirelab::verification_passed(rep)) all_passed = false;
            }
            write_output(format == "csv" ? wirelab::report_csv(rows)
                                         : wirelab::report_json(rows).dump(2) + "\n",
                         out_path);
            return all_passed ? 0 : kExitVerificationFailure;
        }
    } catch (const wirelab::BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudgetRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParameters;
    }
    return 0;
}

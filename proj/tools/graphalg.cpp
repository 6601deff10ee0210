#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphalg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

graphalg::Graph load(const std::string& path) { return graphalg::parse_graph(read_file(path)); }

void emit(const graphalg::json& report, bool as_json,
          std::string (*text_renderer)(const graphalg::json&)) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text_renderer(report);
}

std::pair<int, int> parse_witness_arg(const std::string& arg) {
    auto colon = arg.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--witness expects V:COUNT, e.g. 1:3");
    return {std::stoi(arg.substr(0, colon)), std::stoi(arg.substr(colon + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphalg: combinatorial analyzer for graph C*-algebras"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;
    std::string witness_arg;
    int max_vertices = 4, max_mult = 1, workers = 1;
    bool dedup = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one graph");
    analyze->add_option("file", file)->required();
    analyze->add_flag("--json", as_json);

    CLI::App* ideals = app.add_subcommand("ideals", "saturated hereditary lattice");
    ideals->add_option("file", file)->required();
    ideals->add_flag("--json", as_json);

    CLI::App* decompose = app.add_subcommand("decompose", "V0|V1|V2 decomposition search");
    decompose->add_option("file", file)->required();
    decompose->add_flag("--json", as_json);
    decompose->add_option("--witness", witness_arg, "stability witness request V:COUNT");

    CLI::App* table = app.add_subcommand("table", "single-ideal dimension table");
    table->add_flag("--json", as_json);

    CLI::App* census = app.add_subcommand("census", "exhaustive small-graph census");
    census->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 6));
    census->add_option("--max-mult", max_mult)->check(CLI::Range(1, 8));
    census->add_flag("--dedup", dedup);
    census->add_option("--workers", workers)->check(CLI::Range(1, 256));
    census->add_flag("--json", as_json);

    CLI::App* export_dot = app.add_subcommand("export-dot", "DOT rendering of a graph file");
    export_dot->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            emit(graphalg::build_report(load(file)), as_json, graphalg::render_report_text);
        } else if (ideals->parsed()) {
            emit(graphalg::build_ideals_report(load(file)), as_json,
                 graphalg::render_ideals_text);
        } else if (decompose->parsed()) {
            std::optional<std::pair<int, int>> witness;
            if (!witness_arg.empty()) witness = parse_witness_arg(witness_arg);
            emit(graphalg::build_decompose_report(load(file), witness), as_json,
                 graphalg::render_decompose_text);
        } else if (table->parsed()) {
            emit(graphalg::build_table_report(), as_json, graphalg::render_table_text);
        } else if (census->parsed()) {
            graphalg::EnumSpec spec{max_vertices, max_mult, dedup};
            graphalg::CensusStats stats = graphalg::run_census(spec, workers);
            emit(graphalg::to_json(stats, spec), as_json, graphalg::render_census_text);
            if (!stats.oracle_disagreements.empty() || stats.question.exact_at_least_2 > 0)
                return kExitInvariant;
        } else if (export_dot->parsed()) {
            std::cout << graphalg::to_dot(load(file));
        }
    } catch (const graphalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const graphalg::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const graphalg::InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

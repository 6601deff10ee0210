// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "graphalg/census.hpp"
#include "graphalg/classify.hpp"
#include "graphalg/closure.hpp"
#include "graphalg/gate.hpp"
#include "graphalg/report.hpp"

using namespace graphalg;

namespace {

struct Failure {
    std::string message;
};

void require(bool cond, const std::string& message) {
    if (!cond) throw Failure{message};
}

Graph load_fixture(const std::string& name) {
    std::ifstream in(std::string(GRAPHALG_FIXTURE_DIR) + "/" + name);
    require(in.good(), "missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

double run_seconds(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

std::string run_cli_stdout(const std::string& args, int* exit_code) {
    std::string cmd = std::string(GRAPHALG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot spawn CLI");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    *exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

bool contains(const std::vector<std::string>& haystack, const std::string& needle) {
    for (const std::string& s : haystack)
        if (s == needle) return true;
    return false;
}

bool trace_mentions(const DimNucVerdict& v, const std::string& needle) {
    for (const std::string& line : v.trace)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

// --- criteria -------------------------------------------------------------

void criterion_toeplitz() {
    Graph g = load_fixture("toeplitz.graph");
    DimNucVerdict v;
    double secs = run_seconds([&] { v = verdict(g); });
    require(v.estimate.exact && v.estimate.lower == 1 && v.estimate.upper == 1,
            "expected exact dim_nuc = 1");
    require(v.route == DimRoute::SingleIdealTable, "expected the single-ideal table route");
    require(contains(v.citations, "GT22") && contains(v.citations, "BW19"),
            "expected citations GT22 and BW19");
    require(secs < 1.0, "verdict took " + std::to_string(secs) + "s, budget 1s");
}

void criterion_kirchberg() {
    Graph two = load_fixture("loop2.graph");
    DimNucVerdict v2;
    double secs2 = run_seconds([&] { v2 = verdict(two); });
    AlgebraClass cls2 = classify_graph_algebra(two);
    require(cls2.kind == AlgebraClassKind::Kirchberg, "two loops must classify Kirchberg");
    require(v2.estimate.exact && v2.estimate.lower == 1, "Kirchberg verdict must be exact 1");
    require(secs2 < 1.0, "two-loop verdict over budget");

    Graph one = load_fixture("loop1.graph");
    DimNucVerdict v1;
    double secs1 = run_seconds([&] { v1 = verdict(one); });
    AlgebraClass cls1 = classify_graph_algebra(one);
    require(cls1.kind == AlgebraClassKind::SimpleCycle && cls1.circle_lengths == std::vector<int>{1},
            "one loop must classify SimpleCycle(1)");
    require(v1.estimate.exact && v1.estimate.lower == 1, "simple-cycle verdict must be exact 1");
    require(secs1 < 1.0, "one-loop verdict over budget");
}

void criterion_gate_positive() {
    Graph g = load_fixture("k1.graph");
    GateVerdict gate = decompose(g);
    require(gate.covered, "K1 must be covered");
    const Decomposition& d = *gate.decomposition;
    require(d.v0 == VertexSet::of({0}) && d.v1.empty() && d.v2 == VertexSet::of({1}),
            "expected V0={0}, V1={}, V2={1}");
    require(d.circles.size() == 1 && d.circles[0].length == 1,
            "expected one circle of length 1");
    require(std::holds_alternative<Decomposition>(check_conditions(g, d.v0, d.v1, d.v2)),
            "decomposition must re-pass check_conditions");
    DimNucVerdict v = verdict(g);
    require(v.route == DimRoute::Gate && v.estimate.exact && v.estimate.lower == 1,
            "expected exact 1 via the gate");
    require(contains(v.citations, "ThmMain") && contains(v.citations, "CorStableQuotient"),
            "expected ThmMain and CorStableQuotient citation keys");
}

void criterion_open_cells() {
    DimNucVerdict a = verdict(load_fixture("u1.graph"));
    DimNucVerdict b = verdict(load_fixture("u2.graph"));
    require(a.estimate.status == DimStatus::Open, "U1 must be Open");
    require(b.estimate.status == DimStatus::Open, "U2 must be Open");
    require(a.table_cell && b.table_cell && *a.table_cell != *b.table_cell,
            "U1 and U2 must land in distinct cells");
    require(*a.table_cell == "(cycle without exit, cycle without exit)",
            "U1 cell mismatch: " + *a.table_cell);
    require(*b.table_cell == "(cycle with exit, cycle without exit)",
            "U2 cell mismatch: " + *b.table_cell);
    require(a.estimate.upper == 3 && b.estimate.upper == 3, "expected upper bound 3");
    require(trace_mentions(a, "1 + 1 + 1 = 3") && trace_mentions(b, "1 + 1 + 1 = 3"),
            "expected the extension-bound arithmetic in the trace");
}

void criterion_oracle_census() {
    int workers = 2;
    CensusStats small = run_census(EnumSpec{3, 2, false}, workers);
    require(small.total == 19767, "n<=3 mult<=2 census must see 19767 graphs");
    require(small.oracle_disagreements.empty(), "n<=3 census found oracle disagreements");
    CensusStats big = run_census(EnumSpec{4, 1, false}, workers);
    require(big.total == 66066, "n<=4 mult<=1 census must see 66066 graphs");
    require(big.strata.back().raw == 65536, "n=4 stratum must hold 65536 graphs");
    require(big.oracle_disagreements.empty(), "n=4 census found oracle disagreements");
}

void criterion_closure_laws() {
    std::mt19937 rng(12345);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        std::uniform_int_distribution<int> nv(1, 6);
        int n = nv(rng);
        std::uniform_int_distribution<int> count(0, 2 * n);
        std::uniform_int_distribution<int> vert(0, n - 1);
        std::vector<std::pair<int, int>> edges;
        int m = count(rng);
        for (int e = 0; e < m; ++e) edges.emplace_back(vert(rng), vert(rng));
        Graph g(n, edges);
        std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << n) - 1);
        VertexSet v = VertexSet::from_bits(bits(rng));
        VertexSet w = VertexSet::from_bits(bits(rng)) | v;

        VertexSet hv = hereditary_closure(g, v);
        VertexSet sv = saturation(g, v);
        if (!v.is_subset_of(hv) || !v.is_subset_of(sv)) ++violations;
        if (!hv.is_subset_of(hereditary_closure(g, w))) ++violations;
        if (!sv.is_subset_of(saturation(g, w))) ++violations;
        if (hereditary_closure(g, hv) != hv || saturation(g, sv) != sv) ++violations;
        if (is_hereditary(g, v) && !is_hereditary(g, sv)) ++violations;
    }
    require(violations == 0, std::to_string(violations) + " closure-law violations");
}

void criterion_formula_vs_fixpoint() {
    long checked = 0;
    enumerate_graphs(EnumSpec{3, 2, false}, [&](const Graph& g) {
        if (!has_no_sinks(g)) return;
        std::uint64_t total = std::uint64_t{1} << g.vertex_count();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            VertexSet v = VertexSet::from_bits(bits);
            VertexSet formula = saturation_formula(g, v);
            require(formula.is_subset_of(saturation(g, v)),
                    "formula must sit inside the saturation");
            if (is_hereditary(g, v)) {
                require(formula == saturation(g, v),
                        "formula must equal the saturation on hereditary sets");
                ++checked;
            }
        }
    });
    require(checked > 0, "no hereditary sets checked");
}

void criterion_circle_data() {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
        Graph g(n, edges);
        AlgebraClass cls = classify_graph_algebra(g);
        require(cls.kind == AlgebraClassKind::SimpleCycle, "simple n-cycle must classify so");
        require(cls.circle_lengths == std::vector<int>{n}, "expected circle length list [n]");
        require(render_class(cls) == "M_" + std::to_string(n) + "(C(T))",
                "expected rendering M_n(C(T)), got " + render_class(cls));
    }
}

void criterion_table() {
    int exit_code = 0;
    std::string text = run_cli_stdout("table", &exit_code);
    require(exit_code == 0, "table subcommand failed");
    for (const char* needle :
         {"1 [FS23]", "1 [CorStableQuotient]", "1 [GT22]", "1 [RSS15]", "1 [WZ10]", "0 [WZ10]",
          "?"})
        require(text.find(needle) != std::string::npos,
                std::string("table rendering misses `") + needle + "`");
    json t = build_table_report();
    int ones = 0, zeros = 0, opens = 0;
    for (const json& row : t["table"])
        for (const json& cell : row["cells"]) {
            if (cell["value"] == "1") ++ones;
            if (cell["value"] == "0") ++zeros;
            if (cell["value"] == "?") ++opens;
        }
    require(ones == 6 && zeros == 1 && opens == 2, "table cell counts must be 6/1/2");
}

void criterion_determinism() {
    std::string fixtures = GRAPHALG_FIXTURE_DIR;
    for (const char* cmd : {"analyze --json ", "ideals --json ", "decompose --json "}) {
        int code_a = 0, code_b = 0;
        std::string a = run_cli_stdout(std::string(cmd) + fixtures + "/k1.graph", &code_a);
        std::string b = run_cli_stdout(std::string(cmd) + fixtures + "/k1.graph", &code_b);
        require(code_a == 0 && code_b == 0, "command failed");
        require(!a.empty() && a == b, "outputs differ between runs");
    }
    CensusStats one = run_census(EnumSpec{3, 2, false}, 1);
    CensusStats four = run_census(EnumSpec{3, 2, false}, 4);
    require(one == four, "census stats depend on worker count");
}

void criterion_question() {
    CensusStats small = run_census(EnumSpec{3, 2, false}, 2);
    CensusStats big = run_census(EnumSpec{4, 1, false}, 2);
    require(small.question.exact_at_least_2 == 0 && big.question.exact_at_least_2 == 0,
            "census reported an exact verdict >= 2");
    int exit_code = 0;
    run_cli_stdout("census --max-vertices 3 --max-mult 1 --json", &exit_code);
    require(exit_code == 0, "census subcommand must exit 0 on a clean run");
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        std::function<void()> fn;
    };
    // Criterion 5 runs the two census sweeps; 10 and 11 reuse smaller runs.
    std::vector<Criterion> criteria = {
        {1, "Toeplitz: exact 1 via table with GT22/BW19", criterion_toeplitz},
        {2, "Kirchberg and simple-cycle one-vertex graphs", criterion_kirchberg},
        {3, "gate positive case K1", criterion_gate_positive},
        {4, "open cells U1/U2 with bound 3", criterion_open_cells},
        {5, "oracle equivalence census (19767 + 66066 graphs)", criterion_oracle_census},
        {6, "closure laws on 1000 random pairs", criterion_closure_laws},
        {7, "path formula vs fixpoint saturation", criterion_formula_vs_fixpoint},
        {8, "circle data for simple n-cycles", criterion_circle_data},
        {9, "table completeness", criterion_table},
        {10, "byte-identical reruns, worker independence", criterion_determinism},
        {11, "census consistency: no exact verdict >= 2", criterion_question},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            double secs = run_seconds(c.fn);
            std::printf("PASS  criterion %2d: %s (%.2fs)\n", c.number, c.label, secs);
        } catch (const Failure& f) {
            ++failures;
            std::printf("FAIL  criterion %2d: %s -- %s\n", c.number, c.label, f.message.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  criterion %2d: %s -- unexpected error: %s\n", c.number, c.label,
                        e.what());
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

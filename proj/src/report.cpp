#include "graphalg/report.hpp"

#include <cstdio>

#include "graphalg/classify.hpp"
#include "graphalg/closure.hpp"
#include "graphalg/dimnuc.hpp"

namespace graphalg {

namespace {

json vertices_json(VertexSet v) {
    json out = json::array();
    for (int x : v.vertices()) out.push_back(x);
    return out;
}

json lattice_json(const Graph& g, const SatHerLattice& lattice) {
    json elements = json::array();
    int nontrivial = 0;
    for (const VertexSet& v : lattice.elements) {
        bool trivial = v.empty() || v == g.all_vertices();
        if (!trivial) ++nontrivial;
        elements.push_back(json{{"vertices", vertices_json(v)}, {"trivial", trivial}});
    }
    json covering = json::array();
    for (const auto& [lo, hi] : lattice.covering) covering.push_back(json::array({lo, hi}));
    return json{{"elements", elements}, {"nontrivialCount", nontrivial}, {"covering", covering}};
}

json cycles_json(const Graph& g) {
    CycleClass cc = classify_cycles(g);
    json family = json::array();
    for (const CircleComponent& c : cycles_without_exit_family(g))
        family.push_back(json{{"vertices", vertices_json(c.vertices)}, {"length", c.length}});
    json out;
    out["cycleClass"] = to_string(cc.kind);
    out["witness"] = cc.witness ? json(path_to_string(*cc.witness)) : json(nullptr);
    out["conditionK"] = has_condition_K(g);
    out["conditionL"] = has_condition_L(g);
    out["exitlessCycleFamily"] = family;
    return out;
}

json class_json(const Graph& g) {
    AlgebraClass cls = classify_graph_algebra(g);
    json lengths = json::array();
    for (int n : cls.circle_lengths) lengths.push_back(n);
    return json{{"kind", to_string(cls.kind)},
                {"circleLengths", lengths},
                {"rendered", render_class(cls)},
                {"simple", cls.simple}};
}

json gate_json(const GateVerdict& gate) {
    json out;
    out["covered"] = gate.covered;
    if (gate.covered) {
        const Decomposition& d = *gate.decomposition;
        out["v0"] = vertices_json(d.v0);
        out["v1"] = vertices_json(d.v1);
        out["v2"] = vertices_json(d.v2);
        json lengths = json::array();
        for (const CircleComponent& c : d.circles) lengths.push_back(c.length);
        out["circleLengths"] = lengths;
        out["conclusion"] = json{{"dimNuc", 1},
                                 {"ideal", gate.ideal_class},
                                 {"quotient", "C(T^(+" + std::to_string(gate.quotient_circles) +
                                                  "))"}};
        out["citations"] =
            json::array({"PropWhichGraphAlgebras", "CorStableQuotient", "ThmMain"});
    } else if (gate.failure) {
        out["failure"] =
            json{{"condition", gate.failure->condition}, {"witness", gate.failure->witness}};
    }
    return out;
}

json dimnuc_json(const DimNucVerdict& v) {
    json out;
    out["lower"] = v.estimate.lower;
    out["upper"] = v.estimate.upper ? json(*v.estimate.upper) : json("inf");
    out["exact"] = v.estimate.exact;
    out["status"] = to_string(v.estimate.status);
    out["route"] = to_string(v.route);
    if (v.table_cell) out["cell"] = *v.table_cell;
    out["citations"] = v.citations;
    out["trace"] = v.trace;
    return out;
}

std::string fraction_string(double f) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", f);
    return buf;
}

} // namespace

json build_report(const Graph& g) {
    json out;
    out["input"] = render_graph(g);
    out["lattice"] = lattice_json(g, enumerate_sat_her(g));
    out["cycles"] = cycles_json(g);
    out["class"] = class_json(g);
    out["gate"] = gate_json(decompose(g));
    out["dimNuc"] = dimnuc_json(verdict(g));
    return out;
}

json build_ideals_report(const Graph& g) {
    json out;
    out["input"] = render_graph(g);
    out["lattice"] = lattice_json(g, enumerate_sat_her(g));
    return out;
}

json build_decompose_report(const Graph& g, std::optional<std::pair<int, int>> witness) {
    json out;
    out["input"] = render_graph(g);
    GateVerdict gate = decompose(g);
    out["gate"] = gate_json(gate);
    if (witness) {
        if (!gate.covered)
            throw std::invalid_argument("stability witness requires a covered graph");
        StabilityWitness w =
            stability_witness(g, *gate.decomposition, witness->first, witness->second);
        json paths = json::array();
        for (const Path& p : w.paths) paths.push_back(path_to_string(p));
        out["witness"] =
            json{{"vertex", w.vertex}, {"requested", w.requested_count}, {"paths", paths}};
    }
    return out;
}

json build_table_report() {
    const CycleClassKind kinds[3] = {CycleClassKind::CycleWithExit,
                                     CycleClassKind::CycleWithoutExit, CycleClassKind::NoCycle};
    const char* labels[3] = {"cycle with exit", "cycle without exit", "no cycle"};
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json cells = json::array();
        for (int j = 0; j < 3; ++j) {
            TableCell cell = single_ideal_table(kinds[i], kinds[j]);
            cells.push_back(json{{"value", cell.value},
                                 {"citations", cell.citations},
                                 {"open", cell.open}});
        }
        rows.push_back(json{{"e0", labels[i]}, {"cells", cells}});
    }
    return json{{"rows", json::array({labels[0], labels[1], labels[2]})},
                {"columns", json::array({labels[0], labels[1], labels[2]})},
                {"table", rows}};
}

json to_json(const CensusStats& stats, const EnumSpec& spec) {
    json out;
    out["spec"] = json{{"maxVertices", spec.max_vertices},
                       {"maxMultiplicity", spec.max_multiplicity},
                       {"dedupIsomorphic", spec.dedup_isomorphic}};
    out["total"] = stats.total;
    out["byClass"] = json{{"AF", stats.af},
                          {"SimpleCycle", stats.simple_cycle},
                          {"StablyCircles", stats.stably_circles},
                          {"Kirchberg", stats.kirchberg},
                          {"Mixed", stats.mixed}};
    out["gateCovered"] = stats.gate_covered;
    out["open"] = stats.open_verdicts;
    out["question"] = json{{"total", stats.question.total},
                           {"exactAtMost1", stats.question.exact_at_most_1},
                           {"exact0", stats.question.exact_0},
                           {"open", stats.question.open},
                           {"boundOnly", stats.question.bound_only},
                           {"exactAtLeast2", stats.question.exact_at_least_2},
                           {"consistentFraction",
                            fraction_string(stats.question.consistent_fraction())}};
    out["oracleDisagreements"] = stats.oracle_disagreements;
    json strata = json::array();
    for (const StratumStats& s : stats.strata)
        strata.push_back(
            json{{"vertices", s.vertices}, {"raw", s.raw}, {"enumerated", s.enumerated}});
    out["strata"] = strata;
    return out;
}

namespace {

std::string join_vertices(const json& arr) {
    std::string out = "{";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(arr[i].get<int>());
    }
    return out + "}";
}

std::string join_strings(const json& arr, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += sep;
        out += arr[i].get<std::string>();
    }
    return out;
}

std::string render_lattice_text(const json& lattice) {
    std::string out;
    out += "saturated hereditary sets (" + std::to_string(lattice["elements"].size()) +
           " total, " + std::to_string(lattice["nontrivialCount"].get<int>()) +
           " nontrivial):\n";
    for (const json& e : lattice["elements"]) {
        out += "  " + join_vertices(e["vertices"]);
        out += e["trivial"].get<bool>() ? "  (trivial)\n" : "  (proper)\n";
    }
    return out;
}

std::string render_gate_text(const json& gate) {
    std::string out;
    if (gate["covered"].get<bool>()) {
        out += "gate: covered\n";
        out += "  V0 = " + join_vertices(gate["v0"]) + ", V1 = " + join_vertices(gate["v1"]) +
               ", V2 = " + join_vertices(gate["v2"]) + "\n";
        out += "  circles:";
        for (const json& n : gate["circleLengths"]) out += " " + std::to_string(n.get<int>());
        out += "\n";
        const json& c = gate["conclusion"];
        out += "  conclusion: dim_nuc = " + std::to_string(c["dimNuc"].get<int>()) +
               ", ideal " + c["ideal"].get<std::string>() + ", quotient " +
               c["quotient"].get<std::string>() + "\n";
        out += "  citations: " + join_strings(gate["citations"], ", ") + "\n";
    } else {
        out += "gate: not covered\n";
        if (gate.contains("failure"))
            out += "  condition (" + std::to_string(gate["failure"]["condition"].get<int>()) +
                   ") fails: " + gate["failure"]["witness"].get<std::string>() + "\n";
    }
    return out;
}

} // namespace

std::string render_report_text(const json& r) {
    std::string out;
    out += "== input ==\n" + r["input"].get<std::string>();
    out += "== ideal lattice ==\n" + render_lattice_text(r["lattice"]);
    const json& cy = r["cycles"];
    out += "== cycles ==\n";
    out += "  class: " + cy["cycleClass"].get<std::string>();
    if (!cy["witness"].is_null()) out += "  witness: " + cy["witness"].get<std::string>();
    out += "\n";
    out += std::string("  condition (K): ") + (cy["conditionK"].get<bool>() ? "yes" : "no") +
           ", condition (L): " + (cy["conditionL"].get<bool>() ? "yes" : "no") + "\n";
    out += "  exitless cycles:";
    for (const json& c : cy["exitlessCycleFamily"])
        out += " " + join_vertices(c["vertices"]) + "(len " +
               std::to_string(c["length"].get<int>()) + ")";
    out += "\n";
    out += "== algebra class ==\n  " + r["class"]["rendered"].get<std::string>() +
           (r["class"]["simple"].get<bool>() ? " (simple)\n" : "\n");
    out += "== gate ==\n" + render_gate_text(r["gate"]);
    const json& d = r["dimNuc"];
    out += "== nuclear dimension ==\n";
    std::string upper =
        d["upper"].is_string() ? d["upper"].get<std::string>() : d["upper"].dump();
    out += "  status " + d["status"].get<std::string>() + " via " +
           d["route"].get<std::string>() + ": dim_nuc in [" + d["lower"].dump() + ", " + upper +
           "]\n";
    if (d.contains("cell")) out += "  table cell: " + d["cell"].get<std::string>() + "\n";
    if (!d["citations"].empty()) out += "  citations: " + join_strings(d["citations"], ", ") + "\n";
    for (const json& t : d["trace"]) out += "  . " + t.get<std::string>() + "\n";
    return out;
}

std::string render_ideals_text(const json& r) { return render_lattice_text(r["lattice"]); }

std::string render_decompose_text(const json& r) {
    std::string out = render_gate_text(r["gate"]);
    if (r.contains("witness")) {
        const json& w = r["witness"];
        out += "stability witness at vertex " + std::to_string(w["vertex"].get<int>()) + ":\n";
        for (const json& p : w["paths"]) out += "  " + p.get<std::string>() + "\n";
    }
    return out;
}

std::string render_table_text(const json& r) {
    // Column widths chosen for the fixed labels.
    std::string out = "dim_nuc(C*(E)), rows E0, columns E1\n";
    auto cell_text = [](const json& cell) {
        std::string s = cell["value"].get<std::string>();
        if (!cell["citations"].empty()) s += " [" + join_strings(cell["citations"], ",") + "]";
        return s;
    };
    char line[160];
    std::snprintf(line, sizeof(line), "%-20s | %-24s | %-24s | %-24s\n", "",
                  r["columns"][0].get<std::string>().c_str(),
                  r["columns"][1].get<std::string>().c_str(),
                  r["columns"][2].get<std::string>().c_str());
    out += line;
    out += std::string(100, '-') + "\n";
    for (const json& row : r["table"]) {
        std::snprintf(line, sizeof(line), "%-20s | %-24s | %-24s | %-24s\n",
                      row["e0"].get<std::string>().c_str(), cell_text(row["cells"][0]).c_str(),
                      cell_text(row["cells"][1]).c_str(), cell_text(row["cells"][2]).c_str());
        out += line;
    }
    return out;
}

std::string render_census_text(const json& r) {
    std::string out;
    out += "census over <= " + std::to_string(r["spec"]["maxVertices"].get<int>()) +
           " vertices, multiplicity <= " +
           std::to_string(r["spec"]["maxMultiplicity"].get<int>()) +
           (r["spec"]["dedupIsomorphic"].get<bool>() ? ", dedup" : "") + "\n";
    out += "total graphs: " + r["total"].dump() + "\n";
    out += "by class: AF " + r["byClass"]["AF"].dump() + ", SimpleCycle " +
           r["byClass"]["SimpleCycle"].dump() + ", StablyCircles " +
           r["byClass"]["StablyCircles"].dump() + ", Kirchberg " +
           r["byClass"]["Kirchberg"].dump() + ", Mixed " + r["byClass"]["Mixed"].dump() + "\n";
    out += "gate covered: " + r["gateCovered"].dump() + ", open verdicts: " + r["open"].dump() +
           "\n";
    const json& q = r["question"];
    out += "verdicts: exact<=1 " + q["exactAtMost1"].dump() + " (of which exact 0 " +
           q["exact0"].dump() + "), open " + q["open"].dump() + ", bound-only " +
           q["boundOnly"].dump() + ", exact>=2 " + q["exactAtLeast2"].dump() + "\n";
    out += "consistent fraction: " + q["consistentFraction"].get<std::string>() + "\n";
    for (const json& s : r["strata"])
        out += "stratum n=" + s["vertices"].dump() + ": raw " + s["raw"].dump() +
               ", enumerated " + s["enumerated"].dump() + "\n";
    if (!r["oracleDisagreements"].empty()) {
        out += "ORACLE DISAGREEMENTS (" +
               std::to_string(r["oracleDisagreements"].size()) + "):\n";
        for (const json& d : r["oracleDisagreements"]) out += d.get<std::string>() + "\n";
    } else {
        out += "oracle disagreements: none\n";
    }
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = "// arrow: s(e) -> r(e)\ndigraph E {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const Edge& e : g.edges())
        out += "  " + std::to_string(e.source) + " -> " + std::to_string(e.range) + ";\n";
    return out + "}\n";
}

} // namespace graphalg

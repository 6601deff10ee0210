#include "graphalg/dimnuc.hpp"

#include <algorithm>

#include "graphalg/classify.hpp"
#include "graphalg/closure.hpp"
#include "graphalg/gate.hpp"

namespace graphalg {

const char* to_string(DimStatus s) {
    switch (s) {
        case DimStatus::Exact: return "Exact";
        case DimStatus::Open: return "Open";
        case DimStatus::BoundOnly: return "BoundOnly";
    }
    return "?";
}

const char* to_string(DimRoute r) {
    switch (r) {
        case DimRoute::Gate: return "Gate";
        case DimRoute::PureClass: return "PureClass";
        case DimRoute::SingleIdealTable: return "SingleIdealTable";
        case DimRoute::CompositionBound: return "CompositionBound";
    }
    return "?";
}

namespace {

const char* cell_label(CycleClassKind k) {
    switch (k) {
        case CycleClassKind::CycleWithExit: return "cycle with exit";
        case CycleClassKind::CycleWithoutExit: return "cycle without exit";
        case CycleClassKind::NoCycle: return "no cycle";
    }
    return "?";
}

std::string bound_string(const DimEstimate& e) {
    return "[" + std::to_string(e.lower) + ", " +
           (e.upper ? std::to_string(*e.upper) : std::string("inf")) + "]";
}

DimEstimate exact_estimate(int value) {
    return DimEstimate{value, value, true, DimStatus::Exact};
}

// A subgraph mixing exitless cycles with cycles that have exits does not fit
// any single row or column of the table.
bool homogeneous(const Graph& g) {
    return cycles_without_exit_family(g).empty() ||
           classify_cycles(g).kind != CycleClassKind::CycleWithExit;
}

} // namespace

std::string table_cell_name(CycleClassKind e0, CycleClassKind e1) {
    return std::string("(") + cell_label(e0) + ", " + cell_label(e1) + ")";
}

TableCell single_ideal_table(CycleClassKind e0, CycleClassKind e1) {
    using K = CycleClassKind;
    if (e0 == K::CycleWithExit && e1 == K::CycleWithExit) return {"1", {"FS23"}, false};
    if (e0 == K::CycleWithExit && e1 == K::CycleWithoutExit) return {"?", {}, true};
    if (e0 == K::CycleWithExit && e1 == K::NoCycle) return {"1", {"FS23"}, false};
    if (e0 == K::CycleWithoutExit && e1 == K::CycleWithExit)
        return {"1", {"CorStableQuotient"}, false};
    if (e0 == K::CycleWithoutExit && e1 == K::CycleWithoutExit) return {"?", {}, true};
    if (e0 == K::CycleWithoutExit && e1 == K::NoCycle) return {"1", {"GT22"}, false};
    if (e0 == K::NoCycle && e1 == K::CycleWithExit) return {"1", {"RSS15"}, false};
    if (e0 == K::NoCycle && e1 == K::CycleWithoutExit) return {"1", {"WZ10"}, false};
    return {"0", {"WZ10"}, false};
}

namespace {

DimNucVerdict gate_verdict(const GateVerdict& gate) {
    DimNucVerdict out;
    out.route = DimRoute::Gate;
    out.estimate = exact_estimate(1);
    out.citations = {"PropWhichGraphAlgebras", "CorStableQuotient", "ThmMain"};
    const Decomposition& d = *gate.decomposition;
    out.trace.push_back("decomposition certified: V0 = " + d.v0.to_string() + ", V1 = " +
                        d.v1.to_string() + ", V2 = " + d.v2.to_string());
    out.trace.push_back("ideal " + gate.ideal_class + "; quotient space is a disjoint union of " +
                        std::to_string(gate.quotient_circles) + " circle(s), so dim X = 1");
    out.trace.push_back("dim_nuc = max(1, dim X) = 1");
    return out;
}

DimNucVerdict pure_class_verdict(const AlgebraClass& cls) {
    DimNucVerdict out;
    out.route = DimRoute::PureClass;
    switch (cls.kind) {
        case AlgebraClassKind::AF:
            out.estimate = exact_estimate(0);
            out.citations = {"WZ10"};
            out.trace.push_back("acyclic graph: AF algebra, dim_nuc = 0");
            break;
        case AlgebraClassKind::Kirchberg:
            out.estimate = exact_estimate(1);
            out.citations = {"BBSTWW"};
            out.trace.push_back(
                "strongly connected, no sinks, not a simple cycle: Kirchberg algebra, "
                "dim_nuc = 1");
            break;
        default:
            out.estimate = exact_estimate(1);
            out.citations = {"Lemma52", "WZ10"};
            out.trace.push_back("stably " + render_class(cls) + ": dim_nuc = dim(T) = 1");
            break;
    }
    return out;
}

struct StepValue {
    int lower = 0;
    std::optional<int> upper;
};

StepValue block_value(const AlgebraClass& cls) {
    switch (cls.kind) {
        case AlgebraClassKind::AF: return {0, 0};
        case AlgebraClassKind::Mixed: return {1, std::nullopt};
        default: return {1, 1};
    }
}

} // namespace

DimNucVerdict verdict(const Graph& g, int cap) {
    std::vector<VertexSet> elements = sat_her_elements(g, cap);

    GateVerdict gate = decompose_with_candidates(g, elements);
    if (gate.covered) return gate_verdict(gate);

    AlgebraClass cls = classify_graph_algebra(g);
    if (cls.kind != AlgebraClassKind::Mixed) return pure_class_verdict(cls);

    std::vector<VertexSet> nontrivial;
    for (const VertexSet& v : elements)
        if (!v.empty() && v != g.all_vertices()) nontrivial.push_back(v);

    if (nontrivial.size() == 1) {
        VertexSet w = nontrivial.front();
        Subgraph ideal_side = subgraph_over(g, w);
        Subgraph quotient_side = subgraph_over(g, g.all_vertices().minus(w));
        if (homogeneous(ideal_side.graph) && homogeneous(quotient_side.graph)) {
            CycleClassKind e0 = classify_cycles(quotient_side.graph).kind;
            CycleClassKind e1 = classify_cycles(ideal_side.graph).kind;
            TableCell cell = single_ideal_table(e0, e1);
            DimNucVerdict sub_j = verdict(ideal_side.graph, cap);
            DimNucVerdict sub_b = verdict(quotient_side.graph, cap);

            DimNucVerdict out;
            out.route = DimRoute::SingleIdealTable;
            out.table_cell = table_cell_name(e0, e1);
            out.trace.push_back("single nontrivial saturated hereditary set W = " +
                                w.to_string());
            out.trace.push_back("E1 (ideal side) is a " + std::string(cell_label(e1)) +
                                " graph; E0 (quotient side) is a " + cell_label(e0) + " graph");
            out.trace.push_back("table cell " + *out.table_cell + " = " + cell.value +
                                (cell.citations.empty() ? "" : " [" + cell.citations[0] + "]"));
            out.trace.push_back("subquotient bounds: ideal side " + bound_string(sub_j.estimate) +
                                ", quotient side " + bound_string(sub_b.estimate));
            int lower = std::max(sub_j.estimate.lower, sub_b.estimate.lower);
            std::optional<int> eq12_upper;
            if (sub_j.estimate.upper && sub_b.estimate.upper) {
                eq12_upper = *sub_j.estimate.upper + *sub_b.estimate.upper + 1;
                out.trace.push_back(
                    "extension bounds: max(" + std::to_string(sub_j.estimate.lower) + ", " +
                    std::to_string(sub_b.estimate.lower) + ") <= dim_nuc <= " +
                    std::to_string(*sub_j.estimate.upper) + " + " +
                    std::to_string(*sub_b.estimate.upper) + " + 1 = " +
                    std::to_string(*eq12_upper));
            }
            if (cell.open) {
                out.estimate = DimEstimate{lower, eq12_upper, false, DimStatus::Open};
                out.trace.push_back("cell is a question mark: status Open");
            } else {
                int value = cell.value == "0" ? 0 : 1;
                if (value < lower || (eq12_upper && value > *eq12_upper))
                    throw InvariantError("table cell value " + cell.value +
                                         " violates the extension bounds");
                out.estimate = exact_estimate(value);
                out.citations = cell.citations;
                if (e0 == CycleClassKind::CycleWithoutExit && e1 == CycleClassKind::NoCycle)
                    out.citations.push_back("BW19");
            }
            return out;
        }
    }

    // Composition-series fold along a maximal chain in the lattice.
    DimNucVerdict out;
    out.route = DimRoute::CompositionBound;
    std::vector<VertexSet> chain{VertexSet{}};
    while (chain.back() != g.all_vertices()) {
        for (const VertexSet& e : elements) {
            if (chain.back().is_proper_subset_of(e)) {
                chain.push_back(e); // sorted by cardinality: first superset is a cover
                break;
            }
        }
    }
    int lower = 0;
    std::optional<int> upper = -1; // fold of (d_i + 1) - 1
    bool has_kirchberg = false, has_circles = false;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        VertexSet added = chain[i].minus(chain[i - 1]);
        Subgraph step = subgraph_over(g, added);
        AlgebraClass step_cls = classify_graph_algebra(step.graph);
        StepValue value = block_value(step_cls);
        lower = std::max(lower, value.lower);
        if (upper && value.upper)
            upper = *upper + *value.upper + 1;
        else
            upper = std::nullopt;
        has_kirchberg |= step_cls.kind == AlgebraClassKind::Kirchberg;
        has_circles |= step_cls.kind == AlgebraClassKind::SimpleCycle ||
                       step_cls.kind == AlgebraClassKind::StablyCircles;
        out.trace.push_back("step " + std::to_string(i) + ": subgraph over " + added.to_string() +
                            " classifies " + to_string(step_cls.kind) + ", block bounds [" +
                            std::to_string(value.lower) + ", " +
                            (value.upper ? std::to_string(*value.upper) : std::string("inf")) +
                            "]");
    }
    out.estimate = DimEstimate{lower, upper, false, DimStatus::BoundOnly};
    out.trace.push_back("composition fold over " + std::to_string(chain.size() - 1) +
                        " step(s): " + bound_string(out.estimate));
    out.citations = {"WZ10"};
    if (has_kirchberg) out.citations.push_back("BBSTWW");
    if (has_circles) out.citations.push_back("Lemma52");
    return out;
}

void QuestionSummary::add(const DimNucVerdict& v) {
    ++total;
    switch (v.estimate.status) {
        case DimStatus::Exact:
            if (v.estimate.lower >= 2)
                ++exact_at_least_2;
            else
                ++exact_at_most_1;
            if (v.estimate.lower == 0) ++exact_0;
            break;
        case DimStatus::Open: ++open; break;
        case DimStatus::BoundOnly: ++bound_only; break;
    }
}

void QuestionSummary::merge(const QuestionSummary& o) {
    total += o.total;
    exact_at_most_1 += o.exact_at_most_1;
    exact_0 += o.exact_0;
    open += o.open;
    bound_only += o.bound_only;
    exact_at_least_2 += o.exact_at_least_2;
}

double QuestionSummary::consistent_fraction() const {
    if (total == 0) return 0.0;
    return static_cast<double>(total - exact_at_least_2) / static_cast<double>(total);
}

} // namespace graphalg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/cycles.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

enum class DimStatus { Exact, Open, BoundOnly };
enum class DimRoute { Gate, PureClass, SingleIdealTable, CompositionBound };

const char* to_string(DimStatus s);
const char* to_string(DimRoute r);

/// Nuclear dimension estimate. `upper` empty means unbounded.
struct DimEstimate {
    int lower = 0;
    std::optional<int> upper;
    bool exact = false;
    DimStatus status = DimStatus::BoundOnly;
};

/// One cell of the 3x3 single-ideal table. `value` is "0", "1" or "?".
struct TableCell {
    std::string value;
    std::vector<std::string> citations;
    bool open = false;
};

struct DimNucVerdict {
    DimEstimate estimate;
    DimRoute route = DimRoute::CompositionBound;
    std::vector<std::string> citations;
    std::vector<std::string> trace;
    std::optional<std::string> table_cell;
};

/// Cell label such as "(cycle without exit, no cycle)"; row is the quotient
/// side E0, column the ideal side E1.
std::string table_cell_name(CycleClassKind e0, CycleClassKind e1);

/// The single-ideal table: row E0 (complement subgraph), column E1 (ideal
/// subgraph), both classified as standalone graphs.
TableCell single_ideal_table(CycleClassKind e0, CycleClassKind e1);

/// Computes the strongest applicable verdict:
/// gate decomposition > pure building-block class > single-ideal table >
/// composition-series bound. Throws CapError beyond the analysis cap;
/// throws InvariantError if internal cross-checks fail.
DimNucVerdict verdict(const Graph& g, int cap = -1);

/// Aggregate over a stream of verdicts; `exact_at_least_2` flags results
/// that would contradict the census expectation.
struct QuestionSummary {
    long total = 0;
    long exact_at_most_1 = 0;
    long exact_0 = 0;
    long open = 0;
    long bound_only = 0;
    long exact_at_least_2 = 0;

    void add(const DimNucVerdict& v);
    void merge(const QuestionSummary& o);
    double consistent_fraction() const;
};

} // namespace graphalg

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "graphalg/dimnuc.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

/// Enumeration space: all multigraphs on n <= max_vertices vertices with at
/// most max_multiplicity parallel edges per ordered vertex pair, stratified
/// by vertex count.
struct EnumSpec {
    int max_vertices = 4;
    int max_multiplicity = 1;
    bool dedup_isomorphic = false;
};

std::uint64_t stratum_size(int vertices, int max_multiplicity);
std::uint64_t search_space_size(const EnumSpec& spec);

/// Decodes one multiplicity matrix of the stratum into a graph; edges are
/// laid out row-major with parallel copies adjacent.
Graph graph_from_index(int vertices, int max_multiplicity, std::uint64_t index);

/// True iff `index` encodes the minimal representative of its isomorphism
/// class (minimum over all vertex permutations of the matrix encoding).
bool is_canonical_index(int vertices, int max_multiplicity, std::uint64_t index);

/// Streams every graph of the space in deterministic order (stratum, then
/// index). Honors dedup_isomorphic. Throws CapError when the search space
/// exceeds the guard (1e8).
void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& fn);

struct StratumStats {
    int vertices = 0;
    std::uint64_t raw = 0;
    std::uint64_t enumerated = 0;
};

struct CensusStats {
    long total = 0;
    long af = 0;
    long simple_cycle = 0;
    long stably_circles = 0;
    long kirchberg = 0;
    long mixed = 0;
    long gate_covered = 0;
    long open_verdicts = 0;
    QuestionSummary question;
    std::vector<std::string> oracle_disagreements; // canonical graph text of offenders
    std::vector<StratumStats> strata;

    bool operator==(const CensusStats&) const;
};

/// Reference implementation: one sequential pass, no chunking.
CensusStats run_census_serial(const EnumSpec& spec);

/// Chunked kernel; chunks run in parallel with OpenMP when workers > 1.
/// Output is identical to the serial reference for any worker count.
CensusStats run_census(const EnumSpec& spec, int workers = 1);

} // namespace graphalg

#include "graphalg/census.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "graphalg/classify.hpp"
#include "graphalg/gate.hpp"

namespace graphalg {

namespace {

constexpr std::uint64_t kSearchSpaceGuard = 100'000'000;
// Fixed chunk size: results merge in chunk order, so stats are identical
// for every worker count; small chunks keep the load balanced.
constexpr std::uint64_t kChunk = 1024;

using Matrix = std::array<int, 16 * 16>; // indexed i*n + j

void decode(int n, int mult, std::uint64_t index, Matrix& m) {
    std::uint64_t base = static_cast<std::uint64_t>(mult) + 1;
    for (int flat = n * n - 1; flat >= 0; --flat) {
        m[flat] = static_cast<int>(index % base);
        index /= base;
    }
}

std::uint64_t encode(int n, int mult, const Matrix& m) {
    std::uint64_t base = static_cast<std::uint64_t>(mult) + 1;
    std::uint64_t out = 0;
    for (int flat = 0; flat < n * n; ++flat) out = out * base + m[flat];
    return out;
}

std::uint64_t canonical_encoding(int n, int mult, const Matrix& m) {
    std::array<int, 16> perm;
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = encode(n, mult, m);
    Matrix permuted;
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) permuted[i * n + j] = m[perm[i] * n + perm[j]];
        best = std::min(best, encode(n, mult, permuted));
    }
    return best;
}

Graph graph_from_matrix(int n, const Matrix& m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m[i * n + j]; ++k) edges.emplace_back(i, j);
    return Graph(n, edges);
}

void check_guard(const EnumSpec& spec) {
    if (spec.max_vertices < 1 || spec.max_vertices > 6)
        throw CapError("census supports 1..6 vertices");
    if (spec.max_multiplicity < 1) throw CapError("census needs multiplicity >= 1");
    std::uint64_t size = search_space_size(spec);
    if (size > kSearchSpaceGuard)
        throw CapError("search space has " + std::to_string(size) +
                       " graphs, above the guard of " + std::to_string(kSearchSpaceGuard));
}

} // namespace

std::uint64_t stratum_size(int vertices, int max_multiplicity) {
    std::uint64_t out = 1;
    std::uint64_t base = static_cast<std::uint64_t>(max_multiplicity) + 1;
    for (int i = 0; i < vertices * vertices; ++i) {
        std::uint64_t next;
        if (__builtin_mul_overflow(out, base, &next)) return ~std::uint64_t{0}; // saturate
        out = next;
    }
    return out;
}

std::uint64_t search_space_size(const EnumSpec& spec) {
    std::uint64_t out = 0;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        std::uint64_t next;
        if (__builtin_add_overflow(out, stratum_size(n, spec.max_multiplicity), &next))
            return ~std::uint64_t{0};
        out = next;
    }
    return out;
}

Graph graph_from_index(int vertices, int max_multiplicity, std::uint64_t index) {
    Matrix m;
    decode(vertices, max_multiplicity, index, m);
    return graph_from_matrix(vertices, m);
}

bool is_canonical_index(int vertices, int max_multiplicity, std::uint64_t index) {
    Matrix m;
    decode(vertices, max_multiplicity, index, m);
    return canonical_encoding(vertices, max_multiplicity, m) == index;
}

void enumerate_graphs(const EnumSpec& spec, const std::function<void(const Graph&)>& fn) {
    check_guard(spec);
    for (int n = 1; n <= spec.max_vertices; ++n) {
        std::uint64_t size = stratum_size(n, spec.max_multiplicity);
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            if (spec.dedup_isomorphic && !is_canonical_index(n, spec.max_multiplicity, idx))
                continue;
            fn(graph_from_index(n, spec.max_multiplicity, idx));
        }
    }
}

bool CensusStats::operator==(const CensusStats& o) const {
    auto key = [](const CensusStats& s) {
        return std::tuple(s.total, s.af, s.simple_cycle, s.stably_circles, s.kirchberg, s.mixed,
                          s.gate_covered, s.open_verdicts, s.question.total,
                          s.question.exact_at_most_1, s.question.exact_0, s.question.open,
                          s.question.bound_only, s.question.exact_at_least_2);
    };
    if (key(*this) != key(o) || oracle_disagreements != o.oracle_disagreements) return false;
    if (strata.size() != o.strata.size()) return false;
    for (std::size_t i = 0; i < strata.size(); ++i)
        if (strata[i].vertices != o.strata[i].vertices || strata[i].raw != o.strata[i].raw ||
            strata[i].enumerated != o.strata[i].enumerated)
            return false;
    return true;
}

namespace {

void analyze_graph(const Graph& g, CensusStats& s) {
    ++s.total;
    AlgebraClass cls = classify_graph_algebra(g);
    switch (cls.kind) {
        case AlgebraClassKind::AF: ++s.af; break;
        case AlgebraClassKind::SimpleCycle: ++s.simple_cycle; break;
        case AlgebraClassKind::StablyCircles: ++s.stably_circles; break;
        case AlgebraClassKind::Kirchberg: ++s.kirchberg; break;
        case AlgebraClassKind::Mixed: ++s.mixed; break;
    }
    GateVerdict gate = decompose(g);
    if (gate.covered) ++s.gate_covered;
    if (g.vertex_count() <= 6) {
        GateVerdict brute = brute_decompose(g);
        if (brute.covered != gate.covered) s.oracle_disagreements.push_back(render_graph(g));
    }
    DimNucVerdict v = verdict(g);
    s.question.add(v);
    if (v.estimate.status == DimStatus::Open) ++s.open_verdicts;
}

void merge_into(CensusStats& into, const CensusStats& part) {
    into.total += part.total;
    into.af += part.af;
    into.simple_cycle += part.simple_cycle;
    into.stably_circles += part.stably_circles;
    into.kirchberg += part.kirchberg;
    into.mixed += part.mixed;
    into.gate_covered += part.gate_covered;
    into.open_verdicts += part.open_verdicts;
    into.question.merge(part.question);
    into.oracle_disagreements.insert(into.oracle_disagreements.end(),
                                     part.oracle_disagreements.begin(),
                                     part.oracle_disagreements.end());
}

} // namespace

CensusStats run_census_serial(const EnumSpec& spec) {
    check_guard(spec);
    CensusStats stats;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        StratumStats stratum;
        stratum.vertices = n;
        stratum.raw = stratum_size(n, spec.max_multiplicity);
        for (std::uint64_t idx = 0; idx < stratum.raw; ++idx) {
            if (spec.dedup_isomorphic && !is_canonical_index(n, spec.max_multiplicity, idx))
                continue;
            ++stratum.enumerated;
            analyze_graph(graph_from_index(n, spec.max_multiplicity, idx), stats);
        }
        stats.strata.push_back(stratum);
    }
    return stats;
}

CensusStats run_census(const EnumSpec& spec, int workers) {
    check_guard(spec);
    (void)workers; // only consumed by the OpenMP pragma
    CensusStats stats;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        StratumStats stratum;
        stratum.vertices = n;
        stratum.raw = stratum_size(n, spec.max_multiplicity);
        std::uint64_t chunks = (stratum.raw + kChunk - 1) / kChunk;
        std::vector<CensusStats> parts(chunks);

        // Chunks are independent; merging in chunk order keeps the result
        // identical for every worker count.
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
#endif
        for (long long chunk = 0; chunk < static_cast<long long>(chunks); ++chunk) {
            std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunk;
            std::uint64_t end = std::min(begin + kChunk, stratum.raw);
            CensusStats& part = parts[chunk];
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (spec.dedup_isomorphic && !is_canonical_index(n, spec.max_multiplicity, idx))
                    continue;
                analyze_graph(graph_from_index(n, spec.max_multiplicity, idx), part);
            }
        }
        for (const CensusStats& part : parts) {
            stratum.enumerated += part.total;
            merge_into(stats, part);
        }
        stats.strata.push_back(stratum);
    }
    return stats;
}

} // namespace graphalg

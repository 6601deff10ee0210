#include <doctest.h>

#include <algorithm>
#include <functional>

#include "graphalg/cycles.hpp"
#include "oracles.hpp"

using namespace graphalg;
using oracles::make_graph;

namespace {

Graph toeplitz() { return make_graph(2, {{0, 0}, {0, 1}}); }
Graph two_loops() { return make_graph(1, {{0, 0}, {0, 0}}); }
Graph cycle3() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

void enumerate_small(int max_vertices, int max_mult, const std::function<void(const Graph&)>& fn) {
    for (int n = 1; n <= max_vertices; ++n) {
        std::uint64_t base = max_mult + 1, total = 1;
        for (int i = 0; i < n * n; ++i) total *= base;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    for (std::uint64_t k = 0; k < c % base; ++k) edges.emplace_back(i, j);
                    c /= base;
                }
            fn(Graph(n, edges));
        }
    }
}

} // namespace

TEST_CASE("has_cycle") {
    CHECK_FALSE(has_cycle(make_graph(2, {})).has_value());
    auto loop = has_cycle(make_graph(1, {{0, 0}}));
    REQUIRE(loop.has_value());
    CHECK(loop->edge_ids() == std::vector<int>{0});
    auto t = has_cycle(toeplitz());
    REQUIRE(t.has_value());
    CHECK(t->edge_ids() == std::vector<int>{0});
    CHECK(t->source() == 0);
}

TEST_CASE("cycle_has_exit") {
    Graph g = two_loops();
    Path first_loop = Path::of_edges(g, {0});
    auto exit = cycle_has_exit(g, first_loop);
    REQUIRE(exit.has_value());
    CHECK(exit->id == 1);

    Graph c3 = cycle3();
    CHECK_FALSE(cycle_has_exit(c3, Path::of_edges(c3, {0, 1, 2})).has_value());

    Graph t = toeplitz();
    auto texit = cycle_has_exit(t, Path::of_edges(t, {0}));
    REQUIRE(texit.has_value());
    CHECK(texit->id == 1);

    CHECK_THROWS_AS(cycle_has_exit(t, Path::of_edges(t, {1})), std::invalid_argument);
    CHECK_THROWS_AS(cycle_has_exit(t, Path::trivial(0)), std::invalid_argument);
}

TEST_CASE("is_simple_cycle_graph") {
    auto one = is_simple_cycle_graph(make_graph(1, {{0, 0}}));
    REQUIRE(one.has_value());
    CHECK(one->length() == 1);
    CHECK_FALSE(is_simple_cycle_graph(two_loops()).has_value());
    CHECK_FALSE(is_simple_cycle_graph(make_graph(1, {})).has_value());
    auto three = is_simple_cycle_graph(cycle3());
    REQUIRE(three.has_value());
    CHECK(three->length() == 3);
    // Two loops at 0 with an isolated vertex: edge count matches but the
    // cycle must visit every vertex.
    CHECK_FALSE(is_simple_cycle_graph(make_graph(2, {{0, 0}, {0, 0}})).has_value());
    // Two disjoint loops: out-degrees fit but there are two orbits.
    CHECK_FALSE(is_simple_cycle_graph(make_graph(2, {{0, 0}, {1, 1}})).has_value());
}

TEST_CASE("classify_cycles") {
    CycleClass a = classify_cycles(two_loops());
    CHECK(a.kind == CycleClassKind::CycleWithExit);
    REQUIRE(a.witness.has_value());
    CHECK(cycle_has_exit(two_loops(), *a.witness).has_value());

    CycleClass b = classify_cycles(cycle3());
    CHECK(b.kind == CycleClassKind::CycleWithoutExit);
    REQUIRE(b.witness.has_value());
    CHECK_FALSE(cycle_has_exit(cycle3(), *b.witness).has_value());

    CHECK(classify_cycles(make_graph(2, {{0, 1}})).kind == CycleClassKind::NoCycle);
}

TEST_CASE("condition (L)") {
    CHECK(has_condition_L(toeplitz()));
    CHECK_FALSE(has_condition_L(make_graph(1, {{0, 0}})));
    CHECK(has_condition_L(two_loops()));
    CHECK(has_condition_L(make_graph(2, {}))); // vacuous
}

TEST_CASE("condition (K) and return paths") {
    CHECK(has_condition_K(two_loops()));
    CHECK_FALSE(has_condition_K(make_graph(1, {{0, 0}})));
    CHECK_FALSE(has_condition_K(toeplitz()));
    CHECK(first_return_path_count(toeplitz(), 0) == 1);
    CHECK(first_return_path_count(toeplitz(), 1) == 0);
    CHECK(first_return_path_count(two_loops(), 0) == 2);
    // Pumping through an inner loop: 0 -> 1, loop at 1, 1 -> 0 has
    // infinitely many first-return paths at 0.
    Graph pump = make_graph(2, {{0, 1}, {1, 1}, {1, 0}});
    CHECK(first_return_path_count(pump, 0) == 2);
    CHECK(has_condition_K(pump));
}

TEST_CASE("cycles_without_exit_family") {
    CycleFamily two = cycles_without_exit_family(make_graph(2, {{0, 0}, {1, 1}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == CircleComponent{VertexSet::of({0}), 1});
    CHECK(two[1] == CircleComponent{VertexSet::of({1}), 1});

    CHECK(cycles_without_exit_family(two_loops()).empty());

    CycleFamily c3 = cycles_without_exit_family(cycle3());
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == CircleComponent{VertexSet::of({0, 1, 2}), 3});
}

TEST_CASE("cycle analysis agrees with elementary-cycle oracle") {
    auto check_one = [](const Graph& g) {
        oracles::BruteCycleClass expect = oracles::brute_classify_cycles(g);
        CycleClass got = classify_cycles(g);
        switch (expect) {
            case oracles::BruteCycleClass::None:
                CHECK(got.kind == CycleClassKind::NoCycle);
                CHECK_FALSE(has_cycle(g).has_value());
                break;
            case oracles::BruteCycleClass::WithExit:
                CHECK(got.kind == CycleClassKind::CycleWithExit);
                REQUIRE(got.witness.has_value());
                CHECK(got.witness->is_cycle());
                CHECK(cycle_has_exit(g, *got.witness).has_value());
                break;
            case oracles::BruteCycleClass::WithoutExit:
                CHECK(got.kind == CycleClassKind::CycleWithoutExit);
                REQUIRE(got.witness.has_value());
                CHECK_FALSE(cycle_has_exit(g, *got.witness).has_value());
                break;
        }
        CHECK(has_condition_L(g) == oracles::brute_condition_L(g));

        std::vector<VertexSet> family_sets;
        for (const CircleComponent& c : cycles_without_exit_family(g)) {
            family_sets.push_back(c.vertices);
            Subgraph sub = subgraph_over(g, c.vertices);
            CHECK(is_simple_cycle_graph(sub.graph).has_value());
        }
        std::sort(family_sets.begin(), family_sets.end(), set_order);
        CHECK(family_sets == oracles::brute_exitless_cycle_sets(g));
        for (std::size_t i = 0; i < family_sets.size(); ++i)
            for (std::size_t j = i + 1; j < family_sets.size(); ++j)
                CHECK((family_sets[i] & family_sets[j]).empty());

        if (has_condition_K(g)) CHECK(has_condition_L(g));
    };
    enumerate_small(3, 2, check_one);
}

TEST_CASE("first_return_path_count agrees with bounded walk search") {
    auto check_one = [](const Graph& g) {
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(first_return_path_count(g, v) == oracles::brute_return_path_count(g, v));
    };
    enumerate_small(2, 2, check_one);
    std::mt19937 rng(53);
    for (int i = 0; i < 300; ++i) check_one(oracles::random_graph(rng, 4));
}

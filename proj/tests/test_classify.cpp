#include <doctest.h>

#include "graphalg/classify.hpp"
#include "graphalg/closure.hpp"
#include "oracles.hpp"

using namespace graphalg;
using oracles::make_graph;

namespace {

Graph toeplitz() { return make_graph(2, {{0, 0}, {0, 1}}); }
Graph two_loops() { return make_graph(1, {{0, 0}, {0, 0}}); }

Graph simple_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

} // namespace

TEST_CASE("classify_graph_algebra on the building blocks") {
    AlgebraClass o2 = classify_graph_algebra(two_loops());
    CHECK(o2.kind == AlgebraClassKind::Kirchberg);
    CHECK(o2.simple);

    for (int n = 1; n <= 4; ++n) {
        AlgebraClass c = classify_graph_algebra(simple_cycle(n));
        CHECK(c.kind == AlgebraClassKind::SimpleCycle);
        CHECK(c.circle_lengths == std::vector<int>{n});
        CHECK(render_class(c) == "M_" + std::to_string(n) + "(C(T))");
        CHECK_FALSE(c.simple);
    }

    CHECK(classify_graph_algebra(make_graph(2, {{0, 1}})).kind == AlgebraClassKind::AF);
    CHECK(classify_graph_algebra(toeplitz()).kind == AlgebraClassKind::Mixed);

    AlgebraClass circles = classify_graph_algebra(make_graph(2, {{0, 0}, {1, 1}}));
    CHECK(circles.kind == AlgebraClassKind::StablyCircles);
    CHECK(circles.circle_lengths == std::vector<int>{1, 1});
    CHECK(render_class(circles) == "M_1(C(T)) (+) M_1(C(T))");

    // 0 -> 1 with a loop at 1: everything saturates into the circle {1}.
    AlgebraClass fed = classify_graph_algebra(make_graph(2, {{0, 1}, {1, 1}}));
    CHECK(fed.kind == AlgebraClassKind::StablyCircles);
    CHECK(fed.circle_lengths == std::vector<int>{1});
}

TEST_CASE("stably_circles_data") {
    Graph two = make_graph(2, {{0, 0}, {1, 1}});
    CHECK(stably_circles_data(two, VertexSet::full(2)) == std::vector<int>{1, 1});

    Graph c3 = simple_cycle(3);
    CHECK(stably_circles_data(c3, VertexSet::full(3)) == std::vector<int>{3});

    CHECK_FALSE(stably_circles_data(toeplitz(), VertexSet::of({1})).has_value());

    CHECK_THROWS_AS(stably_circles_data(toeplitz(), VertexSet::of({0})),
                    std::invalid_argument); // not hereditary

    // Circle shape matches on {0} but the ambient graph has a sink, which
    // breaks the stable-isomorphism hypothesis.
    Graph sink = make_graph(2, {{0, 0}});
    CHECK_THROWS_AS(stably_circles_data(sink, VertexSet::of({0})), std::invalid_argument);
}

TEST_CASE("simplicity") {
    CHECK(simplicity(two_loops()));
    CHECK_FALSE(simplicity(make_graph(1, {{0, 0}})));
    CHECK_FALSE(simplicity(toeplitz()));
}

TEST_CASE("classification invariants over small graphs") {
    std::mt19937 rng(61);
    for (int i = 0; i < 400; ++i) {
        Graph g = oracles::random_graph(rng, 4);
        AlgebraClass cls = classify_graph_algebra(g);

        CHECK((cls.kind == AlgebraClassKind::AF) == !has_cycle(g).has_value());
        if (cls.kind == AlgebraClassKind::Kirchberg) CHECK(simplicity(g));
        if (cls.kind == AlgebraClassKind::StablyCircles) CHECK_FALSE(has_condition_L(g));

        if (strongly_connected_components(g).strongly_connected() && has_no_sinks(g) &&
            g.edge_count() >= 1) {
            bool sc = cls.kind == AlgebraClassKind::SimpleCycle;
            bool kb = cls.kind == AlgebraClassKind::Kirchberg;
            CHECK(sc != kb);
        }

        // StablyCircles means the circle data exists for the full set.
        if (cls.kind == AlgebraClassKind::StablyCircles || cls.kind == AlgebraClassKind::SimpleCycle) {
            VertexSet circle_union;
            for (const CircleComponent& c : cycles_without_exit_family(g))
                circle_union = circle_union | c.vertices;
            auto data = stably_circles_data(g, circle_union);
            REQUIRE(data.has_value());
            CHECK(*data == cls.circle_lengths);
        }
    }
}

TEST_CASE("classification is isomorphism-invariant") {
    std::mt19937 rng(67);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracles::random_graph(rng, 5);
        Graph h = oracles::random_relabel(rng, g);
        AlgebraClass a = classify_graph_algebra(g);
        AlgebraClass b = classify_graph_algebra(h);
        CHECK(a.kind == b.kind);
        CHECK(a.circle_lengths == b.circle_lengths);
        CHECK(a.simple == b.simple);
    }
}

#include "doctest.h"

#include "layoutkit/corpus.hpp"
#include "layoutkit/graph.hpp"
#include "layoutkit/sse.hpp"

using namespace layoutkit;

TEST_CASE("edge list parsing") {
    auto g = std::get<UGraph>(load_graph("p ug 3 3\ne 1 2\ne 2 3\ne 1 3\n"));
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(0, 2));

    auto d = std::get<Dag>(load_graph("c star\np dag 3 2\na 1 2\na 1 3\n"));
    CHECK(d.num_vertices() == 3);
    CHECK(d.num_arcs() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(0, 2));

    CHECK_THROWS_AS(load_graph("p dag 2 2\na 1 2\na 2 1\n"), validation_error);
    CHECK_THROWS_AS(load_graph("p ug 2 1\ne 1 1\n"), validation_error);
    CHECK_THROWS_AS(load_graph("p ug 2 2\ne 1 2\ne 1 2\n"), validation_error);
    CHECK_THROWS_AS(load_graph("p ug 2 1\ne 1 5\n"), validation_error);
    CHECK_THROWS_AS(load_graph("p ug 2 1\ne 1\n"), parse_error);
    CHECK_THROWS_AS(load_graph("e 1 2\n"), parse_error);
    CHECK_THROWS_AS(load_graph("p ug 2 2\ne 1 2\n"), parse_error);
    CHECK_THROWS_AS(load_graph("p dag 2 1\ne 1 2\n"), parse_error);
    CHECK_THROWS_AS(load_graph("p what 2 1\ne 1 2\n"), parse_error);
}

TEST_CASE("round trip through the serializer") {
    for (int seed = 0; seed < 20; ++seed) {
        UGraph g = random_graph(6, seed);
        auto back = std::get<UGraph>(load_graph(serialize(g)));
        CHECK(back.num_vertices() == g.num_vertices());
        CHECK(back.edges() == g.edges());

        Dag d = random_dag(6, seed);
        auto dback = std::get<Dag>(load_graph(serialize(d)));
        CHECK(dback.arcs() == d.arcs());
    }
}

TEST_CASE("cut edges") {
    UGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(cut_edges(k3, VertexSet::of(3, {0})) == 2);
    UGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(cut_edges(c4, VertexSet::of(4, {0, 1})) == 2);
    CHECK(cut_edges(c4, VertexSet(4)) == 0);

    for (int seed = 0; seed < 20; ++seed) {
        UGraph g = random_graph(7, 100 + seed);
        std::mt19937_64 rng(seed);
        VertexSet s(7);
        for (int v = 0; v < 7; ++v)
            if (rng() & 1) s.add(v);
        CHECK(cut_edges(g, s) == cut_edges(g, s.complement()));
    }
}

TEST_CASE("expansion of regular graphs") {
    UGraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(expansion(c6, VertexSet::of(6, {0, 1, 2})) == Rational(1, 3));
    CHECK(expansion(c6, VertexSet::of(6, {0, 2, 4})) == Rational(1, 1));
    CHECK(expansion(c6, VertexSet::full(6)) == Rational(0, 1));

    UGraph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(expansion(p3, VertexSet::of(3, {0})), validation_error);
    CHECK_THROWS_AS(expansion(c6, VertexSet(6)), validation_error);

    // Singleton cuts of a d-regular graph sum to 2m.
    UGraph reg = gen_random_regular(8, 3, 7);
    long long total = 0;
    for (int v = 0; v < 8; ++v) total += cut_edges(reg, VertexSet::of(8, {v}));
    CHECK(total == 2 * reg.num_edges());
}

TEST_CASE("topological orderings") {
    Dag star(3, {{0, 1}, {0, 2}});
    CHECK(is_topological(star, Ordering::from_sequence({0, 1, 2})));
    CHECK_FALSE(is_topological(star, Ordering::from_sequence({1, 0, 2})));
    Dag single(1, {});
    CHECK(is_topological(single, Ordering::from_sequence({0})));

    for (int seed = 0; seed < 30; ++seed) {
        Dag d = random_dag(7, 200 + seed);
        CHECK(is_topological(d, Ordering::from_sequence(d.topological_witness())));
    }
}

TEST_CASE("dot export") {
    UGraph k2(2, {{0, 1}});
    auto dot = export_dot(k2);
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);

    Dag star(3, {{0, 1}, {0, 2}});
    auto ddot = export_dot(star);
    CHECK(ddot.find("digraph D {") != std::string::npos);
    CHECK(ddot.find("1 -> 2;") != std::string::npos);
    CHECK(ddot.find("1 -> 3;") != std::string::npos);

    UGraph lone(1, {});
    auto ldot = export_dot(lone);
    CHECK(ldot.find("1;") != std::string::npos);
    CHECK(ldot.find("--") == std::string::npos);
}

TEST_CASE("orderings are bijections") {
    CHECK_THROWS_AS(Ordering::from_sequence({0, 0, 1}), validation_error);
    CHECK_THROWS_AS(Ordering::from_sequence({0, 3}), validation_error);
    auto pi = Ordering::from_positions({2, 1, 3});
    CHECK(pi.vertex_at(1) == 1);
    CHECK(pi.position(2) == 3);
}

TEST_CASE("rationals") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(0, 5) == Rational(0, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK_THROWS_AS(Rational(1, 0), validation_error);
}

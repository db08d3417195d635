#include "doctest.h"

#include "layoutkit/corpus.hpp"
#include "layoutkit/pebbling.hpp"
#include "layoutkit/layout.hpp"
#include "oracles.hpp"

using namespace layoutkit;

namespace {
// star DAG: e -> u, e -> v with e=0, u=1, v=2
const Dag star_dag(3, {{0, 1}, {0, 2}});

PebbleStrategy moves_strategy(int n, const std::string& text) {
    return PebbleStrategy::from_moves(n, parse_moves(text));
}
} // namespace

TEST_CASE("strategy validation") {
    Dag single(1, {});
    auto s = moves_strategy(1, "pb 1\nrb 1\n");
    auto rep = validate_strategy(single, s, PebbleMode::black);
    CHECK(rep.valid);
    CHECK(rep.cost == 1);
    CHECK(rep.one_shot);

    // sink pebbled before its predecessor
    auto bad = moves_strategy(3, "pb 2\nrb 2\n");
    auto brep = validate_strategy(star_dag, bad, PebbleMode::black);
    CHECK_FALSE(brep.valid);
    CHECK(brep.violation_step == 1);

    Dag pyr2 = build_pyramid(2);
    auto ok = moves_strategy(3, "pb 1\npb 2\npb 3\nrb 1\nrb 2\nrb 3\n");
    auto prep = validate_strategy(pyr2, ok, PebbleMode::black);
    CHECK(prep.valid);
    CHECK(prep.cost == 3);
    CHECK(prep.one_shot);

    // whites are rejected in black mode but fine in black-white mode
    auto wh = moves_strategy(3, "pw 3\npb 1\npb 2\nrw 3\nrb 1\nrb 2\n");
    CHECK_FALSE(validate_strategy(pyr2, wh, PebbleMode::black).valid);
    auto wrep = validate_strategy(pyr2, wh, PebbleMode::black_white);
    CHECK(wrep.valid);
    CHECK(wrep.cost == 3);

    // white removed while a predecessor is bare
    auto wbad = moves_strategy(3, "pw 3\nrw 3\n");
    CHECK_FALSE(validate_strategy(pyr2, wbad, PebbleMode::black_white).valid);

    // ends nonempty
    auto open = moves_strategy(1, "pb 1\n");
    CHECK_FALSE(validate_strategy(single, open, PebbleMode::black).valid);

    // a sink never pebbled
    auto skip = moves_strategy(3, "pb 1\npb 2\nrb 2\nrb 1\n");
    CHECK_FALSE(validate_strategy(star_dag, skip, PebbleMode::black).valid);

    // not one-shot but still valid
    Dag two(2, {});
    auto twice = moves_strategy(2, "pb 1\nrb 1\npb 1\nrb 1\npb 2\nrb 2\n");
    auto trep = validate_strategy(two, twice, PebbleMode::black);
    CHECK(trep.valid);
    CHECK_FALSE(trep.one_shot);
}

TEST_CASE("move list round trip") {
    auto moves = parse_moves("pb 1\nc comment\npw 2\nrw 2\nrb 1\n");
    CHECK(moves.size() == 4);
    CHECK(serialize_moves(moves) == "pb 1\npw 2\nrw 2\nrb 1\n");
    CHECK_THROWS_AS(parse_moves("px 1\n"), parse_error);
    CHECK_THROWS_AS(parse_moves("pb x\n"), parse_error);
    auto s = PebbleStrategy::from_moves(3, moves);
    CHECK(s.to_moves().size() == 4);
}

TEST_CASE("ordering-induced strategies") {
    auto s = ordering_to_black_strategy(star_dag, Ordering::from_sequence({0, 1, 2}));
    auto rep = validate_strategy(star_dag, s, PebbleMode::black);
    CHECK(rep.valid);
    CHECK(rep.one_shot);
    CHECK(rep.cost == 2);

    // post-cleanup profile equals |V_i| per position
    Dag pyr2 = build_pyramid(2);
    auto pi = Ordering::from_sequence({0, 1, 2});
    auto ps = ordering_to_black_strategy(pyr2, pi);
    std::vector<int> profile;
    int placements = 0;
    for (size_t t = 1; t < ps.configs.size(); ++t) {
        bool was_placement = ps.configs[t].black.count() > ps.configs[t - 1].black.count();
        if (was_placement) ++placements;
        bool last_of_round = t + 1 == ps.configs.size() ||
                             ps.configs[t + 1].black.count() > ps.configs[t].black.count();
        if (last_of_round && placements > 0 && static_cast<int>(profile.size()) < placements)
            profile.push_back(ps.configs[t].black.count());
    }
    CHECK(profile == std::vector<int>{1, 2, 0});
    CHECK(validate_strategy(pyr2, ps, PebbleMode::black).cost == 3);

    CHECK_THROWS_AS(ordering_to_black_strategy(star_dag, Ordering::from_sequence({1, 0, 2})),
                    validation_error);

    for (int seed = 0; seed < 30; ++seed) {
        Dag d = random_dag(2 + seed % 7, 800 + seed);
        auto st = ordering_to_black_strategy(d, Ordering::from_sequence(d.topological_witness()));
        auto r = validate_strategy(d, st, PebbleMode::black);
        CHECK(r.valid);
        CHECK(r.one_shot);
    }
}

TEST_CASE("induced strategy peak is max over i of |V_{i-1}|+1") {
    for (int seed = 0; seed < 20; ++seed) {
        int n = 2 + seed % 6;
        Dag d = random_dag(n, 1500 + seed);
        auto pi = Ordering::from_sequence(d.topological_witness());
        auto rep = validate_strategy(d, ordering_to_black_strategy(d, pi), PebbleMode::black);
        long long expect = 1; // placing the first vertex
        for (int i = 2; i <= n; ++i)
            expect = std::max(expect, 1LL + left_vertices(d, pi, i - 1).count());
        CHECK(rep.cost == expect);
    }
}

TEST_CASE("one-shot black cost under both accountings") {
    Dag pyr2 = build_pyramid(2);
    CHECK(one_shot_black_cost(pyr2, CostAccounting::post_cleanup) == 2);
    CHECK(one_shot_black_cost(pyr2, CostAccounting::peak) == 3);
    Dag arc(2, {{0, 1}});
    CHECK(one_shot_black_cost(arc, CostAccounting::post_cleanup) == 1);
    CHECK(one_shot_black_cost(arc, CostAccounting::peak) == 2);
    Dag lone(1, {});
    CHECK(one_shot_black_cost(lone, CostAccounting::post_cleanup) == 1);
    CHECK(one_shot_black_cost(lone, CostAccounting::peak) == 1);
}

TEST_CASE("exhaustive search agrees with the dumb reference") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& d : all_dags(n, false)) {
            CHECK(one_shot_cost_exhaustive(d, PebbleMode::black) ==
                  oracles::one_shot_cost_reference(d, false));
            CHECK(one_shot_cost_exhaustive(d, PebbleMode::black_white) ==
                  oracles::one_shot_cost_reference(d, true));
        }
    }
    for (int seed = 0; seed < 10; ++seed) {
        Dag d = random_dag(5, 900 + seed);
        CHECK(one_shot_cost_exhaustive(d, PebbleMode::black_white) ==
              oracles::one_shot_cost_reference(d, true));
    }
}

TEST_CASE("peak accounting equals the exhaustive black optimum") {
    PebbleSearchOptions wide;
    wide.max_n = 7;
    for (int seed = 0; seed < 30; ++seed) {
        Dag d = random_dag(2 + seed % 6, 1000 + seed);
        CHECK(one_shot_black_cost(d, CostAccounting::peak) ==
              one_shot_cost_exhaustive(d, PebbleMode::black, wide));
    }
    SUBCASE("the default search cap is a clean error") {
        CHECK_THROWS_AS(one_shot_cost_exhaustive(random_dag(7, 1), PebbleMode::black),
                        size_limit_error);
    }
}

TEST_CASE("lengauer transforms") {
    UGraph gd = lengauer_to_undirected(star_dag);
    CHECK(gd.num_edges() == 2);
    CHECK(gd.has_edge(0, 1));
    CHECK(gd.has_edge(0, 2));
    CHECK_FALSE(gd.has_edge(1, 2));

    Dag join(3, {{0, 2}, {1, 2}});
    UGraph tri = lengauer_to_undirected(join);
    CHECK(tri.num_edges() == 3); // sibling pair added

    CHECK(lengauer_to_undirected(Dag(1, {})).num_edges() == 0);

    Dag dk2 = lengauer_to_dag(UGraph(2, {{0, 1}}));
    CHECK(dk2.num_vertices() == 3);
    CHECK(dk2.num_arcs() == 2);
    Dag dk3 = lengauer_to_dag(UGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(dk3.num_vertices() == 6);
    CHECK(dk3.num_arcs() == 6);
    CHECK(lengauer_to_dag(UGraph(3, {})).num_arcs() == 0);
}

TEST_CASE("pyramids") {
    CHECK(build_pyramid(1).num_vertices() == 1);
    Dag pyr2 = build_pyramid(2);
    CHECK(pyr2.num_vertices() == 3);
    CHECK(pyr2.num_arcs() == 2);
    Dag pyr4 = build_pyramid(4);
    CHECK(pyr4.num_vertices() == 10);
    CHECK(pyr4.max_in_degree() == 2);
    CHECK(pyr4.sinks().size() == 1);
    CHECK_THROWS_AS(build_pyramid(0), validation_error);
}

TEST_CASE("indegree-2 transform") {
    // one vertex of indegree 3: pyramid has layers 3+2+1, sources and apex
    // identified, so 2 fresh internal nodes
    Dag d(4, {{0, 3}, {1, 3}, {2, 3}});
    Dag t = indegree2_transform(d);
    CHECK(t.num_vertices() == 6);
    CHECK(t.max_in_degree() == 2);

    Dag low(3, {{0, 2}, {1, 2}});
    CHECK(indegree2_transform(low).arcs() == low.arcs());
    Dag pyr4 = build_pyramid(4);
    CHECK(indegree2_transform(pyr4).arcs() == pyr4.arcs());
}

TEST_CASE("single-sink transform") {
    Dag iso2(2, {});
    Dag t = single_sink_transform(iso2);
    CHECK(t.num_vertices() == 3);
    CHECK(t.num_arcs() == 2);
    CHECK(t.sinks().size() == 1);

    Dag already(2, {{0, 1}});
    CHECK(single_sink_transform(already).arcs() == already.arcs());

    Dag four(4, {});
    Dag t4 = single_sink_transform(four);
    CHECK(t4.num_vertices() == 7);
    CHECK(t4.sinks().size() == 1);
    CHECK(t4.max_in_degree() == 2);
}

TEST_CASE("frugal pyramid property") {
    auto canonical = moves_strategy(3, "pb 1\npb 2\npb 3\nrb 1\nrb 2\nrb 3\n");
    CHECK(frugal_pyramid_check(2, canonical));

    Dag single = build_pyramid(1);
    auto s1 = moves_strategy(1, "pb 1\nrb 1\n");
    CHECK(frugal_pyramid_check(1, s1));

    auto bad = moves_strategy(3, "pb 1\nrb 1\n");
    CHECK_THROWS_AS(frugal_pyramid_check(2, bad), validation_error);

    long long count = 0;
    enumerate_one_shot_black_strategies(build_pyramid(2), [&](const PebbleStrategy& s) {
        ++count;
        CHECK(validate_strategy(build_pyramid(2), s, PebbleMode::black).valid);
        CHECK(frugal_pyramid_check(2, s));
    });
    CHECK(count > 0);
}

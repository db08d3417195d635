#include "doctest.h"

#include "layoutkit/corpus.hpp"

using namespace layoutkit;

TEST_CASE("graph atlas counts match the literature") {
    const int expect[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<int>(all_graphs(n, false).size()) == expect[n]);
    const int expect_conn[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(all_graphs(n, true).size()) == expect_conn[n]);
    CHECK(all_graphs(7, false).size() == 1044);
    CHECK_THROWS_AS(all_graphs(9, false), size_limit_error);
}

TEST_CASE("dag atlas counts match the literature") {
    const int expect[] = {0, 1, 2, 6, 31, 302, 5984};
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<int>(all_dags(n, false).size()) == expect[n]);
    CHECK_THROWS_AS(all_dags(7, false), size_limit_error);
}

TEST_CASE("connectivity helpers") {
    CHECK(is_connected(UGraph(1, {})));
    CHECK_FALSE(is_connected(UGraph(2, {})));
    CHECK(is_connected(UGraph(3, {{0, 1}, {1, 2}})));
    CHECK(is_weakly_connected(Dag(2, {{0, 1}})));
    CHECK_FALSE(is_weakly_connected(Dag(2, {})));
}

TEST_CASE("random generators are deterministic and in-bounds") {
    CHECK(random_graph(7, 9).edges() == random_graph(7, 9).edges());
    CHECK(random_dag(7, 9).arcs() == random_dag(7, 9).arcs());
    for (int seed = 0; seed < 20; ++seed) {
        Dag d = random_dag_bounded_indegree(7, 4, seed, 0.8);
        CHECK(d.max_in_degree() <= 4);
    }
}

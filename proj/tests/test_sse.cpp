#include "doctest.h"

#include "layoutkit/layout.hpp"
#include "layoutkit/sse.hpp"

#include <cmath>

using namespace layoutkit;

TEST_CASE("random regular graphs") {
    UGraph g = gen_random_regular(6, 2, 5);
    int d = 0;
    CHECK(g.is_regular(&d));
    CHECK(d == 2);

    // the unique 3-regular graph on 4 vertices is K4
    UGraph k4 = gen_random_regular(4, 3, 11);
    CHECK(k4.num_edges() == 6);

    CHECK_THROWS_AS(gen_random_regular(3, 3, 1), validation_error);
    CHECK_THROWS_AS(gen_random_regular(5, 3, 1), validation_error); // odd n*d
    CHECK(gen_random_regular(4, 0, 1).num_edges() == 0);

    // determinism per seed
    CHECK(gen_random_regular(8, 3, 42).edges() == gen_random_regular(8, 3, 42).edges());
}

TEST_CASE("planted instances") {
    auto inst = gen_planted(2, 4, 3, 2, 7);
    CHECK(inst.graph.num_vertices() == 8);
    int d = 0;
    CHECK(inst.graph.is_regular(&d));
    CHECK(d == 3);
    CHECK(inst.cross_edges == 2);

    // reported block cuts match an independent expansion measurement
    for (int b = 0; b < inst.q; ++b) {
        Rational phi = expansion(inst.graph, inst.blocks[b]);
        CHECK(phi == Rational(inst.block_cuts[b], 3 * 4));
    }

    auto solo = gen_planted(1, 6, 2, 0, 3);
    CHECK(solo.cross_edges == 0);
    CHECK(solo.max_block_expansion() == Rational(0, 1));

    auto disjoint = gen_planted(2, 4, 2, 0, 9);
    CHECK(disjoint.max_block_expansion() == Rational(0, 1));

    CHECK_THROWS_AS(gen_planted(2, 4, 3, 1, 1), validation_error);  // odd cross
    CHECK_THROWS_AS(gen_planted(1, 4, 3, 2, 1), validation_error);  // q=1 with cross
    CHECK_THROWS_AS(gen_planted(2, 4, 5, 0, 1), validation_error);  // d >= block

    // determinism
    CHECK(gen_planted(2, 4, 3, 2, 13).graph.edges() == gen_planted(2, 4, 3, 2, 13).graph.edges());
}

TEST_CASE("block orderings") {
    auto inst = gen_planted(2, 2, 1, 0, 5);
    auto pi = block_ordering(inst);
    CHECK(pi.sequence() == std::vector<int>{0, 1, 2, 3});

    auto one = gen_planted(1, 4, 2, 0, 5);
    CHECK(block_ordering(one).sequence() == std::vector<int>{0, 1, 2, 3});

    // the block ordering's max cut stays within intra + cross edges
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto in = gen_planted(2, 4, 3, 2, seed);
        long long max_intra = 0;
        for (int b = 0; b < in.q; ++b)
            max_intra = std::max(max_intra, (3LL * 4 - in.block_cuts[b]) / 2);
        long long cost = evaluate(in.graph, named_problem("mcla"), block_ordering(in));
        CHECK(cost <= max_intra + in.cross_edges);
    }
}

TEST_CASE("gaussian noise stability endpoints") {
    for (double mu : {0.1, 0.25, 0.5, 0.75}) {
        CHECK(std::fabs(gamma_rho(0.0, mu) - mu * mu) <= 1e-8);
        CHECK(std::fabs(gamma_rho(1.0, mu) - mu) <= 1e-8);
        CHECK(std::fabs(gamma_rho(-1.0, mu) - std::max(0.0, 2 * mu - 1)) <= 1e-8);
    }
    CHECK(gamma_rho(0.5, 0.0) == 0.0);
    CHECK(gamma_rho(0.5, 1.0) == 1.0);
    CHECK_THROWS_AS(gamma_rho(2.0, 0.5), validation_error);
    CHECK_THROWS_AS(gamma_rho(0.0, -0.1), validation_error);
}

TEST_CASE("arcsine identity at the median") {
    for (double rho : {-0.9, -0.5, 0.0, 0.3, 0.5, 0.8, 0.95}) {
        double expect = 0.25 + std::asin(rho) / (2 * M_PI);
        CHECK(std::fabs(gamma_rho(rho, 0.5) - expect) <= 1e-6);
    }
}

TEST_CASE("gamma monotonicity and bounds") {
    double prev = -1;
    for (double rho : {-1.0, -0.6, -0.2, 0.0, 0.3, 0.7, 1.0}) {
        double g = gamma_rho(rho, 0.3);
        CHECK(g >= prev - 1e-10);
        prev = g;
        if (rho >= 0) {
            CHECK(g >= 0.3 * 0.3 - 1e-9);
            CHECK(g <= 0.3 + 1e-9);
        }
    }
    prev = -1;
    for (double mu : {0.05, 0.2, 0.35, 0.5, 0.8}) {
        double g = gamma_rho(0.6, mu);
        CHECK(g >= prev - 1e-10);
        prev = g;
    }
}

TEST_CASE("no-case bound") {
    CHECK(std::fabs(no_case_bound(0.0, 0.0, 0.5)) <= 1e-9);
    double mu = 0.4, eps = 0.02;
    double g = gamma_rho(1 - eps / 2, mu);
    CHECK(std::fabs(no_case_bound(eps, mu - g, mu)) <= 1e-9);
    // With gamma small the bound is positive and scales like sqrt(eps).
    for (double e : {0.005, 0.02, 0.08}) {
        double b = no_case_bound(e, e / 100, 0.5);
        CHECK(b > 0.0);
        double ratio = b / std::sqrt(e);
        CHECK(ratio > 0.1);
        CHECK(ratio < 1.0);
    }
    // A gamma as large as sqrt(eps) swamps the expansion term at this scale.
    CHECK(no_case_bound(0.02, std::sqrt(0.02), 0.5) < 0.0);
    CHECK_THROWS_AS(no_case_bound(0.1, 0.0, 0.0), validation_error);
}

TEST_CASE("gamma fact witness") {
    std::vector<double> eps = {1e-4, 1e-3, 1e-2, 1e-1};
    std::vector<double> mus = {0.1, 0.3, 0.5};
    auto rep = check_gamma_fact(eps, mus);
    CHECK(rep.positive);
    CHECK(rep.c_witness > 0.0);
}

TEST_CASE("normal quantile inverts the cdf") {
    for (double p : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999999}) {
        CHECK(std::fabs(normal_cdf(normal_quantile(p)) - p) <= 1e-12);
    }
    CHECK(std::fabs(normal_quantile(0.5)) <= 1e-12);
    CHECK_THROWS_AS(normal_quantile(0.0), validation_error);
}

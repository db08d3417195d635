#ifndef LAYOUTKIT_SSE_HPP
#define LAYOUTKIT_SSE_HPP

#include "layoutkit/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace layoutkit {

/// d-regular graph with a planted partition into q equal non-expanding
/// blocks; block i occupies the contiguous id range [i*block_size, ...).
struct PlantedInstance {
    UGraph graph;
    int q = 1;
    int block_size = 0;
    int degree = 0;
    std::vector<VertexSet> blocks;
    long long cross_edges = 0;
    std::vector<long long> block_cuts;
    std::uint64_t seed = 0;

    Rational max_block_expansion() const;
};

/// Random d-regular blocks joined by cross_edges/2 degree-preserving edge
/// swaps between blocks; cross_edges must be even. Deterministic per seed.
PlantedInstance gen_planted(int q, int block_size, int d, long long cross_edges,
                            std::uint64_t seed);

/// Pairing-model d-regular graph, retried until simple.
UGraph gen_random_regular(int n, int d, std::uint64_t seed);

/// Blocks in index order, ids ascending inside each block.
Ordering block_ordering(const PlantedInstance& inst);

double normal_cdf(double x);
double normal_quantile(double p);

/// Gamma_rho(mu): probability that two rho-correlated standard normals both
/// fall below the mu-quantile. Numerical integration of the density with
/// adaptive refinement; endpoints handled by their analytic limits.
double gamma_rho(double rho, double mu);

/// 1 - (Gamma_{1-eps/2}(mu) + gamma) / mu.
double no_case_bound(double eps, double gamma, double mu);

struct GammaFactReport {
    double c_witness = 0.0;
    double worst_eps = 0.0;
    double worst_mu = 0.0;
    bool positive = false;
};

/// Largest c with Gamma_{1-eps}(mu) <= mu(1 - c*sqrt(eps)) across the grid.
GammaFactReport check_gamma_fact(const std::vector<double>& eps_grid,
                                 const std::vector<double>& mu_grid);

/// Unbiased draw from [0, k); avoids distribution classes so that seeded
/// runs repeat across platforms.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k);

} // namespace layoutkit

#endif

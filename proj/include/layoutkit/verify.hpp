#ifndef LAYOUTKIT_VERIFY_HPP
#define LAYOUTKIT_VERIFY_HPP

#include "layoutkit/pebbling.hpp"
#include "layoutkit/reductions.hpp"
#include "layoutkit/sse.hpp"

#include <string>
#include <vector>

namespace layoutkit {

/// layout(D;V,max) <= peak one-shot cost <= layout(D;V,max)+1, and the
/// ordering-induced strategy validates as one-shot black.
VerifyReport check_pebbling_ordering_ledger(const Dag& d, const SolveOptions& opt = {});

/// Indegree-2 transform: cost(D) <= cost(D') <= cost(D)+d under both
/// accountings, and the transform really bounds indegree by 2.
VerifyReport check_indegree2_bounds(const Dag& d, const SolveOptions& opt = {});

/// Single-sink transform: cost(D) <= cost(D') <= cost(D)+s+1, one sink,
/// indegree bound preserved.
VerifyReport check_single_sink_bounds(const Dag& d, const SolveOptions& opt = {});

/// |layout(G_D;V,max) - 1 - BW_est(D)| <= 2 with the exact residual logged.
VerifyReport check_lengauer_dag_to_graph(const Dag& d, const SolveOptions& opt = {});

/// |BW_est(D_G) + 2 - layout(G;V,max)| <= 2 with the exact residual logged.
VerifyReport check_lengauer_graph_to_dag(const UGraph& g, const SolveOptions& opt = {});

/// Every exhaustively enumerated one-shot black strategy of the size-d
/// pyramid satisfies the frugal source-count property, and the search
/// optimum agrees with the ordering DP.
VerifyReport check_pyramid_frugal(int d);

/// The noise-stability numerics: endpoint identities, the arcsine oracle at
/// mu = 1/2, monotonicity grids, and a positive witness c for the
/// Gamma_{1-eps} upper bound.
VerifyReport check_gamma_numerics();

/// Planted instance: regularity, re-measured expansions, and the block
/// ordering staying within intra + cross edges.
VerifyReport check_planted_instance(int q, int block_size, int deg, long long cross,
                                    std::uint64_t seed);

struct SuiteOptions {
    std::string corpus = "small"; // tiny | small | full
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string suite;
    std::vector<VerifyReport> reports;
    int total = 0;
    int failed = 0;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

} // namespace layoutkit

#endif

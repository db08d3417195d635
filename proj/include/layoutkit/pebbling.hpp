#ifndef LAYOUTKIT_PEBBLING_HPP
#define LAYOUTKIT_PEBBLING_HPP

#include "layoutkit/graph.hpp"
#include "layoutkit/layout.hpp"

#include <functional>
#include <string>
#include <vector>

namespace layoutkit {

struct PebbleConfig {
    VertexSet black, white;
};

enum class MoveKind { place_black, remove_black, place_white, remove_white };

struct PebbleMove {
    MoveKind kind;
    int vertex;
};

/// A pebbling strategy as the full configuration sequence P_0..P_tau.
struct PebbleStrategy {
    std::vector<PebbleConfig> configs;

    /// Mechanically applies the moves starting from the empty configuration;
    /// semantic violations are left for validate_strategy to report.
    static PebbleStrategy from_moves(int n, const std::vector<PebbleMove>& moves);
    std::vector<PebbleMove> to_moves() const;
};

/// Move-list file format: one "pb v" / "rb v" / "pw v" / "rw v" per line,
/// 1-based vertex ids.
std::vector<PebbleMove> parse_moves(const std::string& text);
std::string serialize_moves(const std::vector<PebbleMove>& moves);

enum class PebbleMode { black, black_white };

struct StrategyReport {
    bool valid = false;
    long long cost = 0;
    bool one_shot = false;
    int violation_step = -1;
    std::string violation;
};

StrategyReport validate_strategy(const Dag& d, const PebbleStrategy& s, PebbleMode mode);

/// Pebble vertices in pi order; remove a pebble as soon as every successor
/// has been pebbled. Valid, black, and one-shot for topological pi.
PebbleStrategy ordering_to_black_strategy(const Dag& d, const Ordering& pi);

enum class CostAccounting { peak, post_cleanup };

/// Optimal one-shot black pebbling cost. post_cleanup counts pebbles after
/// the eager removals that follow each placement; peak counts every
/// configuration, so it can exceed post_cleanup by one.
long long one_shot_black_cost(const Dag& d, CostAccounting acc, const SolveOptions& opt = {});

/// Undirected graph on V(D): arcs undirected plus all pairs with a common
/// successor.
UGraph lengauer_to_undirected(const Dag& d);

/// Bipartite DAG on V + E with an arc from each vertex to each incident
/// edge-node.
Dag lengauer_to_dag(const UGraph& g);

/// Layered DAG with d source nodes, indegree two, single apex.
/// Ids are assigned layer by layer, sources first.
Dag build_pyramid(int d);

/// Replace every vertex of indegree k >= 3 by a size-k pyramid whose sources
/// are the vertex's predecessors (sorted by id) and whose apex is the vertex.
Dag indegree2_transform(const Dag& d);

/// Add a balanced binary tree over the sinks (sorted by id); returns the
/// input unchanged when it already has a single sink.
Dag single_sink_transform(const Dag& d);

/// True iff, in every configuration up to the first one where all pyramid
/// sources have been pebbled, the pebble count is at least the number of
/// sources pebbled so far. Requires a valid one-shot black strategy of
/// build_pyramid(d).
bool frugal_pyramid_check(int d, const PebbleStrategy& s);

struct PebbleSearchOptions {
    int max_n = 6;
    std::uint64_t state_budget = std::uint64_t(1) << 24;
};

/// Exact one-shot pebbling cost by iterative-deepening search over
/// configurations, with forced removal of pebbles no future move can use.
long long one_shot_cost_exhaustive(const Dag& d, PebbleMode mode,
                                   const PebbleSearchOptions& opt = {});

/// Calls the callback on every complete valid one-shot black strategy.
void enumerate_one_shot_black_strategies(const Dag& d,
                                         const std::function<void(const PebbleStrategy&)>& cb,
                                         std::uint64_t node_budget = std::uint64_t(1) << 24);

} // namespace layoutkit

#endif

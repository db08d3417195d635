#ifndef LAYOUTKIT_REDUCTIONS_HPP
#define LAYOUTKIT_REDUCTIONS_HPP

#include "layoutkit/graph.hpp"
#include "layoutkit/layout.hpp"

#include <optional>
#include <string>
#include <vector>

namespace layoutkit {

/// Bipartite DAG on V + E with every arc going from an edge-node to an
/// endpoint vertex-node; every path has length at most one.
struct IncidenceDag {
    Dag dag;
    int base_n = 0;
    int base_m = 0;

    int vertex_node(int v) const { return v; }
    int edge_node(int j) const { return base_n + j; }
};

IncidenceDag to_incidence_dag(const UGraph& g);

/// Bipartite undirected graph on r copies of each vertex plus one node per
/// edge; each edge-node is joined to all copies of both endpoints.
struct ReplicatedGraph {
    UGraph graph;
    int r = 1;
    int base_n = 0;
    int base_m = 0;

    int copy_node(int v, int i) const { return v * r + i; }
    int edge_node(int j) const { return base_n * r + j; }
};

ReplicatedGraph to_replicated_bipartite(const UGraph& g, int r, int node_budget = 4096);

/// Extend an ordering of V(G) to the incidence DAG by inserting each edge
/// immediately before its first endpoint (edges sharing the first endpoint
/// ordered by the position of their second endpoint).
Ordering lift_ordering_dag(const UGraph& g, const Ordering& pi);

/// Same insertion rule on the replicated graph; the r copies of each vertex
/// are consecutive.
Ordering lift_ordering_undirected(const UGraph& g, int r, const Ordering& pi);

/// Minimum cut over bipartitions with |S| = ceil(n/2).
long long min_balanced_cut(const UGraph& g);

/// Minimum cut over bipartitions (S, T) with 5|S| >= n and 5|T| >= n;
/// empty when no bipartition qualifies.
std::optional<long long> min_fifth_partition_cut(const UGraph& g);

struct LemmaCheck {
    std::string name;
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

struct VerifyReport {
    std::string lemma;
    std::string instance;
    std::vector<LemmaCheck> checks;
    std::vector<std::pair<std::string, long long>> extras;
    bool holds = true;
    bool hypothesis_met = true;

    void add_check(const std::string& name, long long lhs, const std::string& rel, long long rhs);
    void add_bool(const std::string& name, bool ok);
};

/// layout(D;E,max) <= MCLA(G)+d and layout(D;E,sum) <= (MLA(G)+d|V'|)(d+1),
/// plus the lifted ordering achieving the max bound.
VerifyReport verify_dag_completeness(const UGraph& g, const SolveOptions& opt = {});

/// layout(D;V,max) >= min balanced cut of G.
VerifyReport verify_dag_soundness_bound(const UGraph& g, const SolveOptions& opt = {});

/// layout(G';V,max) <= MCLA(G) and layout(G';V,sum) <= (d+r)MLA(G), plus the
/// lifted ordering staying within MCLA(G)+d.
VerifyReport verify_undir_completeness(const UGraph& g, int r, const SolveOptions& opt = {});

/// layout(G';V,max) >= min cut over near-balanced bipartitions of V(G);
/// the hypothesis flag records whether r >= |V||E|.
VerifyReport verify_undir_soundness_bound(const UGraph& g, int r, const SolveOptions& opt = {});

/// tw(G') >= psi_{G'}(1/2, V') - 1 >= (same cut bound) - 1, checked as the
/// two-link chain.
VerifyReport verify_treewidth_bound(const UGraph& g, int r, const SolveOptions& opt = {});

} // namespace layoutkit

#endif

#ifndef LAYOUTKIT_CORPUS_HPP
#define LAYOUTKIT_CORPUS_HPP

#include "layoutkit/graph.hpp"

#include <cstdint>
#include <vector>

namespace layoutkit {

/// One representative per isomorphism class, generated by vertex
/// augmentation with canonical-form deduplication. Results are cached per
/// process; n is capped at 8 for graphs and 6 for DAGs.
std::vector<UGraph> all_graphs(int n, bool connected_only);
std::vector<Dag> all_dags(int n, bool connected_only);

std::vector<UGraph> all_graphs_upto(int max_n, bool connected_only);
std::vector<Dag> all_dags_upto(int max_n, bool connected_only);

bool is_connected(const UGraph& g);
bool is_weakly_connected(const Dag& d);

UGraph random_graph(int n, std::uint64_t seed, double p = 0.5);
Dag random_dag(int n, std::uint64_t seed, double p = 0.5);
Dag random_dag_bounded_indegree(int n, int max_indegree, std::uint64_t seed, double p = 0.5);

} // namespace layoutkit

#endif

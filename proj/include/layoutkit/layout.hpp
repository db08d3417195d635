#ifndef LAYOUTKIT_LAYOUT_HPP
#define LAYOUTKIT_LAYOUT_HPP

#include "layoutkit/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace layoutkit {

enum class Direction { undirected, dag };
enum class CostKind { edge, vertex };
enum class AggKind { sum, max };

/// One of the eight (direction, cost, aggregator) layout problems.
struct ProblemSpec {
    Direction direction;
    CostKind cost;
    AggKind agg;

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        return a.direction == b.direction && a.cost == b.cost && a.agg == b.agg;
    }
};

/// Total mapping from the standard problem names to their spec triple.
/// Names: mla, mcla, igc, vertex_separation, register_sufficiency,
/// dag_mla, dag_mcla, dag_sumvertex.
ProblemSpec named_problem(const std::string& name);
std::vector<std::string> problem_names();
/// Canonical name of a spec, or "" if it has none in the table.
std::string problem_name(const ProblemSpec& spec);

enum class SolveMethod { bruteforce, subset_dp, heuristic };
const char* method_name(SolveMethod m);

struct LayoutResult {
    long long value = 0;
    Ordering witness;
    SolveMethod method = SolveMethod::bruteforce;
};

struct SolveOptions {
    int bruteforce_limit = 9;
    int dp_limit = 24;
    std::uint64_t state_budget = std::uint64_t(1) << 23;
    int greedy_restarts = 16;
    std::uint64_t seed = 1;
};

/// Edges (as endpoint pairs) crossing position i under pi: one endpoint at
/// rank <= i, the other at rank > i. For a Dag, pi must be topological.
std::vector<std::pair<int, int>> crossing_edges(const UGraph& g, const Ordering& pi, int i);
std::vector<std::pair<int, int>> crossing_edges(const Dag& d, const Ordering& pi, int i);

/// Left endpoints of the edges crossing i.
VertexSet left_vertices(const UGraph& g, const Ordering& pi, int i);
VertexSet left_vertices(const Dag& d, const Ordering& pi, int i);

long long evaluate(const UGraph& g, const ProblemSpec& spec, const Ordering& pi);
long long evaluate(const Dag& d, const ProblemSpec& spec, const Ordering& pi);
long long evaluate(const AnyGraph& h, const ProblemSpec& spec, const Ordering& pi);

/// Cost of a prefix set: edge cost counts edges/arcs leaving S, vertex cost
/// counts members of S with an edge/arc into the complement.
long long prefix_cost(const UGraph& g, CostKind cost, const VertexSet& s);
long long prefix_cost(const Dag& d, CostKind cost, const VertexSet& s);

LayoutResult solve_bruteforce(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult solve_bruteforce(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult solve_bruteforce(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt = {});

LayoutResult solve_subset_dp(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult solve_subset_dp(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult solve_subset_dp(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt = {});

LayoutResult heuristic_greedy(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult heuristic_greedy(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt = {});
LayoutResult heuristic_greedy(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt = {});

/// min over topological pi of max_i (|V_{i-1}(pi)| + 1): the peak pebble
/// count of the eager one-shot black strategy induced by the best ordering.
LayoutResult solve_peak_pebbles_dp(const Dag& d, const SolveOptions& opt = {});
LayoutResult solve_peak_pebbles_bruteforce(const Dag& d, const SolveOptions& opt = {});

} // namespace layoutkit

#endif

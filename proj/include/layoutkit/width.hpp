#ifndef LAYOUTKIT_WIDTH_HPP
#define LAYOUTKIT_WIDTH_HPP

#include "layoutkit/graph.hpp"
#include "layoutkit/layout.hpp"

#include <string>
#include <vector>

namespace layoutkit {

/// Tree of bags; bag i is a vertex set of the host graph, tree edges join
/// bag indices.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;
};

struct DecompositionReport {
    bool valid = false;
    int width = -1;
    std::string violation;
};

/// Checks (T1) all vertices covered, (T2) every edge inside some bag,
/// (T3) the bags holding any fixed vertex form a subtree; optionally that
/// the tree is a path.
DecompositionReport validate_decomposition(const UGraph& g, const TreeDecomposition& td,
                                           bool require_path);

/// PACE-style: "s td <#bags> <width+1> <n>", "b <id> v1 v2 ...", "e i j".
TreeDecomposition load_decomposition(const std::string& text);
std::string serialize(const TreeDecomposition& td);

/// Degree of v at elimination time: vertices outside `eliminated` joined to v
/// by a path whose internal vertices are all eliminated.
int elim_degree(const UGraph& g, const VertexSet& eliminated, int v);

int elimination_width(const UGraph& g, const std::vector<int>& order);

struct TwOptions {
    int limit = 18;
    std::uint64_t node_budget = std::uint64_t(1) << 24;
};

struct WidthResult {
    int width = 0;
    std::vector<int> order; // elimination order witness
};

/// Exact treewidth: iterative deepening over the target width with a
/// memoized elimination search (simplicial vertices forced, symmetric
/// branches merged), bracketed by degeneracy and min-fill bounds.
WidthResult treewidth_exact(const UGraph& g, const TwOptions& opt = {});

struct PathwidthResult {
    int width = 0;
    Ordering witness;
};

/// pw(G) = layout(G; V, max), solved by the layout engine.
PathwidthResult pathwidth_exact(const UGraph& g, const SolveOptions& opt = {});

enum class HalfSepMode { full_vertex_set, maximize_over_W };

struct HalfSepOptions {
    int full_limit = 18;
    int max_limit = 14;
};

/// psi_G(1/2, W): minimum size of a set S such that every component of
/// G[V - S] holds at most |W|/2 vertices of W (exact integer comparison).
int half_separator_of(const UGraph& g, const VertexSet& w);

/// K_{1/2}(G) = max over W of psi_G(1/2, W), or just psi_G(1/2, V).
int half_separator_number(const UGraph& g, HalfSepMode mode, const HalfSepOptions& opt = {});

struct SeparatorBoundReport {
    int treewidth = 0;
    int k_half = 0;
    bool holds = false;
};

/// Instance check of the bound tw(G) >= K_{1/2}(G) - 1.
SeparatorBoundReport check_separator_bound(const UGraph& g, const TwOptions& two = {},
                                           const HalfSepOptions& hso = {});

} // namespace layoutkit

#endif

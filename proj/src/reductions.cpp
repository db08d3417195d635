#include "layoutkit/reductions.hpp"

#include "layoutkit/width.hpp"

#include <algorithm>
#include <sstream>

namespace layoutkit {

// ── Constructions ───────────────────────────────────────────────────

IncidenceDag to_incidence_dag(const UGraph& g) {
    int n = g.num_vertices(), m = g.num_edges();
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * m);
    for (int j = 0; j < m; ++j) {
        auto [u, v] = g.edges()[j];
        arcs.emplace_back(n + j, u);
        arcs.emplace_back(n + j, v);
    }
    IncidenceDag out{Dag(n + m, std::move(arcs)), n, m};
    return out;
}

ReplicatedGraph to_replicated_bipartite(const UGraph& g, int r, int node_budget) {
    if (r < 1) throw validation_error("replication factor must be positive");
    int n = g.num_vertices(), m = g.num_edges();
    long long total = static_cast<long long>(r) * n + m;
    if (total > node_budget) throw size_limit_error("replicated graph exceeds node budget");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(2) * r * m);
    for (int j = 0; j < m; ++j) {
        auto [u, v] = g.edges()[j];
        for (int i = 0; i < r; ++i) {
            edges.emplace_back(n * r + j, u * r + i);
            edges.emplace_back(n * r + j, v * r + i);
        }
    }
    ReplicatedGraph out{UGraph(static_cast<int>(total), std::move(edges)), r, n, m};
    return out;
}

// ── Ordering lifts ──────────────────────────────────────────────────

namespace {

// Edge indices grouped by their pi-first endpoint, each group sorted by the
// position of the second endpoint.
std::vector<std::vector<int>> edges_by_first(const UGraph& g, const Ordering& pi) {
    std::vector<std::vector<int>> by_first(g.num_vertices());
    for (int j = 0; j < g.num_edges(); ++j) {
        auto [u, v] = g.edges()[j];
        int first = pi.position(u) < pi.position(v) ? u : v;
        by_first[first].push_back(j);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::sort(by_first[v].begin(), by_first[v].end(), [&](int a, int b) {
            auto other = [&](int j) {
                auto [x, y] = g.edges()[j];
                return x == v ? pi.position(y) : pi.position(x);
            };
            return other(a) < other(b);
        });
    }
    return by_first;
}

} // namespace

Ordering lift_ordering_dag(const UGraph& g, const Ordering& pi) {
    if (pi.n() != g.num_vertices()) throw validation_error("ordering size mismatch");
    auto by_first = edges_by_first(g, pi);
    std::vector<int> seq;
    seq.reserve(g.num_vertices() + g.num_edges());
    for (int p = 1; p <= g.num_vertices(); ++p) {
        int v = pi.vertex_at(p);
        for (int j : by_first[v]) seq.push_back(g.num_vertices() + j);
        seq.push_back(v);
    }
    return Ordering::from_sequence(std::move(seq));
}

Ordering lift_ordering_undirected(const UGraph& g, int r, const Ordering& pi) {
    if (pi.n() != g.num_vertices()) throw validation_error("ordering size mismatch");
    auto by_first = edges_by_first(g, pi);
    int n = g.num_vertices();
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(n) * r + g.num_edges());
    for (int p = 1; p <= n; ++p) {
        int v = pi.vertex_at(p);
        for (int j : by_first[v]) seq.push_back(n * r + j);
        for (int i = 0; i < r; ++i) seq.push_back(v * r + i);
    }
    return Ordering::from_sequence(std::move(seq));
}

// ── Cut bounds ──────────────────────────────────────────────────────

long long min_balanced_cut(const UGraph& g) {
    int n = g.num_vertices();
    if (n > 30) throw size_limit_error("balanced cut enumeration limit exceeded");
    int k = (n + 1) / 2;
    if (k == 0) return 0;
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    long long best = -1;
    std::uint64_t s = (std::uint64_t(1) << k) - 1;
    while (true) {
        long long cut = 0;
        for (auto [u, v] : g.edges())
            if (((s >> u) & 1) != ((s >> v) & 1)) ++cut;
        if (best < 0 || cut < best) best = cut;
        std::uint64_t c = s & (~s + 1);
        std::uint64_t r2 = s + c;
        if (r2 > full) break;
        s = (((r2 ^ s) >> 2) / c) | r2;
    }
    return best;
}

std::optional<long long> min_fifth_partition_cut(const UGraph& g) {
    int n = g.num_vertices();
    if (n > 30) throw size_limit_error("partition cut enumeration limit exceeded");
    std::optional<long long> best;
    std::uint64_t full = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
    for (std::uint64_t s = 0; s <= full && n > 0; ++s) {
        int a = __builtin_popcountll(s);
        int b = n - a;
        if (5 * a < n || 5 * b < n) continue;
        long long cut = 0;
        for (auto [u, v] : g.edges())
            if (((s >> u) & 1) != ((s >> v) & 1)) ++cut;
        if (!best || cut < *best) best = cut;
    }
    return best;
}

// ── Lemma verification ──────────────────────────────────────────────

void VerifyReport::add_check(const std::string& name, long long lhs, const std::string& rel,
                             long long rhs) {
    bool ok = rel == "<=" ? lhs <= rhs : lhs >= rhs;
    checks.push_back({name + " (" + std::to_string(lhs) + " " + rel + " " + std::to_string(rhs) + ")",
                      lhs, rhs, ok});
    holds = holds && ok;
}

void VerifyReport::add_bool(const std::string& name, bool ok) {
    checks.push_back({name, ok ? 1 : 0, 1, ok});
    holds = holds && ok;
}

namespace {

std::string instance_label(const UGraph& g) {
    return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges());
}

SolveOptions widen(SolveOptions opt, int n) {
    opt.dp_limit = std::max(opt.dp_limit, n);
    return opt;
}

} // namespace

VerifyReport verify_dag_completeness(const UGraph& g, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "incidence-dag-completeness";
    rep.instance = instance_label(g);
    auto inc = to_incidence_dag(g);
    int d = g.max_degree();
    long long vprime = inc.dag.num_vertices();
    auto big = widen(opt, inc.dag.num_vertices());
    auto small = widen(opt, g.num_vertices());

    auto mcla = solve_subset_dp(g, named_problem("mcla"), small);
    auto mla = solve_subset_dp(g, named_problem("mla"), small);
    auto demax = solve_subset_dp(inc.dag, named_problem("dag_mcla"), big);
    auto desum = solve_subset_dp(inc.dag, named_problem("dag_mla"), big);

    rep.add_check("layout(D;E,max) <= MCLA+d", demax.value, "<=", mcla.value + d);
    rep.add_check("layout(D;E,sum) <= (MLA+d|V'|)(d+1)", desum.value, "<=",
                  (mla.value + static_cast<long long>(d) * vprime) * (d + 1));

    auto lifted = lift_ordering_dag(g, mcla.witness);
    long long lifted_max = evaluate(inc.dag, named_problem("dag_mcla"), lifted);
    rep.add_check("lifted ordering achieves max bound", lifted_max, "<=", mcla.value + d);
    rep.extras.emplace_back("mcla", mcla.value);
    rep.extras.emplace_back("mla", mla.value);
    rep.extras.emplace_back("max_degree", d);
    rep.extras.emplace_back("lifted_max", lifted_max);
    rep.extras.emplace_back("tight_sum_bound", (d + 1) * mla.value + d * vprime);
    return rep;
}

VerifyReport verify_dag_soundness_bound(const UGraph& g, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "incidence-dag-soundness";
    rep.instance = instance_label(g);
    auto inc = to_incidence_dag(g);
    auto big = widen(opt, inc.dag.num_vertices());
    auto dvmax = solve_subset_dp(inc.dag, named_problem("register_sufficiency"), big);
    long long bound = min_balanced_cut(g);
    rep.add_check("layout(D;V,max) >= min balanced cut", dvmax.value, ">=", bound);
    return rep;
}

VerifyReport verify_undir_completeness(const UGraph& g, int r, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "replicated-completeness";
    rep.instance = instance_label(g) + " r=" + std::to_string(r);
    auto rg = to_replicated_bipartite(g, r);
    int d = g.max_degree();
    auto big = widen(opt, rg.graph.num_vertices());
    auto small = widen(opt, g.num_vertices());

    auto mcla = solve_subset_dp(g, named_problem("mcla"), small);
    auto mla = solve_subset_dp(g, named_problem("mla"), small);
    auto vmax = solve_subset_dp(rg.graph, named_problem("vertex_separation"), big);
    auto vsum = solve_subset_dp(rg.graph, named_problem("igc"), big);

    rep.add_check("layout(G';V,max) <= MCLA", vmax.value, "<=", mcla.value);
    rep.add_check("layout(G';V,sum) <= (d+r)MLA", vsum.value, "<=",
                  static_cast<long long>(d + r) * mla.value);

    auto lifted = lift_ordering_undirected(g, r, mcla.witness);
    long long lifted_max = evaluate(rg.graph, named_problem("vertex_separation"), lifted);
    rep.add_check("lifted ordering within MCLA+d", lifted_max, "<=", mcla.value + d);
    rep.extras.emplace_back("mcla", mcla.value);
    rep.extras.emplace_back("mla", mla.value);
    rep.extras.emplace_back("max_degree", d);
    rep.extras.emplace_back("lifted_max", lifted_max);
    return rep;
}

VerifyReport verify_undir_soundness_bound(const UGraph& g, int r, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "replicated-soundness";
    rep.instance = instance_label(g) + " r=" + std::to_string(r);
    rep.hypothesis_met =
        static_cast<long long>(r) >= static_cast<long long>(g.num_vertices()) * g.num_edges();
    auto rg = to_replicated_bipartite(g, r);
    auto big = widen(opt, rg.graph.num_vertices());
    auto vmax = solve_subset_dp(rg.graph, named_problem("vertex_separation"), big);
    auto bound = min_fifth_partition_cut(g);
    if (bound) {
        rep.add_check("layout(G';V,max) >= partition cut bound", vmax.value, ">=", *bound);
    } else {
        rep.extras.emplace_back("no_valid_partition", 1);
    }
    rep.extras.emplace_back("layout_vmax", vmax.value);
    return rep;
}

VerifyReport verify_treewidth_bound(const UGraph& g, int r, const SolveOptions& opt) {
    VerifyReport rep;
    rep.lemma = "replicated-treewidth-chain";
    rep.instance = instance_label(g) + " r=" + std::to_string(r);
    rep.hypothesis_met =
        static_cast<long long>(r) >= static_cast<long long>(g.num_vertices()) * g.num_edges();
    auto rg = to_replicated_bipartite(g, r);
    TwOptions two;
    two.limit = std::max(two.limit, rg.graph.num_vertices());
    two.node_budget = std::max(two.node_budget, opt.state_budget);
    auto tw = treewidth_exact(rg.graph, two);
    int psi = half_separator_of(rg.graph, VertexSet::full(rg.graph.num_vertices()));
    auto bound = min_fifth_partition_cut(g);
    rep.add_check("tw(G') >= psi(1/2,V') - 1", tw.width, ">=", psi - 1);
    if (bound) rep.add_check("psi(1/2,V') >= partition cut bound", psi, ">=", *bound);
    rep.extras.emplace_back("treewidth", tw.width);
    rep.extras.emplace_back("psi_half_full", psi);
    return rep;
}

} // namespace layoutkit

#include "layoutkit/layout.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

namespace layoutkit {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Unified mask view of a UGraph or Dag, for the subset solvers (n <= 63).
struct HostView {
    int n = 0;
    bool directed = false;
    std::vector<std::uint64_t> adj_out, adj_in;
};

HostView make_view(const UGraph& g) {
    if (g.num_vertices() > 63) throw size_limit_error("subset solvers support at most 63 vertices");
    HostView h;
    h.n = g.num_vertices();
    h.directed = false;
    h.adj_out.assign(h.n, 0);
    for (auto [u, v] : g.edges()) {
        h.adj_out[u] |= std::uint64_t(1) << v;
        h.adj_out[v] |= std::uint64_t(1) << u;
    }
    h.adj_in = h.adj_out;
    return h;
}

HostView make_view(const Dag& d) {
    if (d.num_vertices() > 63) throw size_limit_error("subset solvers support at most 63 vertices");
    HostView h;
    h.n = d.num_vertices();
    h.directed = true;
    h.adj_out.assign(h.n, 0);
    h.adj_in.assign(h.n, 0);
    for (auto [u, v] : d.arcs()) {
        h.adj_out[u] |= std::uint64_t(1) << v;
        h.adj_in[v] |= std::uint64_t(1) << u;
    }
    return h;
}

long long prefix_cost_mask(const HostView& h, CostKind ck, std::uint64_t s) {
    long long c = 0;
    std::uint64_t rest = s;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        std::uint64_t leaving = h.adj_out[v] & ~s;
        if (ck == CostKind::edge)
            c += __builtin_popcountll(leaving);
        else
            c += leaving ? 1 : 0;
    }
    return c;
}

// Vertices whose swap is a graph automorphism are interchangeable in any
// ordering; the DP only visits prefix sets taking each class's members in
// id order. Both twin kinds (equal open or closed neighborhoods) qualify.
std::vector<std::vector<int>> twin_classes(const HostView& h) {
    std::vector<int> parent(h.n);
    for (int v = 0; v < h.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < h.n; ++u) {
        for (int v = u + 1; v < h.n; ++v) {
            std::uint64_t pairmask = ~((std::uint64_t(1) << u) | (std::uint64_t(1) << v));
            bool twins;
            if (h.directed) {
                bool arc = ((h.adj_out[u] >> v) & 1) || ((h.adj_out[v] >> u) & 1);
                twins = !arc && h.adj_out[u] == h.adj_out[v] && h.adj_in[u] == h.adj_in[v];
            } else {
                twins = (h.adj_out[u] & pairmask) == (h.adj_out[v] & pairmask);
            }
            if (twins) parent[find(u)] = find(v);
        }
    }
    std::unordered_map<int, std::vector<int>> groups;
    for (int v = 0; v < h.n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        classes.push_back(members);
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

enum class ObjKind { agg_sum, agg_max, peak };

struct Objective {
    ObjKind kind;
    CostKind cost;
};

struct Entry {
    long long arrival;
    std::int16_t parent;
};

long long finalize_state(ObjKind k, long long arrival, long long cost_s) {
    switch (k) {
        case ObjKind::agg_sum: return arrival + cost_s;
        case ObjKind::agg_max: return std::max(arrival, cost_s);
        case ObjKind::peak: return arrival;
    }
    return arrival;
}

long long departure_value(ObjKind k, long long g, long long cost_s) {
    if (k == ObjKind::peak) return std::max(g, cost_s + 1);
    return g;
}

struct DpOutcome {
    long long value;
    std::vector<int> order;
};

DpOutcome run_layered_dp(const HostView& h, Objective obj, const SolveOptions& opt) {
    int n = h.n;
    if (n == 0) return {0, {}};

    auto classes = twin_classes(h);
    int nc = static_cast<int>(classes.size());
    std::vector<std::uint64_t> class_mask(nc, 0);
    for (int c = 0; c < nc; ++c)
        for (int v : classes[c]) class_mask[c] |= std::uint64_t(1) << v;

    using Layer = std::vector<std::pair<std::uint64_t, Entry>>;
    std::vector<Layer> layers(n + 1);
    layers[0] = {{0, Entry{0, -1}}};
    std::uint64_t total_states = 1;

    for (int k = 0; k < n; ++k) {
        std::unordered_map<std::uint64_t, Entry> next;
        next.reserve(layers[k].size() * 2);
        for (auto& [s, e] : layers[k]) {
            long long cost_s = prefix_cost_mask(h, obj.cost, s);
            long long g = finalize_state(obj.kind, e.arrival, cost_s);
            long long o = departure_value(obj.kind, g, cost_s);
            for (int c = 0; c < nc; ++c) {
                int cnt = __builtin_popcountll(s & class_mask[c]);
                if (cnt == static_cast<int>(classes[c].size())) continue;
                int v = classes[c][cnt];
                if (h.directed && (h.adj_in[v] & ~s)) continue;
                std::uint64_t s2 = s | (std::uint64_t(1) << v);
                auto it = next.find(s2);
                if (it == next.end())
                    next.emplace(s2, Entry{o, static_cast<std::int16_t>(v)});
                else if (o < it->second.arrival)
                    it->second = Entry{o, static_cast<std::int16_t>(v)};
            }
        }
        if (next.empty()) throw validation_error("no feasible ordering");
        layers[k + 1].assign(next.begin(), next.end());
        std::sort(layers[k + 1].begin(), layers[k + 1].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        total_states += layers[k + 1].size();
        if (total_states > opt.state_budget)
            throw size_limit_error("subset DP state budget exceeded");
    }

    std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    auto& final_layer = layers[n];
    auto it = std::lower_bound(final_layer.begin(), final_layer.end(), full,
                               [](const auto& a, std::uint64_t key) { return a.first < key; });
    long long answer = finalize_state(obj.kind, it->second.arrival, 0);

    std::vector<int> order(n);
    std::uint64_t s = full;
    for (int k = n; k >= 1; --k) {
        auto& layer = layers[k];
        auto jt = std::lower_bound(layer.begin(), layer.end(), s,
                                   [](const auto& a, std::uint64_t key) { return a.first < key; });
        int v = jt->second.parent;
        order[k - 1] = v;
        s &= ~(std::uint64_t(1) << v);
    }
    return {answer, order};
}

// Exhaustive enumeration of feasible orderings in lexicographic sequence
// order, keeping the first strict optimum.
struct BruteState {
    const HostView& h;
    Objective obj;
    long long best = kInf;
    std::vector<int> best_order;
    std::vector<int> current;

    void dfs(std::uint64_t s, long long acc) {
        int n = h.n;
        if (static_cast<int>(current.size()) == n) {
            long long value = acc;
            if (value < best) {
                best = value;
                best_order = current;
            }
            return;
        }
        long long cost_s = prefix_cost_mask(h, obj.cost, s);
        long long dep = departure_value(obj.kind, 0, cost_s); // peak uses cost before step
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1) continue;
            if (h.directed && (h.adj_in[v] & ~s)) continue;
            std::uint64_t s2 = s | (std::uint64_t(1) << v);
            long long c2 = prefix_cost_mask(h, obj.cost, s2);
            long long acc2 = 0;
            switch (obj.kind) {
                case ObjKind::agg_sum: acc2 = acc + c2; break;
                case ObjKind::agg_max: acc2 = std::max(acc, c2); break;
                case ObjKind::peak: acc2 = std::max(acc, dep); break;
            }
            current.push_back(v);
            dfs(s2, acc2);
            current.pop_back();
        }
    }
};

DpOutcome run_bruteforce(const HostView& h, Objective obj, const SolveOptions& opt) {
    if (h.n > opt.bruteforce_limit) throw size_limit_error("brute force size limit exceeded");
    if (h.n == 0) return {0, {}};
    BruteState st{h, obj, kInf, {}, {}};
    st.dfs(0, 0);
    if (st.best >= kInf) throw validation_error("no feasible ordering");
    return {st.best, st.best_order};
}

ObjKind agg_to_obj(AggKind a) { return a == AggKind::sum ? ObjKind::agg_sum : ObjKind::agg_max; }

LayoutResult make_result(DpOutcome out, SolveMethod m) {
    LayoutResult r;
    r.value = out.value;
    r.witness = Ordering::from_sequence(std::move(out.order));
    r.method = m;
    return r;
}

void check_direction(const ProblemSpec& spec, bool directed) {
    bool want_dag = spec.direction == Direction::dag;
    if (want_dag != directed)
        throw validation_error("problem direction does not match graph kind");
}

// Greedy construction without the 63-vertex mask restriction.
template <typename CostFn, typename FeasibleFn>
DpOutcome greedy_once(int n, AggKind agg, CostFn cost_of_prefix, FeasibleFn feasible,
                      std::mt19937_64& rng) {
    std::vector<bool> taken(n, false);
    std::vector<int> order;
    long long acc = 0;
    for (int step = 0; step < n; ++step) {
        long long best_cost = kInf;
        std::vector<int> ties;
        for (int v = 0; v < n; ++v) {
            if (taken[v] || !feasible(taken, v)) continue;
            taken[v] = true;
            long long c = cost_of_prefix(taken);
            taken[v] = false;
            if (c < best_cost) {
                best_cost = c;
                ties = {v};
            } else if (c == best_cost) {
                ties.push_back(v);
            }
        }
        int v = ties[rng() % ties.size()];
        taken[v] = true;
        order.push_back(v);
        acc = agg == AggKind::sum ? acc + best_cost : std::max(acc, best_cost);
    }
    return {acc, order};
}

} // namespace

// ── Problem names ───────────────────────────────────────────────────

namespace {
const std::pair<const char*, ProblemSpec> kProblems[] = {
    {"mla", {Direction::undirected, CostKind::edge, AggKind::sum}},
    {"mcla", {Direction::undirected, CostKind::edge, AggKind::max}},
    {"igc", {Direction::undirected, CostKind::vertex, AggKind::sum}},
    {"vertex_separation", {Direction::undirected, CostKind::vertex, AggKind::max}},
    {"dag_mla", {Direction::dag, CostKind::edge, AggKind::sum}},
    {"dag_mcla", {Direction::dag, CostKind::edge, AggKind::max}},
    {"dag_sumvertex", {Direction::dag, CostKind::vertex, AggKind::sum}},
    {"register_sufficiency", {Direction::dag, CostKind::vertex, AggKind::max}},
};
}

ProblemSpec named_problem(const std::string& name) {
    for (auto& [nm, spec] : kProblems)
        if (name == nm) return spec;
    throw validation_error("unknown problem name '" + name + "'");
}

std::vector<std::string> problem_names() {
    std::vector<std::string> out;
    for (auto& [nm, spec] : kProblems) out.push_back(nm);
    return out;
}

std::string problem_name(const ProblemSpec& spec) {
    for (auto& [nm, s] : kProblems)
        if (s == spec) return nm;
    return "";
}

const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::bruteforce: return "bruteforce";
        case SolveMethod::subset_dp: return "subset_dp";
        case SolveMethod::heuristic: return "heuristic";
    }
    return "";
}

// ── Crossing sets and evaluation ────────────────────────────────────

std::vector<std::pair<int, int>> crossing_edges(const UGraph& g, const Ordering& pi, int i) {
    if (pi.n() != g.num_vertices()) throw validation_error("ordering size mismatch");
    if (i < 1 || i > g.num_vertices()) throw validation_error("position out of range");
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        int a = pi.position(u), b = pi.position(v);
        if (std::min(a, b) <= i && i < std::max(a, b)) out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::pair<int, int>> crossing_edges(const Dag& d, const Ordering& pi, int i) {
    if (!is_topological(d, pi)) throw validation_error("ordering is not topological");
    if (i < 1 || i > d.num_vertices()) throw validation_error("position out of range");
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : d.arcs())
        if (pi.position(u) <= i && i < pi.position(v)) out.emplace_back(u, v);
    return out;
}

VertexSet left_vertices(const UGraph& g, const Ordering& pi, int i) {
    VertexSet s(g.num_vertices());
    for (auto [u, v] : crossing_edges(g, pi, i))
        s.add(pi.position(u) <= i ? u : v);
    return s;
}

VertexSet left_vertices(const Dag& d, const Ordering& pi, int i) {
    VertexSet s(d.num_vertices());
    for (auto [u, v] : crossing_edges(d, pi, i)) s.add(u);
    return s;
}

namespace {
template <typename H>
long long evaluate_impl(const H& h, const ProblemSpec& spec, const Ordering& pi) {
    int n = h.num_vertices();
    long long acc = 0;
    for (int i = 1; i <= n; ++i) {
        long long c;
        if (spec.cost == CostKind::edge)
            c = static_cast<long long>(crossing_edges(h, pi, i).size());
        else
            c = left_vertices(h, pi, i).count();
        acc = spec.agg == AggKind::sum ? acc + c : std::max(acc, c);
    }
    return acc;
}
} // namespace

long long evaluate(const UGraph& g, const ProblemSpec& spec, const Ordering& pi) {
    check_direction(spec, false);
    return evaluate_impl(g, spec, pi);
}

long long evaluate(const Dag& d, const ProblemSpec& spec, const Ordering& pi) {
    check_direction(spec, true);
    if (!is_topological(d, pi)) throw validation_error("ordering is not topological");
    return evaluate_impl(d, spec, pi);
}

long long evaluate(const AnyGraph& h, const ProblemSpec& spec, const Ordering& pi) {
    return std::visit([&](const auto& g) { return evaluate(g, spec, pi); }, h);
}

// ── Prefix costs ────────────────────────────────────────────────────

long long prefix_cost(const UGraph& g, CostKind cost, const VertexSet& s) {
    if (s.universe() != g.num_vertices()) throw validation_error("set universe mismatch");
    if (cost == CostKind::edge) return cut_edges(g, s);
    long long c = 0;
    for (int v : s.members()) {
        for (int w : g.neighbors(v)) {
            if (!s.contains(w)) {
                ++c;
                break;
            }
        }
    }
    return c;
}

long long prefix_cost(const Dag& d, CostKind cost, const VertexSet& s) {
    if (s.universe() != d.num_vertices()) throw validation_error("set universe mismatch");
    long long c = 0;
    for (int v : s.members()) {
        if (cost == CostKind::edge) {
            for (int w : d.out_neighbors(v))
                if (!s.contains(w)) ++c;
        } else {
            for (int w : d.out_neighbors(v)) {
                if (!s.contains(w)) {
                    ++c;
                    break;
                }
            }
        }
    }
    return c;
}

// ── Solvers ─────────────────────────────────────────────────────────

LayoutResult solve_bruteforce(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, false);
    return make_result(run_bruteforce(make_view(g), {agg_to_obj(spec.agg), spec.cost}, opt),
                       SolveMethod::bruteforce);
}

LayoutResult solve_bruteforce(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, true);
    return make_result(run_bruteforce(make_view(d), {agg_to_obj(spec.agg), spec.cost}, opt),
                       SolveMethod::bruteforce);
}

LayoutResult solve_bruteforce(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt) {
    return std::visit([&](const auto& g) { return solve_bruteforce(g, spec, opt); }, h);
}

LayoutResult solve_subset_dp(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, false);
    if (g.num_vertices() > opt.dp_limit) throw size_limit_error("subset DP size limit exceeded");
    return make_result(run_layered_dp(make_view(g), {agg_to_obj(spec.agg), spec.cost}, opt),
                       SolveMethod::subset_dp);
}

LayoutResult solve_subset_dp(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, true);
    if (d.num_vertices() > opt.dp_limit) throw size_limit_error("subset DP size limit exceeded");
    return make_result(run_layered_dp(make_view(d), {agg_to_obj(spec.agg), spec.cost}, opt),
                       SolveMethod::subset_dp);
}

LayoutResult solve_subset_dp(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt) {
    return std::visit([&](const auto& g) { return solve_subset_dp(g, spec, opt); }, h);
}

LayoutResult heuristic_greedy(const UGraph& g, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, false);
    int n = g.num_vertices();
    auto cost_of = [&](const std::vector<bool>& taken) {
        long long c = 0;
        if (spec.cost == CostKind::edge) {
            for (auto [u, v] : g.edges())
                if (taken[u] != taken[v]) ++c;
        } else {
            for (int v = 0; v < n; ++v) {
                if (!taken[v]) continue;
                for (int w : g.neighbors(v)) {
                    if (!taken[w]) {
                        ++c;
                        break;
                    }
                }
            }
        }
        return c;
    };
    auto feasible = [](const std::vector<bool>&, int) { return true; };
    DpOutcome best{kInf, {}};
    for (int r = 0; r < opt.greedy_restarts; ++r) {
        std::mt19937_64 rng(opt.seed + r);
        auto out = greedy_once(n, spec.agg, cost_of, feasible, rng);
        if (out.value < best.value) best = out;
    }
    return make_result(std::move(best), SolveMethod::heuristic);
}

LayoutResult heuristic_greedy(const Dag& d, const ProblemSpec& spec, const SolveOptions& opt) {
    check_direction(spec, true);
    int n = d.num_vertices();
    auto cost_of = [&](const std::vector<bool>& taken) {
        long long c = 0;
        for (int v = 0; v < n; ++v) {
            if (!taken[v]) continue;
            if (spec.cost == CostKind::edge) {
                for (int w : d.out_neighbors(v))
                    if (!taken[w]) ++c;
            } else {
                for (int w : d.out_neighbors(v)) {
                    if (!taken[w]) {
                        ++c;
                        break;
                    }
                }
            }
        }
        return c;
    };
    auto feasible = [&](const std::vector<bool>& taken, int v) {
        for (int w : d.in_neighbors(v))
            if (!taken[w]) return false;
        return true;
    };
    DpOutcome best{kInf, {}};
    for (int r = 0; r < opt.greedy_restarts; ++r) {
        std::mt19937_64 rng(opt.seed + r);
        auto out = greedy_once(n, spec.agg, cost_of, feasible, rng);
        if (out.value < best.value) best = out;
    }
    return make_result(std::move(best), SolveMethod::heuristic);
}

LayoutResult heuristic_greedy(const AnyGraph& h, const ProblemSpec& spec, const SolveOptions& opt) {
    return std::visit([&](const auto& g) { return heuristic_greedy(g, spec, opt); }, h);
}

LayoutResult solve_peak_pebbles_dp(const Dag& d, const SolveOptions& opt) {
    if (d.num_vertices() > opt.dp_limit) throw size_limit_error("subset DP size limit exceeded");
    return make_result(run_layered_dp(make_view(d), {ObjKind::peak, CostKind::vertex}, opt),
                       SolveMethod::subset_dp);
}

LayoutResult solve_peak_pebbles_bruteforce(const Dag& d, const SolveOptions& opt) {
    return make_result(run_bruteforce(make_view(d), {ObjKind::peak, CostKind::vertex}, opt),
                       SolveMethod::bruteforce);
}

} // namespace layoutkit

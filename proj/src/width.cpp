#include "layoutkit/width.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace layoutkit {

// ── Tree decompositions ─────────────────────────────────────────────

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, b.count() - 1);
    return w;
}

DecompositionReport validate_decomposition(const UGraph& g, const TreeDecomposition& td,
                                           bool require_path) {
    DecompositionReport rep;
    auto fail = [&](const std::string& why) {
        rep.valid = false;
        rep.violation = why;
        return rep;
    };
    int b = static_cast<int>(td.bags.size());
    if (b == 0) return fail("no bags");
    for (const auto& bag : td.bags)
        if (bag.universe() != g.num_vertices()) return fail("bag universe does not match graph");
    for (auto [i, j] : td.tree_edges)
        if (i < 0 || i >= b || j < 0 || j >= b || i == j) return fail("bad tree edge");
    if (static_cast<int>(td.tree_edges.size()) != b - 1) return fail("tree edge count is not bags-1");

    std::vector<std::vector<int>> tadj(b);
    for (auto [i, j] : td.tree_edges) {
        tadj[i].push_back(j);
        tadj[j].push_back(i);
    }
    { // connectivity of the tree
        std::vector<bool> seen(b, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int y : tadj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
        }
        if (cnt != b) return fail("bag tree is disconnected");
    }
    if (require_path) {
        for (int i = 0; i < b; ++i)
            if (tadj[i].size() > 2) return fail("tree is not a path");
    }
    // (T1)
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) return fail("vertex " + std::to_string(v + 1) + " in no bag (T1)");
    }
    // (T2)
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            if (bag.contains(u) && bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered)
            return fail("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                        " in no bag (T2)");
    }
    // (T3)
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> holders;
        for (int i = 0; i < b; ++i)
            if (td.bags[i].contains(v)) holders.push_back(i);
        std::vector<bool> in(b, false), seen(b, false);
        for (int i : holders) in[i] = true;
        std::queue<int> q;
        q.push(holders[0]);
        seen[holders[0]] = true;
        int cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int y : tadj[x])
                if (in[y] && !seen[y]) {
                    seen[y] = true;
                    q.push(y);
                }
        }
        if (cnt != static_cast<int>(holders.size()))
            return fail("bags of vertex " + std::to_string(v + 1) + " not a subtree (T3)");
    }
    rep.valid = true;
    rep.width = td.width();
    return rep;
}

TreeDecomposition load_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int b = -1, n = -1, lineno = 0;
    TreeDecomposition td;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "s") {
            std::string kind;
            int wplus1;
            if (!(ls >> kind >> b >> wplus1 >> n) || kind != "td")
                throw parse_error("malformed solution header at line " + std::to_string(lineno));
            td.bags.assign(b, VertexSet(n));
            continue;
        }
        if (b < 0) throw parse_error("line before header");
        if (tag == "b") {
            int id;
            if (!(ls >> id) || id < 1 || id > b)
                throw parse_error("bad bag id at line " + std::to_string(lineno));
            int v;
            while (ls >> v) {
                if (v < 1 || v > n) throw validation_error("bag vertex out of range");
                td.bags[id - 1].add(v - 1);
            }
            continue;
        }
        if (tag == "e") {
            int i, j;
            if (!(ls >> i >> j) || i < 1 || i > b || j < 1 || j > b)
                throw parse_error("bad tree edge at line " + std::to_string(lineno));
            td.tree_edges.emplace_back(i - 1, j - 1);
            continue;
        }
        throw parse_error("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
    }
    if (b < 0) throw parse_error("missing decomposition header");
    return td;
}

std::string serialize(const TreeDecomposition& td) {
    std::ostringstream out;
    int n = td.bags.empty() ? 0 : td.bags[0].universe();
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << n << "\n";
    for (size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : td.bags[i].members()) out << " " << v + 1;
        out << "\n";
    }
    for (auto [i, j] : td.tree_edges) out << "e " << i + 1 << " " << j + 1 << "\n";
    return out.str();
}

// ── Elimination width ───────────────────────────────────────────────

int elim_degree(const UGraph& g, const VertexSet& eliminated, int v) {
    if (eliminated.contains(v)) throw validation_error("vertex already eliminated");
    int n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(v);
    seen[v] = true;
    int deg = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (seen[y]) continue;
            seen[y] = true;
            if (eliminated.contains(y))
                q.push(y); // paths may pass through eliminated vertices
            else
                ++deg;
        }
    }
    return deg;
}

int elimination_width(const UGraph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    Ordering::from_sequence(order); // permutation check
    VertexSet eliminated(n);
    int width = 0;
    for (int v : order) {
        width = std::max(width, elim_degree(g, eliminated, v));
        eliminated.add(v);
    }
    return width;
}

// ── Exact treewidth ─────────────────────────────────────────────────

namespace {

struct TwSearch {
    int n;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::unordered_set<std::uint64_t> failed;
    std::vector<int> order;

    bool simplicial(const std::vector<std::uint64_t>& adj, std::uint64_t r, int v) const {
        std::uint64_t nb = adj[v] & r & ~(std::uint64_t(1) << v);
        std::uint64_t rest = nb;
        while (rest) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (nb & ~adj[u] & ~(std::uint64_t(1) << u)) return false;
        }
        return true;
    }

    bool rec(std::vector<std::uint64_t> adj, std::uint64_t r) {
        int cnt = __builtin_popcountll(r);
        if (cnt <= k + 1) {
            std::uint64_t rest = r;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                order.push_back(v);
            }
            return true;
        }
        if (failed.count(r)) return false;
        if (++nodes > budget) throw size_limit_error("treewidth search budget exceeded");

        auto deg_of = [&](int v) {
            return __builtin_popcountll(adj[v] & r & ~(std::uint64_t(1) << v));
        };

        // A simplicial vertex can go first; its neighborhood is a clique, so
        // a degree above k is a certificate of failure.
        for (std::uint64_t rest = r; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (!simplicial(adj, r, v)) continue;
            if (deg_of(v) > k) {
                failed.insert(r);
                return false;
            }
            order.push_back(v);
            if (rec(adj, r & ~(std::uint64_t(1) << v))) return true;
            order.pop_back();
            failed.insert(r);
            return false;
        }

        std::vector<int> cands;
        for (std::uint64_t rest = r; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (deg_of(v) <= k) cands.push_back(v);
        }
        std::sort(cands.begin(), cands.end(),
                  [&](int a, int b) { return std::make_pair(deg_of(a), a) < std::make_pair(deg_of(b), b); });

        // Candidates with equal neighborhoods (ignoring the pair itself) lead
        // to isomorphic residual instances; branch on one per group.
        std::vector<int> reps;
        for (int v : cands) {
            bool dup = false;
            for (int u : reps) {
                std::uint64_t ignore = ~((std::uint64_t(1) << v) | (std::uint64_t(1) << u));
                if ((adj[v] & r & ignore) == (adj[u] & r & ignore)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) reps.push_back(v);
        }
        for (int v : reps) {
            std::uint64_t bit = std::uint64_t(1) << v;
            std::vector<std::uint64_t> adj2 = adj;
            std::uint64_t nb = adj[v] & r & ~bit;
            for (std::uint64_t rest = nb; rest;) {
                int u = __builtin_ctzll(rest);
                rest &= rest - 1;
                adj2[u] |= nb & ~(std::uint64_t(1) << u);
            }
            order.push_back(v);
            if (rec(std::move(adj2), r & ~bit)) return true;
            order.pop_back();
        }
        failed.insert(r);
        return false;
    }
};

std::pair<int, std::vector<int>> min_fill_order(std::vector<std::uint64_t> adj, int n) {
    std::uint64_t r = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::vector<int> order;
    int width = 0;
    while (r) {
        int best = -1;
        long long best_fill = -1;
        for (std::uint64_t rest = r; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            std::uint64_t nb = adj[v] & r & ~(std::uint64_t(1) << v);
            long long fill = 0;
            for (std::uint64_t r2 = nb; r2;) {
                int u = __builtin_ctzll(r2);
                r2 &= r2 - 1;
                fill += __builtin_popcountll(nb & ~adj[u] & ~(std::uint64_t(1) << u));
            }
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        std::uint64_t bit = std::uint64_t(1) << best;
        std::uint64_t nb = adj[best] & r & ~bit;
        width = std::max(width, __builtin_popcountll(nb));
        for (std::uint64_t rest = nb; rest;) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            adj[u] |= nb & ~(std::uint64_t(1) << u);
        }
        order.push_back(best);
        r &= ~bit;
    }
    return {width, order};
}

int degeneracy_bound(const std::vector<std::uint64_t>& adj, int n) {
    std::uint64_t r = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    int lb = 0;
    while (r) {
        int best = -1, best_deg = 0;
        for (std::uint64_t rest = r; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            int deg = __builtin_popcountll(adj[v] & r & ~(std::uint64_t(1) << v));
            if (best == -1 || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        lb = std::max(lb, best_deg);
        r &= ~(std::uint64_t(1) << best);
    }
    return lb;
}

} // namespace

WidthResult treewidth_exact(const UGraph& g, const TwOptions& opt) {
    int n = g.num_vertices();
    if (n == 0) return {-1, {}};
    if (n > opt.limit) throw size_limit_error("treewidth size limit exceeded");
    if (n > 63) throw size_limit_error("treewidth solver supports at most 63 vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    auto [ub, ub_order] = min_fill_order(adj, n);
    int lb = degeneracy_bound(adj, n);
    for (int k = lb; k < ub; ++k) {
        TwSearch ts;
        ts.n = n;
        ts.k = k;
        ts.budget = opt.node_budget;
        std::uint64_t full = (std::uint64_t(1) << n) - 1;
        if (ts.rec(adj, full)) return {k, ts.order};
    }
    return {ub, ub_order};
}

PathwidthResult pathwidth_exact(const UGraph& g, const SolveOptions& opt) {
    auto res = solve_subset_dp(g, {Direction::undirected, CostKind::vertex, AggKind::max}, opt);
    return {static_cast<int>(res.value), res.witness};
}

// ── 1/2-separator number ────────────────────────────────────────────

namespace {

// Exact check: does removing S leave every component with at most |W|/2
// vertices of W?
bool separates(const std::vector<std::uint64_t>& adj, int n, std::uint64_t s, std::uint64_t w,
               int wsize) {
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    std::uint64_t rest = full & ~s;
    while (rest) {
        std::uint64_t comp = rest & (~rest + 1); // lowest bit
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & rest & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        if (2 * __builtin_popcountll(comp & w) > wsize) return false;
        rest &= ~comp;
    }
    return true;
}

// psi with an early give-up: returns exact psi if psi <= cap, else cap+1.
int psi_capped(const std::vector<std::uint64_t>& adj, int n, std::uint64_t w, int cap) {
    int wsize = __builtin_popcountll(w);
    if (wsize == 0) return 0;
    int kmax = std::min(cap, (wsize + 1) / 2);
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (int k = 0; k <= kmax; ++k) {
        if (k == 0) {
            if (separates(adj, n, 0, w, wsize)) return 0;
            continue;
        }
        // Gosper's hack over k-subsets of [0, n).
        std::uint64_t s = (std::uint64_t(1) << k) - 1;
        while (true) {
            if (separates(adj, n, s, w, wsize)) return k;
            std::uint64_t c = s & (~s + 1);
            std::uint64_t r2 = s + c;
            if (r2 > full) break;
            s = (((r2 ^ s) >> 2) / c) | r2;
        }
    }
    return kmax + 1;
}

} // namespace

int half_separator_of(const UGraph& g, const VertexSet& w) {
    int n = g.num_vertices();
    if (w.universe() != n) throw validation_error("set universe mismatch");
    if (n > 63) throw size_limit_error("separator solver supports at most 63 vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    std::uint64_t wm = 0;
    for (int v : w.members()) wm |= std::uint64_t(1) << v;
    int wsize = w.count();
    int psi = psi_capped(adj, n, wm, (wsize + 1) / 2);
    return psi;
}

int half_separator_number(const UGraph& g, HalfSepMode mode, const HalfSepOptions& opt) {
    int n = g.num_vertices();
    if (mode == HalfSepMode::full_vertex_set) {
        if (n > opt.full_limit) throw size_limit_error("separator size limit exceeded");
        return half_separator_of(g, VertexSet::full(n));
    }
    if (n > opt.max_limit) throw size_limit_error("separator size limit exceeded");
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= std::uint64_t(1) << v;
        adj[v] |= std::uint64_t(1) << u;
    }
    int best = 0;
    // psi(W) <= ceil(|W|/2), so once best is high only large W can win.
    for (int wsize = n; wsize >= 1; --wsize) {
        if ((wsize + 1) / 2 <= best) break;
        std::uint64_t full = (std::uint64_t(1) << n) - 1;
        std::uint64_t w = (std::uint64_t(1) << wsize) - 1;
        while (true) {
            // Cheap probe first: only W with psi above the running maximum
            // need an exact evaluation.
            if (psi_capped(adj, n, w, best) > best)
                best = psi_capped(adj, n, w, (wsize + 1) / 2);
            std::uint64_t c = w & (~w + 1);
            std::uint64_t r2 = w + c;
            if (r2 > full) break;
            w = (((r2 ^ w) >> 2) / c) | r2;
        }
    }
    return best;
}

SeparatorBoundReport check_separator_bound(const UGraph& g, const TwOptions& two,
                                           const HalfSepOptions& hso) {
    SeparatorBoundReport rep;
    rep.treewidth = treewidth_exact(g, two).width;
    rep.k_half = half_separator_number(g, HalfSepMode::maximize_over_W, hso);
    rep.holds = rep.treewidth >= rep.k_half - 1;
    return rep;
}

} // namespace layoutkit

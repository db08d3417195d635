#ifndef LAYOUTKIT_TEST_ORACLES_HPP
#define LAYOUTKIT_TEST_ORACLES_HPP

// Independent reference implementations used only by tests. Each one takes a
// deliberately dumb route so it shares no code path with the library
// implementation it checks.

#include "layoutkit/graph.hpp"
#include "layoutkit/layout.hpp"
#include "layoutkit/pebbling.hpp"
#include "layoutkit/width.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

namespace oracles {

using namespace layoutkit;

// ── Chordality / cliques on tiny graphs ─────────────────────────────

inline bool is_clique(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
    std::uint64_t rest = s;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        if ((s & ~adj[v] & ~(std::uint64_t(1) << v)) != 0) return false;
    }
    return true;
}

inline int clique_number(const std::vector<std::uint64_t>& adj, int n) {
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s)
        if (is_clique(adj, s)) best = std::max(best, __builtin_popcountll(s));
    return best;
}

inline bool is_chordal(std::vector<std::uint64_t> adj, int n) {
    std::uint64_t r = (std::uint64_t(1) << n) - 1;
    while (r) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!((r >> v) & 1)) continue;
            if (is_clique(adj, adj[v] & r & ~(std::uint64_t(1) << v))) pick = v;
        }
        if (pick < 0) return false; // no simplicial vertex left
        r &= ~(std::uint64_t(1) << pick);
    }
    return true;
}

// ── Exhaustive tree-decomposition minimum ───────────────────────────
// Enumerates every chordal supergraph, turns it into a clique tree, has the
// library validate the decomposition, and takes the minimum width.

inline int treewidth_by_decomposition_enumeration(const UGraph& g) {
    int n = g.num_vertices();
    std::vector<std::uint64_t> base(n, 0);
    for (auto [u, v] : g.edges()) {
        base[u] |= std::uint64_t(1) << v;
        base[v] |= std::uint64_t(1) << u;
    }
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!((base[u] >> v) & 1)) missing.emplace_back(u, v);

    int best = n; // K_n fallback
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << missing.size()); ++pick) {
        std::vector<std::uint64_t> adj = base;
        for (size_t i = 0; i < missing.size(); ++i) {
            if ((pick >> i) & 1) {
                adj[missing[i].first] |= std::uint64_t(1) << missing[i].second;
                adj[missing[i].second] |= std::uint64_t(1) << missing[i].first;
            }
        }
        int omega = clique_number(adj, n);
        if (omega - 1 >= best) continue;
        if (!is_chordal(adj, n)) continue;

        // Maximal cliques.
        std::vector<std::uint64_t> cliques;
        for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
            if (!is_clique(adj, s)) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!((s >> v) & 1) && is_clique(adj, s | (std::uint64_t(1) << v))) maximal = false;
            if (maximal) cliques.push_back(s);
        }
        // Maximum-weight spanning tree on intersection sizes (clique tree).
        int k = static_cast<int>(cliques.size());
        TreeDecomposition td;
        for (std::uint64_t c : cliques) {
            VertexSet bag(n);
            for (int v = 0; v < n; ++v)
                if ((c >> v) & 1) bag.add(v);
            td.bags.push_back(bag);
        }
        std::vector<bool> in_tree(k, false);
        in_tree[0] = true;
        for (int added = 1; added < k; ++added) {
            int bi = -1, bj = -1, bw = -1;
            for (int i = 0; i < k; ++i) {
                if (!in_tree[i]) continue;
                for (int j = 0; j < k; ++j) {
                    if (in_tree[j]) continue;
                    int w = __builtin_popcountll(cliques[i] & cliques[j]);
                    if (w > bw) {
                        bw = w;
                        bi = i;
                        bj = j;
                    }
                }
            }
            td.tree_edges.emplace_back(bi, bj);
            in_tree[bj] = true;
        }
        auto rep = validate_decomposition(g, td, false);
        if (rep.valid) best = std::min(best, rep.width);
    }
    return best;
}

// ── Exhaustive path-decomposition minimum ───────────────────────────
// Enumerates supergraphs admitting an interval ordering (for u < v < w,
// u~w implies u~v), derives the stabbed-set bags, validates the path
// decomposition, and takes the minimum width.

inline int pathwidth_by_decomposition_enumeration(const UGraph& g) {
    int n = g.num_vertices();
    std::vector<std::uint64_t> base(n, 0);
    for (auto [u, v] : g.edges()) {
        base[u] |= std::uint64_t(1) << v;
        base[v] |= std::uint64_t(1) << u;
    }
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!((base[u] >> v) & 1)) missing.emplace_back(u, v);

    int best = n;
    std::vector<int> perm(n);
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << missing.size()); ++pick) {
        std::vector<std::uint64_t> adj = base;
        for (size_t i = 0; i < missing.size(); ++i) {
            if ((pick >> i) & 1) {
                adj[missing[i].first] |= std::uint64_t(1) << missing[i].second;
                adj[missing[i].second] |= std::uint64_t(1) << missing[i].first;
            }
        }
        int omega = clique_number(adj, n);
        if (omega - 1 >= best) continue;

        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int c = a + 2; c < n && ok; ++c) {
                    if (!((adj[perm[a]] >> perm[c]) & 1)) continue;
                    for (int b = a + 1; b < c && ok; ++b)
                        if (!((adj[perm[a]] >> perm[b]) & 1)) ok = false;
                }
            if (!ok) continue;
            // Right endpoint of each interval in permutation coordinates.
            std::vector<int> rend(n);
            for (int i = 0; i < n; ++i) {
                rend[i] = i;
                for (int j = i + 1; j < n; ++j)
                    if ((adj[perm[i]] >> perm[j]) & 1) rend[i] = j;
            }
            TreeDecomposition td;
            for (int i = 0; i < n; ++i) {
                VertexSet bag(n);
                for (int j = 0; j <= i; ++j)
                    if (rend[j] >= i) bag.add(perm[j]);
                td.bags.push_back(bag);
            }
            for (int i = 0; i + 1 < n; ++i) td.tree_edges.emplace_back(i, i + 1);
            auto rep = validate_decomposition(g, td, true);
            if (rep.valid) {
                best = std::min(best, rep.width);
                found = true;
            }
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

// ── Direct interval-graph-completion objective ──────────────────────

inline long long igc_direct_formula(const UGraph& g, const Ordering& pi) {
    long long total = 0;
    for (int u = 0; u < g.num_vertices(); ++u) {
        long long longest = 0;
        for (int v : g.neighbors(u))
            longest = std::max(longest, static_cast<long long>(pi.position(v) - pi.position(u)));
        total += std::max(longest, 0LL);
    }
    return total;
}

// ── Elimination width by literal simulation over all orders ─────────

inline int elimination_width_bruteforce(const UGraph& g) {
    int n = g.num_vertices();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::vector<std::set<int>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        int width = 0;
        for (int v : perm) {
            std::vector<int> nb(adj[v].begin(), adj[v].end());
            width = std::max(width, static_cast<int>(nb.size()));
            for (size_t i = 0; i < nb.size(); ++i)
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    adj[nb[i]].insert(nb[j]);
                    adj[nb[j]].insert(nb[i]);
                }
            for (int u : nb) adj[u].erase(v);
            adj[v].clear();
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ── Dumb one-shot pebbling search (no normal form) ──────────────────

struct DumbPebble {
    int n;
    bool white_allowed;
    std::vector<std::uint64_t> in;
    int maxp;
    std::unordered_set<std::uint64_t> vis;

    static int code(std::uint64_t st, int v) { return (st >> (2 * v)) & 3; }
    static std::uint64_t put(std::uint64_t st, int v, int c) {
        return (st & ~(std::uint64_t(3) << (2 * v))) | (std::uint64_t(c) << (2 * v));
    }

    bool dfs(std::uint64_t st) {
        std::uint64_t nev = 0, b = 0, w = 0;
        for (int v = 0; v < n; ++v) {
            int c = code(st, v);
            if (c == 0) nev |= std::uint64_t(1) << v;
            if (c == 1) b |= std::uint64_t(1) << v;
            if (c == 2) w |= std::uint64_t(1) << v;
        }
        if (!nev && !b && !w) return true;
        if (vis.count(st)) return false;
        vis.insert(st);
        std::uint64_t peb = b | w;
        for (int v = 0; v < n; ++v) {
            int c = code(st, v);
            if (c == 0) {
                if (__builtin_popcountll(peb) + 1 <= maxp) {
                    if ((in[v] & ~peb) == 0 && dfs(put(st, v, 1))) return true;
                    if (white_allowed && dfs(put(st, v, 2))) return true;
                }
            } else if (c == 1) {
                if (dfs(put(st, v, 3))) return true;
            } else if (c == 2) {
                if ((in[v] & ~peb) == 0 && dfs(put(st, v, 3))) return true;
            }
        }
        return false;
    }
};

inline long long one_shot_cost_reference(const Dag& d, bool white_allowed) {
    DumbPebble s;
    s.n = d.num_vertices();
    s.white_allowed = white_allowed;
    s.in.assign(s.n, 0);
    for (auto [u, v] : d.arcs()) s.in[v] |= std::uint64_t(1) << u;
    for (int k = 1; k <= s.n; ++k) {
        s.maxp = k;
        s.vis.clear();
        if (s.dfs(0)) return k;
    }
    return s.n == 0 ? 0 : -1;
}

} // namespace oracles

#endif

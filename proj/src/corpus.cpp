#include "layoutkit/corpus.hpp"

#include "layoutkit/sse.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

namespace layoutkit {

namespace {

// Adjacency-matrix bit rows; works for both orientations.
struct Matrix {
    int n = 0;
    std::vector<std::uint16_t> rows; // rows[u] bit v set iff u->v (or u~v)
};

// Canonical key: the lexicographically smallest relabeling among those that
// list vertices in nonincreasing degree-invariant order; position p
// contributes its adjacency bits towards earlier positions (both directions
// when directed). Backtracking with prefix pruning against the best key.
struct Canonicalizer {
    const Matrix& m;
    bool directed;
    std::vector<int> assign; // position -> original vertex
    std::vector<bool> used;
    std::vector<std::uint32_t> inv, inv_sorted;
    std::vector<std::uint32_t> best_chunks, cur_chunks;
    bool have_best = false;

    explicit Canonicalizer(const Matrix& mat, bool dir) : m(mat), directed(dir) {
        used.assign(m.n, false);
        cur_chunks.assign(m.n, 0);
        best_chunks.assign(m.n, 0);
        inv.assign(m.n, 0);
        for (int v = 0; v < m.n; ++v) {
            std::uint32_t out = __builtin_popcount(m.rows[v]);
            std::uint32_t in = 0;
            for (int u = 0; u < m.n; ++u) in += (m.rows[u] >> v) & 1;
            inv[v] = directed ? (in << 8) | out : out;
        }
        inv_sorted = inv;
        std::sort(inv_sorted.rbegin(), inv_sorted.rend());
    }

    std::uint32_t chunk_for(int p, int v) const {
        std::uint32_t bits = 0;
        for (int q = 0; q < p; ++q) {
            int u = assign[q];
            bits <<= 1;
            bits |= (m.rows[u] >> v) & 1;
            if (directed) {
                bits <<= 1;
                bits |= (m.rows[v] >> u) & 1;
            }
        }
        return bits;
    }

    void rec(int p) {
        if (p == m.n) {
            if (!have_best || std::lexicographical_compare(cur_chunks.begin(), cur_chunks.end(),
                                                           best_chunks.begin(), best_chunks.end())) {
                best_chunks = cur_chunks;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < m.n; ++v) {
            if (used[v] || inv[v] != inv_sorted[p]) continue;
            std::uint32_t c = chunk_for(p, v);
            cur_chunks[p] = c;
            if (have_best) {
                int cmp = 0;
                for (int q = 0; q <= p; ++q) {
                    if (cur_chunks[q] != best_chunks[q]) {
                        cmp = cur_chunks[q] < best_chunks[q] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0) continue;
            }
            assign[p] = v;
            used[v] = true;
            rec(p + 1);
            used[v] = false;
        }
    }

    std::uint64_t run() {
        assign.assign(m.n, -1);
        rec(0);
        std::uint64_t key = 0;
        for (int p = 0; p < m.n; ++p) {
            int width = directed ? 2 * p : p;
            key = (key << width) | best_chunks[p];
        }
        return key;
    }
};

std::uint64_t canonical_key(const Matrix& m, bool directed) {
    Canonicalizer c(m, directed);
    return c.run();
}

Matrix matrix_of(const UGraph& g) {
    Matrix m;
    m.n = g.num_vertices();
    m.rows.assign(m.n, 0);
    for (auto [u, v] : g.edges()) {
        m.rows[u] |= std::uint16_t(1) << v;
        m.rows[v] |= std::uint16_t(1) << u;
    }
    return m;
}

Matrix matrix_of(const Dag& d) {
    Matrix m;
    m.n = d.num_vertices();
    m.rows.assign(m.n, 0);
    for (auto [u, v] : d.arcs()) m.rows[u] |= std::uint16_t(1) << v;
    return m;
}

UGraph graph_of(const Matrix& m) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if ((m.rows[u] >> v) & 1) edges.emplace_back(u, v);
    return UGraph(m.n, std::move(edges));
}

Dag dag_of(const Matrix& m) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v)
            if ((m.rows[u] >> v) & 1) arcs.emplace_back(u, v);
    return Dag(m.n, std::move(arcs));
}

// Atlas levels, built lazily and cached for the process.
std::vector<std::vector<Matrix>>& graph_levels() {
    static std::vector<std::vector<Matrix>> levels = [] {
        std::vector<std::vector<Matrix>> l(1);
        l.push_back({Matrix{1, {0}}});
        return l;
    }();
    return levels;
}

std::vector<std::vector<Matrix>>& dag_levels() {
    static std::vector<std::vector<Matrix>> levels = [] {
        std::vector<std::vector<Matrix>> l(1);
        l.push_back({Matrix{1, {0}}});
        return l;
    }();
    return levels;
}

void extend_graphs(int upto) {
    auto& levels = graph_levels();
    while (static_cast<int>(levels.size()) <= upto) {
        int n = static_cast<int>(levels.size());
        std::unordered_set<std::uint64_t> seen;
        std::vector<Matrix> next;
        for (const Matrix& parent : levels[n - 1]) {
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                Matrix m;
                m.n = n;
                m.rows = parent.rows;
                m.rows.push_back(0);
                for (int v = 0; v < n - 1; ++v) {
                    if ((nb >> v) & 1) {
                        m.rows[n - 1] |= std::uint16_t(1) << v;
                        m.rows[v] |= std::uint16_t(1) << (n - 1);
                    }
                }
                std::uint64_t key = canonical_key(m, false);
                if (seen.insert(key).second) next.push_back(m);
            }
        }
        levels.push_back(std::move(next));
    }
}

void extend_dags(int upto) {
    auto& levels = dag_levels();
    while (static_cast<int>(levels.size()) <= upto) {
        int n = static_cast<int>(levels.size());
        std::unordered_set<std::uint64_t> seen;
        std::vector<Matrix> next;
        for (const Matrix& parent : levels[n - 1]) {
            // Every DAG arises from deleting a sink, so adding a fresh sink
            // with every possible in-neighborhood reaches them all.
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                Matrix m;
                m.n = n;
                m.rows = parent.rows;
                m.rows.push_back(0);
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1) m.rows[v] |= std::uint16_t(1) << (n - 1);
                std::uint64_t key = canonical_key(m, true);
                if (seen.insert(key).second) next.push_back(m);
            }
        }
        levels.push_back(std::move(next));
    }
}

bool matrix_connected(const Matrix& m) {
    if (m.n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < m.n; ++v) {
            if (!((frontier >> v) & 1)) continue;
            for (int u = 0; u < m.n; ++u)
                if ((((m.rows[v] >> u) | (m.rows[u] >> v)) & 1) && !((seen >> u) & 1)) next |= 1u << u;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << m.n) - 1;
}

} // namespace

std::vector<UGraph> all_graphs(int n, bool connected_only) {
    if (n < 1 || n > 8) throw size_limit_error("graph atlas supports 1 <= n <= 8");
    extend_graphs(n);
    std::vector<UGraph> out;
    for (const Matrix& m : graph_levels()[n]) {
        if (connected_only && !matrix_connected(m)) continue;
        out.push_back(graph_of(m));
    }
    return out;
}

std::vector<Dag> all_dags(int n, bool connected_only) {
    if (n < 1 || n > 6) throw size_limit_error("dag atlas supports 1 <= n <= 6");
    extend_dags(n);
    std::vector<Dag> out;
    for (const Matrix& m : dag_levels()[n]) {
        if (connected_only && !matrix_connected(m)) continue;
        out.push_back(dag_of(m));
    }
    return out;
}

std::vector<UGraph> all_graphs_upto(int max_n, bool connected_only) {
    std::vector<UGraph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : all_graphs(n, connected_only)) out.push_back(std::move(g));
    return out;
}

std::vector<Dag> all_dags_upto(int max_n, bool connected_only) {
    std::vector<Dag> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& d : all_dags(n, connected_only)) out.push_back(std::move(d));
    return out;
}

bool is_connected(const UGraph& g) { return matrix_connected(matrix_of(g)); }

bool is_weakly_connected(const Dag& d) { return matrix_connected(matrix_of(d)); }

UGraph random_graph(int n, std::uint64_t seed, double p) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return UGraph(n, std::move(edges));
}

Dag random_dag(int n, std::uint64_t seed, double p) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng_below(rng, i)]);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rng() >> 11) * 0x1.0p-53 < p) arcs.emplace_back(perm[i], perm[j]);
    return Dag(n, std::move(arcs));
}

Dag random_dag_bounded_indegree(int n, int max_indegree, std::uint64_t seed, double p) {
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng_below(rng, i)]);
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> indeg(n, 0);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (indeg[perm[j]] >= max_indegree) break;
            if ((rng() >> 11) * 0x1.0p-53 < p) {
                arcs.emplace_back(perm[i], perm[j]);
                indeg[perm[j]]++;
            }
        }
    }
    return Dag(n, std::move(arcs));
}

} // namespace layoutkit

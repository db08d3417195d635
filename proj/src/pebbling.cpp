#include "layoutkit/pebbling.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace layoutkit {

// ── Strategy representation ─────────────────────────────────────────

PebbleStrategy PebbleStrategy::from_moves(int n, const std::vector<PebbleMove>& moves) {
    PebbleStrategy s;
    PebbleConfig cur{VertexSet(n), VertexSet(n)};
    s.configs.push_back(cur);
    for (const auto& mv : moves) {
        if (mv.vertex < 0 || mv.vertex >= n)
            throw validation_error("move vertex out of range");
        switch (mv.kind) {
            case MoveKind::place_black: cur.black.add(mv.vertex); break;
            case MoveKind::remove_black: cur.black.remove(mv.vertex); break;
            case MoveKind::place_white: cur.white.add(mv.vertex); break;
            case MoveKind::remove_white: cur.white.remove(mv.vertex); break;
        }
        s.configs.push_back(cur);
    }
    return s;
}

std::vector<PebbleMove> PebbleStrategy::to_moves() const {
    std::vector<PebbleMove> moves;
    for (size_t t = 1; t < configs.size(); ++t) {
        const auto& prev = configs[t - 1];
        const auto& cur = configs[t];
        int n = cur.black.universe();
        for (int v = 0; v < n; ++v) {
            if (cur.black.contains(v) && !prev.black.contains(v))
                moves.push_back({MoveKind::place_black, v});
            if (!cur.black.contains(v) && prev.black.contains(v))
                moves.push_back({MoveKind::remove_black, v});
            if (cur.white.contains(v) && !prev.white.contains(v))
                moves.push_back({MoveKind::place_white, v});
            if (!cur.white.contains(v) && prev.white.contains(v))
                moves.push_back({MoveKind::remove_white, v});
        }
    }
    return moves;
}

std::vector<PebbleMove> parse_moves(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<PebbleMove> moves;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        int v;
        if (!(ls >> v) || v < 1)
            throw parse_error("malformed move at line " + std::to_string(lineno));
        MoveKind kind;
        if (tag == "pb")
            kind = MoveKind::place_black;
        else if (tag == "rb")
            kind = MoveKind::remove_black;
        else if (tag == "pw")
            kind = MoveKind::place_white;
        else if (tag == "rw")
            kind = MoveKind::remove_white;
        else
            throw parse_error("unknown move '" + tag + "' at line " + std::to_string(lineno));
        moves.push_back({kind, v - 1});
    }
    return moves;
}

std::string serialize_moves(const std::vector<PebbleMove>& moves) {
    std::ostringstream out;
    for (const auto& mv : moves) {
        switch (mv.kind) {
            case MoveKind::place_black: out << "pb "; break;
            case MoveKind::remove_black: out << "rb "; break;
            case MoveKind::place_white: out << "pw "; break;
            case MoveKind::remove_white: out << "rw "; break;
        }
        out << mv.vertex + 1 << "\n";
    }
    return out.str();
}

// ── Validation ──────────────────────────────────────────────────────

StrategyReport validate_strategy(const Dag& d, const PebbleStrategy& s, PebbleMode mode) {
    StrategyReport rep;
    int n = d.num_vertices();
    auto fail = [&](int step, const std::string& why) {
        rep.valid = false;
        rep.violation_step = step;
        rep.violation = why;
        return rep;
    };
    if (s.configs.empty()) return fail(0, "empty configuration sequence");
    for (size_t t = 0; t < s.configs.size(); ++t) {
        const auto& c = s.configs[t];
        if (c.black.universe() != n || c.white.universe() != n)
            return fail(static_cast<int>(t), "configuration universe does not match graph");
        if (c.black.intersects(c.white))
            return fail(static_cast<int>(t), "black and white pebbles overlap");
        if (mode == PebbleMode::black && !c.white.empty())
            return fail(static_cast<int>(t), "white pebble in black-only strategy");
    }
    if (!s.configs.front().black.empty() || !s.configs.front().white.empty())
        return fail(0, "initial configuration not empty");
    if (!s.configs.back().black.empty() || !s.configs.back().white.empty())
        return fail(static_cast<int>(s.configs.size()) - 1, "final configuration not empty");

    std::vector<int> placements(n, 0);
    VertexSet ever(n);
    long long cost = 0;
    for (size_t t = 1; t < s.configs.size(); ++t) {
        const auto& prev = s.configs[t - 1];
        const auto& cur = s.configs[t];
        auto pebbled_prev = [&](int v) { return prev.black.contains(v) || prev.white.contains(v); };
        int changed = -1;
        int nchanges = 0;
        MoveKind kind{};
        for (int v = 0; v < n; ++v) {
            if (cur.black.contains(v) != prev.black.contains(v)) {
                ++nchanges;
                changed = v;
                kind = cur.black.contains(v) ? MoveKind::place_black : MoveKind::remove_black;
            }
            if (cur.white.contains(v) != prev.white.contains(v)) {
                ++nchanges;
                changed = v;
                kind = cur.white.contains(v) ? MoveKind::place_white : MoveKind::remove_white;
            }
        }
        if (nchanges != 1)
            return fail(static_cast<int>(t), "configurations differ by " + std::to_string(nchanges) +
                                                 " changes, expected exactly one move");
        int v = changed;
        switch (kind) {
            case MoveKind::place_black: {
                if (pebbled_prev(v)) return fail(static_cast<int>(t), "placement on a pebbled vertex");
                for (int u : d.in_neighbors(v))
                    if (!pebbled_prev(u))
                        return fail(static_cast<int>(t),
                                    "black placed on " + std::to_string(v + 1) +
                                        " with unpebbled predecessor " + std::to_string(u + 1));
                placements[v]++;
                ever.add(v);
                break;
            }
            case MoveKind::place_white: {
                if (pebbled_prev(v)) return fail(static_cast<int>(t), "placement on a pebbled vertex");
                placements[v]++;
                ever.add(v);
                break;
            }
            case MoveKind::remove_black:
                break;
            case MoveKind::remove_white: {
                for (int u : d.in_neighbors(v))
                    if (!pebbled_prev(u))
                        return fail(static_cast<int>(t),
                                    "white removed from " + std::to_string(v + 1) +
                                        " with unpebbled predecessor " + std::to_string(u + 1));
                break;
            }
        }
        long long sz = 0;
        for (int u = 0; u < n; ++u)
            if (cur.black.contains(u) || cur.white.contains(u)) ++sz;
        cost = std::max(cost, sz);
    }
    for (int v : d.sinks())
        if (!ever.contains(v))
            return fail(static_cast<int>(s.configs.size()) - 1,
                        "sink " + std::to_string(v + 1) + " never pebbled");
    rep.valid = true;
    rep.cost = cost;
    rep.one_shot = std::all_of(placements.begin(), placements.end(), [](int c) { return c <= 1; });
    return rep;
}

// ── Ordering-induced strategy ───────────────────────────────────────

PebbleStrategy ordering_to_black_strategy(const Dag& d, const Ordering& pi) {
    if (!is_topological(d, pi)) throw validation_error("ordering is not topological");
    int n = d.num_vertices();
    PebbleStrategy s;
    PebbleConfig cur{VertexSet(n), VertexSet(n)};
    s.configs.push_back(cur);
    std::vector<bool> placed(n, false);
    for (int i = 1; i <= n; ++i) {
        int v = pi.vertex_at(i);
        cur.black.add(v);
        placed[v] = true;
        s.configs.push_back(cur);
        for (int u = 0; u < n; ++u) {
            if (!cur.black.contains(u)) continue;
            bool done = true;
            for (int w : d.out_neighbors(u))
                if (!placed[w]) {
                    done = false;
                    break;
                }
            if (done) {
                cur.black.remove(u);
                s.configs.push_back(cur);
            }
        }
    }
    return s;
}

long long one_shot_black_cost(const Dag& d, CostAccounting acc, const SolveOptions& opt) {
    if (d.num_vertices() == 0) return 0;
    if (acc == CostAccounting::peak) return solve_peak_pebbles_dp(d, opt).value;
    ProblemSpec spec{Direction::dag, CostKind::vertex, AggKind::max};
    long long layout = solve_subset_dp(d, spec, opt).value;
    // Pebbling the sinks needs at least one pebble even when every |V_i| is 0.
    return std::max(layout, 1LL);
}

// ── Lengauer transforms ─────────────────────────────────────────────

UGraph lengauer_to_undirected(const Dag& d) {
    std::set<std::pair<int, int>> edges;
    auto put = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (u != v) edges.insert({u, v});
    };
    for (auto [u, v] : d.arcs()) put(u, v);
    for (int w = 0; w < d.num_vertices(); ++w) {
        const auto& preds = d.in_neighbors(w);
        for (size_t i = 0; i < preds.size(); ++i)
            for (size_t j = i + 1; j < preds.size(); ++j) put(preds[i], preds[j]);
    }
    return UGraph(d.num_vertices(), {edges.begin(), edges.end()});
}

Dag lengauer_to_dag(const UGraph& g) {
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> arcs;
    for (int j = 0; j < g.num_edges(); ++j) {
        auto [u, v] = g.edges()[j];
        arcs.emplace_back(u, n + j);
        arcs.emplace_back(v, n + j);
    }
    return Dag(n + g.num_edges(), std::move(arcs));
}

// ── Pyramids and instance transforms ────────────────────────────────

Dag build_pyramid(int d) {
    if (d < 1) throw validation_error("pyramid size must be positive");
    std::vector<int> offset(d);
    int total = 0;
    for (int layer = 0; layer < d; ++layer) {
        offset[layer] = total;
        total += d - layer;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int layer = 1; layer < d; ++layer) {
        for (int j = 0; j < d - layer; ++j) {
            arcs.emplace_back(offset[layer - 1] + j, offset[layer] + j);
            arcs.emplace_back(offset[layer - 1] + j + 1, offset[layer] + j);
        }
    }
    return Dag(total, std::move(arcs));
}

Dag indegree2_transform(const Dag& d) {
    int n = d.num_vertices();
    std::vector<std::pair<int, int>> arcs;
    int next = n;
    for (int v = 0; v < n; ++v) {
        const auto& preds = d.in_neighbors(v); // sorted by id
        int k = static_cast<int>(preds.size());
        if (k <= 2) {
            for (int u : preds) arcs.emplace_back(u, v);
            continue;
        }
        // Pyramid of size k: layer 0 = preds, apex = v, layers 1..k-2 fresh.
        std::vector<int> prev_layer(preds.begin(), preds.end());
        for (int layer = 1; layer < k; ++layer) {
            int width = k - layer;
            std::vector<int> cur_layer(width);
            for (int j = 0; j < width; ++j)
                cur_layer[j] = (layer == k - 1) ? v : next++;
            for (int j = 0; j < width; ++j) {
                arcs.emplace_back(prev_layer[j], cur_layer[j]);
                arcs.emplace_back(prev_layer[j + 1], cur_layer[j]);
            }
            prev_layer = std::move(cur_layer);
        }
    }
    return Dag(next, std::move(arcs));
}

Dag single_sink_transform(const Dag& d) {
    auto sinks = d.sinks();
    if (sinks.size() <= 1) return d;
    int next = d.num_vertices();
    std::vector<std::pair<int, int>> arcs(d.arcs());
    // Balanced merge: node over [lo,hi) of the sink list.
    std::function<int(int, int)> build = [&](int lo, int hi) -> int {
        if (hi - lo == 1) return sinks[lo];
        int mid = lo + (hi - lo + 1) / 2;
        int left = build(lo, mid);
        int right = build(mid, hi);
        int node = next++;
        arcs.emplace_back(left, node);
        arcs.emplace_back(right, node);
        return node;
    };
    build(0, static_cast<int>(sinks.size()));
    return Dag(next, std::move(arcs));
}

bool frugal_pyramid_check(int d, const PebbleStrategy& s) {
    Dag pyr = build_pyramid(d);
    auto rep = validate_strategy(pyr, s, PebbleMode::black);
    if (!rep.valid || !rep.one_shot)
        throw validation_error("frugal check requires a valid one-shot black strategy");
    VertexSet ever(pyr.num_vertices());
    int sources_total = d; // layer 0 is ids 0..d-1
    for (size_t t = 0; t < s.configs.size(); ++t) {
        if (t > 0) {
            const auto& prev = s.configs[t - 1];
            const auto& cur = s.configs[t];
            for (int v = 0; v < pyr.num_vertices(); ++v)
                if (cur.black.contains(v) && !prev.black.contains(v)) ever.add(v);
        }
        int pebbled_sources = 0;
        for (int v = 0; v < sources_total; ++v)
            if (ever.contains(v)) ++pebbled_sources;
        if (s.configs[t].black.count() < pebbled_sources) return false;
        if (pebbled_sources == sources_total) break;
    }
    return true;
}

// ── Exhaustive searches ─────────────────────────────────────────────

namespace {

// 2 bits per vertex: 0 never, 1 black, 2 white, 3 done.
struct PebbleSearch {
    int n;
    bool allow_white;
    int max_pebbles;
    std::uint64_t budget;
    std::vector<std::uint64_t> in_mask, out_mask;
    std::unordered_set<std::uint64_t> visited;

    static int code_of(std::uint64_t st, int v) { return (st >> (2 * v)) & 3; }
    static std::uint64_t with_code(std::uint64_t st, int v, int code) {
        return (st & ~(std::uint64_t(3) << (2 * v))) | (std::uint64_t(code) << (2 * v));
    }

    std::uint64_t mask_of(std::uint64_t st, int code) const {
        std::uint64_t m = 0;
        for (int v = 0; v < n; ++v)
            if (code_of(st, v) == code) m |= std::uint64_t(1) << v;
        return m;
    }

    std::uint64_t closure(std::uint64_t st) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::uint64_t never = mask_of(st, 0), black = mask_of(st, 1), white = mask_of(st, 2);
            std::uint64_t pebbled = black | white;
            for (int v = 0; v < n; ++v) {
                int c = code_of(st, v);
                if (c != 1 && c != 2) continue;
                // A pebble is still needed while some successor has not had
                // its own predecessors-pebbled event yet.
                if (out_mask[v] & (never | white)) continue;
                if (c == 2 && (in_mask[v] & ~pebbled)) continue;
                st = with_code(st, v, 3);
                changed = true;
            }
        }
        return st;
    }

    bool dead(std::uint64_t st) const {
        std::uint64_t pebbled = mask_of(st, 1) | mask_of(st, 2);
        std::uint64_t done = mask_of(st, 3);
        for (int v = 0; v < n; ++v)
            if (code_of(st, v) == 2 && (in_mask[v] & done & ~pebbled)) return true;
        return false;
    }

    bool dfs(std::uint64_t st) {
        std::uint64_t never = mask_of(st, 0);
        std::uint64_t black = mask_of(st, 1), white = mask_of(st, 2);
        if (!never && !black && !white) return true;
        if (dead(st)) return false;
        if (visited.count(st)) return false;
        visited.insert(st);
        if (visited.size() > budget) throw size_limit_error("pebbling search budget exceeded");
        int pebbles = __builtin_popcountll(black | white);
        if (pebbles >= max_pebbles) return false;
        std::uint64_t pebbled = black | white;
        for (int v = 0; v < n; ++v) {
            if (code_of(st, v) != 0) continue;
            if ((in_mask[v] & ~pebbled) == 0) {
                if (dfs(closure(with_code(st, v, 1)))) return true;
            }
            if (allow_white) {
                if (dfs(closure(with_code(st, v, 2)))) return true;
            }
        }
        return false;
    }
};

} // namespace

long long one_shot_cost_exhaustive(const Dag& d, PebbleMode mode, const PebbleSearchOptions& opt) {
    int n = d.num_vertices();
    if (n == 0) return 0;
    if (n > opt.max_n || n > 31) throw size_limit_error("pebbling search size limit exceeded");
    PebbleSearch ps;
    ps.n = n;
    ps.allow_white = mode == PebbleMode::black_white;
    ps.budget = opt.state_budget;
    ps.in_mask.assign(n, 0);
    ps.out_mask.assign(n, 0);
    for (auto [u, v] : d.arcs()) {
        ps.out_mask[u] |= std::uint64_t(1) << v;
        ps.in_mask[v] |= std::uint64_t(1) << u;
    }
    for (int k = 1; k <= n; ++k) {
        ps.max_pebbles = k;
        ps.visited.clear();
        if (ps.dfs(ps.closure(0))) return k;
    }
    throw validation_error("no pebbling strategy found"); // unreachable for a DAG
}

namespace {

struct BlackEnum {
    const Dag& d;
    const std::function<void(const PebbleStrategy&)>& cb;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<PebbleMove> moves;

    BlackEnum(const Dag& dag, const std::function<void(const PebbleStrategy&)>& f, std::uint64_t b)
        : d(dag), cb(f), budget(b) {}

    void dfs(std::uint64_t ever, std::uint64_t cur) {
        if (++nodes > budget) throw size_limit_error("strategy enumeration budget exceeded");
        int n = d.num_vertices();
        std::uint64_t all = (std::uint64_t(1) << n) - 1;
        if (ever == all && cur == 0) {
            cb(PebbleStrategy::from_moves(n, moves));
            return;
        }
        for (int v = 0; v < n; ++v) {
            std::uint64_t bit = std::uint64_t(1) << v;
            if (!(ever & bit)) {
                bool ready = true;
                for (int u : d.in_neighbors(v))
                    if (!((cur >> u) & 1)) {
                        ready = false;
                        break;
                    }
                if (ready) {
                    moves.push_back({MoveKind::place_black, v});
                    dfs(ever | bit, cur | bit);
                    moves.pop_back();
                }
            } else if (cur & bit) {
                // Only removals of finished vertices can extend to a complete
                // one-shot strategy.
                bool finished = true;
                for (int w : d.out_neighbors(v))
                    if (!((ever >> w) & 1)) {
                        finished = false;
                        break;
                    }
                if (finished) {
                    moves.push_back({MoveKind::remove_black, v});
                    dfs(ever, cur & ~bit);
                    moves.pop_back();
                }
            }
        }
    }
};

} // namespace

void enumerate_one_shot_black_strategies(const Dag& d,
                                         const std::function<void(const PebbleStrategy&)>& cb,
                                         std::uint64_t node_budget) {
    if (d.num_vertices() > 20) throw size_limit_error("strategy enumeration size limit exceeded");
    if (d.num_vertices() == 0) return;
    BlackEnum be(d, cb, node_budget);
    be.dfs(0, 0);
}

} // namespace layoutkit

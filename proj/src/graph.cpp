#include "layoutkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace layoutkit {

// ── Rational ────────────────────────────────────────────────────────

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// ── VertexSet ───────────────────────────────────────────────────────

VertexSet::VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw validation_error("negative universe");
}

VertexSet VertexSet::of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= n_) throw validation_error("vertex out of range in set");
}

bool VertexSet::contains(int v) const {
    check(v);
    return (bits_[v / 64] >> (v % 64)) & 1u;
}

void VertexSet::add(int v) {
    check(v);
    bits_[v / 64] |= std::uint64_t(1) << (v % 64);
}

void VertexSet::remove(int v) {
    check(v);
    bits_[v / 64] &= ~(std::uint64_t(1) << (v % 64));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : bits_) c += __builtin_popcountll(w);
    return c;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
        if (!contains(v)) s.add(v);
    return s;
}

bool VertexSet::intersects(const VertexSet& other) const {
    size_t k = std::min(bits_.size(), other.bits_.size());
    for (size_t i = 0; i < k; ++i)
        if (bits_[i] & other.bits_[i]) return true;
    return false;
}

// ── UGraph ──────────────────────────────────────────────────────────

UGraph::UGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw validation_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw validation_error("edge endpoint out of range");
        if (u == v) throw validation_error("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw validation_error("parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool UGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int UGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool UGraph::is_regular(int* d) const {
    if (n_ == 0) return true;
    int deg = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != deg) return false;
    if (d) *d = deg;
    return true;
}

// ── Dag ─────────────────────────────────────────────────────────────

Dag::Dag(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n < 0) throw validation_error("negative vertex count");
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw validation_error("arc endpoint out of range");
        if (u == v) throw validation_error("self-loop");
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        throw validation_error("parallel arc");
    arcs_ = std::move(arcs);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());

    // Kahn with a min-heap: lexicographically smallest topological order.
    std::vector<int> indeg(n_);
    for (int v = 0; v < n_; ++v) indeg[v] = in_degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push(v);
    topo_.reserve(n_);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (int w : out_[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(topo_.size()) != n_)
        throw validation_error("cycle in declared DAG");
}

bool Dag::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(u, v));
}

int Dag::max_in_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, in_degree(v));
    return d;
}

std::vector<int> Dag::sinks() const {
    std::vector<int> s;
    for (int v = 0; v < n_; ++v)
        if (is_sink(v)) s.push_back(v);
    return s;
}

// ── Ordering ────────────────────────────────────────────────────────

Ordering Ordering::from_sequence(std::vector<int> seq) {
    Ordering o;
    int n = static_cast<int>(seq.size());
    o.pos_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = seq[i];
        if (v < 0 || v >= n) throw validation_error("ordering vertex out of range");
        if (o.pos_[v] != 0) throw validation_error("ordering is not a bijection");
        o.pos_[v] = i + 1;
    }
    o.seq_ = std::move(seq);
    return o;
}

Ordering Ordering::from_positions(const std::vector<int>& pos) {
    int n = static_cast<int>(pos.size());
    std::vector<int> seq(n, -1);
    for (int v = 0; v < n; ++v) {
        if (pos[v] < 1 || pos[v] > n) throw validation_error("position out of range");
        if (seq[pos[v] - 1] != -1) throw validation_error("ordering is not a bijection");
        seq[pos[v] - 1] = v;
    }
    return from_sequence(std::move(seq));
}

// ── Edge-list I/O ───────────────────────────────────────────────────

AnyGraph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    bool directed = false;
    int n = 0;
    long long m = 0;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (header_seen) throw parse_error("duplicate header at line " + std::to_string(lineno));
            if (!(ls >> kind >> n >> m))
                throw parse_error("malformed header at line " + std::to_string(lineno));
            if (kind == "ug")
                directed = false;
            else if (kind == "dag")
                directed = true;
            else
                throw parse_error("unknown graph kind '" + kind + "'");
            if (n < 1) throw parse_error("vertex count must be positive");
            header_seen = true;
            continue;
        }
        if (tag == "e" || tag == "a") {
            if (!header_seen) throw parse_error("edge line before header");
            if ((tag == "e") == directed)
                throw parse_error("line kind '" + tag + "' does not match declared graph kind");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("malformed line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw validation_error("endpoint out of range at line " + std::to_string(lineno));
            pairs.emplace_back(u - 1, v - 1);
            continue;
        }
        throw parse_error("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
    }
    if (!header_seen) throw parse_error("missing header");
    if (static_cast<long long>(pairs.size()) != m)
        throw parse_error("declared edge count " + std::to_string(m) + " but found " +
                          std::to_string(pairs.size()));
    if (directed) return Dag(n, std::move(pairs));
    return UGraph(n, std::move(pairs));
}

AnyGraph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_graph(buf.str());
}

std::string serialize(const UGraph& g) {
    std::ostringstream out;
    out << "p ug " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string serialize(const Dag& d) {
    std::ostringstream out;
    out << "p dag " << d.num_vertices() << " " << d.num_arcs() << "\n";
    for (auto [u, v] : d.arcs()) out << "a " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string export_dot(const UGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << "  " << v + 1 << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u + 1 << " -- " << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const Dag& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 0; v < d.num_vertices(); ++v) out << "  " << v + 1 << ";\n";
    for (auto [u, v] : d.arcs()) out << "  " << u + 1 << " -> " << v + 1 << ";\n";
    out << "}\n";
    return out.str();
}

// ── Cut / expansion / feasibility ───────────────────────────────────

long long cut_edges(const UGraph& g, const VertexSet& s) {
    if (s.universe() != g.num_vertices())
        throw validation_error("vertex set universe does not match graph");
    long long c = 0;
    for (auto [u, v] : g.edges())
        if (s.contains(u) != s.contains(v)) ++c;
    return c;
}

Rational expansion(const UGraph& g, const VertexSet& s) {
    int d = 0;
    if (!g.is_regular(&d)) throw validation_error("expansion requires a regular graph");
    if (s.count() == 0) throw validation_error("expansion of the empty set");
    if (s.universe() != g.num_vertices())
        throw validation_error("vertex set universe does not match graph");
    long long cut = cut_edges(g, s);
    long long denom = static_cast<long long>(d) * s.count();
    if (denom == 0) {
        // 0-regular graph: no edges, cut is 0.
        return Rational(0, 1);
    }
    return Rational(cut, denom);
}

bool is_topological(const Dag& d, const Ordering& pi) {
    if (pi.n() != d.num_vertices())
        throw validation_error("ordering size does not match graph");
    for (auto [u, v] : d.arcs())
        if (pi.position(u) >= pi.position(v)) return false;
    return true;
}

} // namespace layoutkit

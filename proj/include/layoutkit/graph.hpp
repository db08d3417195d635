#ifndef LAYOUTKIT_GRAPH_HPP
#define LAYOUTKIT_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace layoutkit {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact rational, kept in lowest terms with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
};

/// Subset of the vertex range [0, n) of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static VertexSet of(int universe, const std::vector<int>& members);
    static VertexSet full(int universe);

    int universe() const { return n_; }
    bool contains(int v) const;
    void add(int v);
    void remove(int v);
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> members() const;
    VertexSet complement() const;
    bool intersects(const VertexSet& other) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Simple undirected graph with contiguous 0-based vertex ids.
/// Edges are stored normalized (u < v) and sorted; adjacency lists sorted.
class UGraph {
public:
    UGraph() = default;
    UGraph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    /// True iff all degrees are equal; the common degree goes to *d when given.
    bool is_regular(int* d = nullptr) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Directed acyclic graph. Construction fails on cycles; a lexicographically
/// smallest topological order is kept as the acyclicity witness.
class Dag {
public:
    Dag() = default;
    Dag(int n, std::vector<std::pair<int, int>> arcs);

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int max_in_degree() const;
    bool has_arc(int u, int v) const;
    bool is_sink(int v) const { return out_[v].empty(); }
    bool is_source(int v) const { return in_[v].empty(); }
    std::vector<int> sinks() const;
    /// Vertices in the lexicographically smallest topological order.
    const std::vector<int>& topological_witness() const { return topo_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> topo_;
};

/// Bijection vertices -> positions 1..n, with both directions stored.
class Ordering {
public:
    Ordering() = default;
    /// seq[i] is the vertex at rank i+1.
    static Ordering from_sequence(std::vector<int> seq);
    /// pos[v] is the 1-based rank of vertex v.
    static Ordering from_positions(const std::vector<int>& pos);

    int n() const { return static_cast<int>(seq_.size()); }
    int position(int v) const { return pos_[v]; }
    int vertex_at(int rank) const { return seq_[rank - 1]; }
    const std::vector<int>& sequence() const { return seq_; }
    /// 1-based positions indexed by vertex.
    std::vector<int> positions() const { return pos_; }

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

private:
    std::vector<int> seq_;
    std::vector<int> pos_;
};

using AnyGraph = std::variant<UGraph, Dag>;

/// Parse the edge-list format: header "p <ug|dag> <n> <m>", body lines
/// "e u v" / "a u v" with 1-based endpoints, "c" comment lines.
AnyGraph load_graph(const std::string& text);
AnyGraph load_graph_file(const std::string& path);

std::string serialize(const UGraph& g);
std::string serialize(const Dag& d);
std::string export_dot(const UGraph& g);
std::string export_dot(const Dag& d);

/// Number of edges with exactly one endpoint in S.
long long cut_edges(const UGraph& g, const VertexSet& s);

/// Normalized edge expansion |E(S, V\S)| / (d|S|) of a d-regular graph.
Rational expansion(const UGraph& g, const VertexSet& s);

bool is_topological(const Dag& d, const Ordering& pi);

} // namespace layoutkit

#endif

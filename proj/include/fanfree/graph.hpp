#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fanfree {

/// Bit mask over vertex ids 0..61. Bit v is set iff v is in the set.
using VertexSet = std::uint64_t;

inline constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }
inline constexpr VertexSet singleton(int v) noexcept { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, int v) noexcept { return (s >> v) & 1U; }
inline constexpr int lowest(VertexSet s) noexcept { return std::countr_zero(s); }
inline constexpr VertexSet first_n(int n) noexcept {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

/// Calls f(v) for every v in s, in increasing order.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        f(lowest(s));
        s &= s - 1;
    }
}

VertexSet make_set(std::initializer_list<int> vertices);
std::vector<int> to_vector(VertexSet s);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 62 vertices.
///
/// Each adjacency row is a single machine word. Every "modifying" operation returns a new
/// graph; instances are freely shareable between threads.
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;
    /// Empty (edgeless) graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);
    /// Rows must be symmetric and irreflexive; throws ArgumentError otherwise.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int edge_count() const noexcept { return edges_; }
    VertexSet vertices() const noexcept { return first_n(order()); }

    bool adjacent(int u, int v) const noexcept { return contains(rows_[u], v); }
    VertexSet neighbors(int v) const noexcept { return rows_[v]; }
    VertexSet closed_neighbors(int v) const noexcept { return rows_[v] | singleton(v); }
    int degree(int v) const noexcept { return popcount(rows_[v]); }
    std::span<const VertexSet> rows() const noexcept { return rows_; }

    int min_degree() const noexcept;
    int max_degree() const noexcept;
    std::vector<Edge> edges() const;

    /// Number of edges with one end in s and the other in t (edges inside s∩t counted once).
    int edges_between(VertexSet s, VertexSet t) const noexcept;
    /// Number of edges with both ends in s.
    int edges_within(VertexSet s) const noexcept;

    /// ω(G): number of connected components, isolated vertices included.
    int component_count() const noexcept;
    VertexSet isolated_vertices() const noexcept;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Same vertex set, every edge incident to a vertex of s removed.
    Graph without_edges_at(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<VertexSet> rows, int edges) : rows_(std::move(rows)), edges_(edges) {}

    std::vector<VertexSet> rows_;
    int edges_ = 0;

    friend class GraphBuilder;
};

/// Mutable scratch space that produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    bool adjacent(int u, int v) const noexcept { return contains(rows_[u], v); }
    Graph build() const;

private:
    void check(int u, int v) const;
    std::vector<VertexSet> rows_;
};

/// G[S] with the order-preserving relabeling of S onto 0..|S|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph induced_subgraph(const Graph& g, std::span<const int> s);
/// G - S.
Graph remove_vertices(const Graph& g, VertexSet s);
/// G[X] for an edge set X: vertices are the endpoints of X (relabeled in increasing order).
Graph edge_induced_subgraph(const Graph& g, std::span<const Edge> x);
/// result.adjacent(a, b) == g.adjacent(perm[a], perm[b]); perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph disjoint_union(const Graph& a, const Graph& b);

// --- graph6 -----------------------------------------------------------------

/// Short-form graph6 encoding (n <= 62).
std::string graph6_encode(const Graph& g);
/// Decodes one short-form graph6 string; a trailing '\n' or "\r\n" is tolerated.
Graph graph6_decode(std::string_view text);

/// Reads one graph per line; blank lines and lines starting with ">>" are skipped.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}
    /// Returns false at end of stream. Throws DecodeError on a malformed line.
    bool next(Graph& out, std::string* raw = nullptr);
    std::size_t line_number() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

// --- canonical forms ----------------------------------------------------------

/// Canonical graph6 string: equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string graph6;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// labeling[i] = vertex of the input placed at canonical position i.
    std::vector<int> labeling;
    /// Automorphisms discovered during the search (as vertex maps).
    std::vector<std::vector<int>> automorphisms;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalLabeling canonical_labeling(const Graph& g);
/// Reference implementation: best relabeling over all n! permutations. n <= 8 only.
CanonicalForm canonical_form_bruteforce(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        return std::hash<std::string>{}(f.graph6);
    }
};

}  // namespace fanfree

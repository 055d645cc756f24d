#include "fanfree/graph.hpp"

#include <algorithm>

#include "fanfree/error.hpp"

namespace fanfree {

namespace {

void check_order(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw UnsupportedSizeError("graphs are limited to " + std::to_string(Graph::kMaxVertices) +
                                   " vertices, got " + std::to_string(n));
}

int count_edges(const std::vector<VertexSet>& rows) {
    int twice = 0;
    for (VertexSet r : rows) twice += popcount(r);
    return twice / 2;
}

}  // namespace

VertexSet make_set(std::initializer_list<int> vertices) {
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 0 || v >= Graph::kMaxVertices) throw ArgumentError("vertex id out of range");
        s |= singleton(v);
    }
    return s;
}

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int n) {
    check_order(n);
    rows_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexSet all = first_n(n);
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~all) throw ArgumentError("adjacency row has bits beyond the vertex count");
        if (contains(rows[u], u)) throw ArgumentError("self loop at vertex " + std::to_string(u));
        for_each_vertex(rows[u], [&](int v) {
            if (!contains(rows[v], u)) throw ArgumentError("adjacency rows are not symmetric");
        });
    }
    int e = count_edges(rows);
    return Graph(std::move(rows), e);
}

int Graph::min_degree() const noexcept {
    int best = order() == 0 ? 0 : order();
    for (VertexSet r : rows_) best = std::min(best, popcount(r));
    return best;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (VertexSet r : rows_) best = std::max(best, popcount(r));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (int u = 0; u < order(); ++u)
        for_each_vertex(rows_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

int Graph::edges_between(VertexSet s, VertexSet t) const noexcept {
    // Pairs {u,v} with u in s, v in t; pairs inside s∩t are seen twice.
    int ordered = 0;
    for_each_vertex(s & vertices(), [&](int u) { ordered += popcount(rows_[u] & t); });
    int doubled = 0;
    for_each_vertex(s & t & vertices(), [&](int u) { doubled += popcount(rows_[u] & s & t); });
    return ordered - doubled / 2;
}

int Graph::edges_within(VertexSet s) const noexcept {
    int twice = 0;
    for_each_vertex(s & vertices(), [&](int u) { twice += popcount(rows_[u] & s); });
    return twice / 2;
}

int Graph::component_count() const noexcept {
    VertexSet unseen = vertices();
    int components = 0;
    while (unseen) {
        VertexSet frontier = singleton(lowest(unseen));
        VertexSet reached = frontier;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= rows_[v]; });
            frontier = next & ~reached;
            reached |= next;
        }
        unseen &= ~reached;
        ++components;
    }
    return components;
}

VertexSet Graph::isolated_vertices() const noexcept {
    VertexSet s = 0;
    for (int v = 0; v < order(); ++v)
        if (rows_[v] == 0) s |= singleton(v);
    return s;
}

Graph Graph::with_edge(int u, int v) const { return GraphBuilder(*this).add_edge(u, v).build(); }

Graph Graph::without_edge(int u, int v) const {
    return GraphBuilder(*this).remove_edge(u, v).build();
}

Graph Graph::without_edges_at(VertexSet s) const {
    std::vector<VertexSet> rows = rows_;
    for (int v = 0; v < order(); ++v) rows[v] = contains(s, v) ? 0 : rows[v] & ~s;
    int e = count_edges(rows);
    return Graph(std::move(rows), e);
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    rows_.assign(n, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows().begin(), g.rows().end()) {}

void GraphBuilder::check(int u, int v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for " + std::to_string(order()) + " vertices");
    if (u == v) throw ArgumentError("self loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check(u, v);
    rows_[u] |= singleton(v);
    rows_[v] |= singleton(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check(u, v);
    rows_[u] &= ~singleton(v);
    rows_[v] &= ~singleton(u);
    return *this;
}

Graph GraphBuilder::build() const { return Graph(rows_, count_edges(rows_)); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw ArgumentError("induced_subgraph: vertex id out of range");
    return induced_subgraph(g, to_vector(s));
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw ArgumentError("induced_subgraph: repeated vertex");
    const int k = static_cast<int>(verts.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        if (verts[i] < 0 || verts[i] >= g.order())
            throw ArgumentError("induced_subgraph: vertex id out of range");
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(verts[i], verts[j])) b.add_edge(i, j);
    }
    return b.build();
}

Graph remove_vertices(const Graph& g, VertexSet s) {
    return induced_subgraph(g, g.vertices() & ~s);
}

Graph edge_induced_subgraph(const Graph& g, std::span<const Edge> x) {
    VertexSet ends = 0;
    for (auto [u, v] : x) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
            throw ArgumentError("edge_induced_subgraph: edge not in graph");
        ends |= singleton(u) | singleton(v);
    }
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for_each_vertex(ends, [&](int v) { index[v] = next++; });
    GraphBuilder b(next);
    for (auto [u, v] : x) b.add_edge(index[u], index[v]);
    return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw ArgumentError("relabel: permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || contains(seen, p)) throw ArgumentError("relabel: not a permutation");
        seen |= singleton(p);
    }
    std::vector<int> inverse(n);
    for (int a = 0; a < n; ++a) inverse[perm[a]] = a;
    std::vector<VertexSet> rows(n, 0);
    for (int a = 0; a < n; ++a)
        for_each_vertex(g.neighbors(perm[a]), [&](int w) { rows[a] |= singleton(inverse[w]); });
    return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    GraphBuilder out(n);
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out.build();
}

}  // namespace fanfree

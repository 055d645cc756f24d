#include "fanfree/constructions.hpp"

#include "fanfree/error.hpp"

namespace fanfree {

PatternSpec PatternSpec::cycles(int q, int k) {
    PatternSpec s{Cycle{q}, k};
    s.validate();
    return s;
}

PatternSpec PatternSpec::cliques(int r, int k) {
    PatternSpec s{Clique{r}, k};
    s.validate();
    return s;
}

void PatternSpec::validate() const {
    if (count < 1) throw ArgumentError("pattern needs at least one gadget copy");
    if (const auto* c = std::get_if<Cycle>(&gadget)) {
        if (c->length < 3 || c->length % 2 == 0)
            throw ArgumentError("cycle gadget length must be odd and >= 3, got " +
                                std::to_string(c->length));
    } else {
        const auto& k = std::get<Clique>(gadget);
        if (k.order < 3) throw ArgumentError("clique gadget order must be >= 3");
    }
}

int PatternSpec::gadget_order() const noexcept {
    return is_cycle() ? std::get<Cycle>(gadget).length : std::get<Clique>(gadget).order;
}

int PatternSpec::gadget_edges() const noexcept {
    const int g = gadget_order();
    return is_cycle() ? g : g * (g - 1) / 2;
}

std::string PatternSpec::describe() const {
    const std::string k = std::to_string(count);
    if (is_cycle()) return "C_{" + k + "," + std::to_string(gadget_order()) + "}";
    return "F_" + k + "^(" + std::to_string(gadget_order()) + ")";
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g.build();
}

Graph petersen_graph() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

Graph turan_graph(int n, int r) {
    if (r < 1 || n < 0)
        throw ArgumentError("turan_graph needs n >= 0 and r >= 1, got n=" + std::to_string(n) +
                            " r=" + std::to_string(r));
    std::vector<int> part(n);
    int v = 0;
    for (int c = 0; c < r; ++c) {
        const int size = n / r + (c < n % r ? 1 : 0);
        for (int i = 0; i < size; ++i) part[v++] = c;
    }
    GraphBuilder b(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (part[x] != part[y]) b.add_edge(x, y);
    return b.build();
}

long turan_edges(int n, int r) {
    if (r < 1 || n < 0) throw ArgumentError("turan_edges needs n >= 0 and r >= 1");
    long squares = 0;
    for (int c = 0; c < r; ++c) {
        const long size = n / r + (c < n % r ? 1 : 0);
        squares += size * size;
    }
    return (static_cast<long>(n) * n - squares) / 2;
}

Graph build_pattern(const PatternSpec& spec) {
    spec.validate();
    const int g = spec.gadget_order();
    GraphBuilder b(spec.order());
    for (int i = 0; i < spec.count; ++i) {
        const int base = 1 + i * (g - 1);
        if (spec.is_cycle()) {
            b.add_edge(0, base);
            for (int j = 0; j + 1 < g - 1; ++j) b.add_edge(base + j, base + j + 1);
            b.add_edge(base + g - 2, 0);
        } else {
            for (int x = 0; x < g - 1; ++x) {
                b.add_edge(0, base + x);
                for (int y = x + 1; y < g - 1; ++y) b.add_edge(base + x, base + y);
            }
        }
    }
    return b.build();
}

PartitionedHost embed_in_class(int n, const Graph& h, Placement where) {
    if (n < 1) throw ArgumentError("embed_in_class needs n >= 1");
    const int larger = (n + 1) / 2;
    const int smaller = n / 2;
    const int capacity = where == Placement::Larger ? larger : smaller;
    if (h.order() > capacity)
        throw CapacityError("embedded graph has " + std::to_string(h.order()) +
                            " vertices but the class holds " + std::to_string(capacity));
    const VertexSet big = first_n(larger);
    const VertexSet small = first_n(n) & ~big;
    GraphBuilder b(turan_graph(n, n >= 2 ? 2 : 1));
    const int offset = where == Placement::Larger ? 0 : larger;
    for (auto [u, v] : h.edges()) b.add_edge(offset + u, offset + v);
    PartitionedHost out{b.build(), {big, small}};
    if (where == Placement::Smaller) std::swap(out.classes[0], out.classes[1]);
    return out;
}

PartitionedHost family_member(int n, int k, Placement where) {
    if (k < 2) throw ArgumentError("family_member needs k >= 2");
    const long bound = 4L * (k - 1) * (k - 1);
    if (n < bound)
        throw ArgumentError("family_member needs n >= 4(k-1)^2 = " + std::to_string(bound) +
                            ", got n=" + std::to_string(n));
    const int capacity = where == Placement::Larger ? (n + 1) / 2 : n / 2;
    if (2 * (k - 1) > capacity)
        throw ArgumentError("family_member: K_{k-1,k-1} does not fit in the chosen class");
    return embed_in_class(n, complete_bipartite(k - 1, k - 1), where);
}

}  // namespace fanfree

#pragma once

#include <string>
#include <variant>

#include "fanfree/graph.hpp"

namespace fanfree {

/// Odd cycle gadget C_q (q odd, q >= 3).
struct Cycle {
    int length;
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Complete graph gadget K_r (r >= 3).
struct Clique {
    int order;
    friend bool operator==(const Clique&, const Clique&) = default;
};

using Gadget = std::variant<Cycle, Clique>;

/// k copies of a gadget sharing exactly one common vertex (the center).
///
/// Cycle(q) with k copies is C_{k,q}; Cycle(3) is the k-fan F_k; Clique(r) is F_k^{(r)}.
struct PatternSpec {
    Gadget gadget;
    int count;

    static PatternSpec cycles(int q, int k);
    static PatternSpec cliques(int r, int k);

    /// Throws ArgumentError unless the gadget and count are valid.
    void validate() const;

    bool is_cycle() const noexcept { return std::holds_alternative<Cycle>(gadget); }
    int gadget_order() const noexcept;
    int gadget_edges() const noexcept;
    int order() const noexcept { return count * (gadget_order() - 1) + 1; }
    int size() const noexcept { return count * gadget_edges(); }
    std::string describe() const;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

/// T_{n,2} with two recorded classes. `classes[0]` is the class that received the embedding.
struct PartitionedHost {
    Graph graph;
    VertexSet classes[2];
};

enum class Placement { Larger, Smaller };

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Complete r-partite graph on n vertices with class sizes differing by at most one.
/// Classes are contiguous: the first n mod r classes have ceil(n/r) vertices. When r > n
/// the surplus classes are empty and the result is K_n.
Graph turan_graph(int n, int r);
/// Edge count of T_{n,r} without building it.
long turan_edges(int n, int r);

/// k gadget copies through vertex 0. Copy i occupies vertices 1+i(g-1) .. (i+1)(g-1).
/// Cycle copies run 0, a, a+1, ..., a+q-2, back to 0.
Graph build_pattern(const PatternSpec& spec);

/// T_{n,2} with h placed on the first |V(h)| vertices of the chosen class.
/// The larger class is vertices 0..ceil(n/2)-1. Throws CapacityError if h does not fit.
PartitionedHost embed_in_class(int n, const Graph& h, Placement where = Placement::Larger);

/// Member of F_{n,k}: T_{n,2} with K_{k-1,k-1} embedded in one class.
/// Requires k >= 2, n >= 4(k-1)^2 and room for 2(k-1) vertices in the chosen class.
PartitionedHost family_member(int n, int k, Placement where = Placement::Larger);

}  // namespace fanfree

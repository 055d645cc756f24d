#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

/// Exhaustive modes are limited to this many vertices.
inline constexpr int kMaxSearchOrder = 10;

struct GenerationOptions {
    /// Maximum number of candidate children examined; 0 means unlimited.
    std::uint64_t budget = 0;
    int workers = 1;
    /// Discard children failing the property at every level (exact for hereditary
    /// properties). When false the property is only applied to the final level.
    bool prune = true;
};

struct GenerationResult {
    /// One graph per isomorphism class, sorted by canonical form.
    std::vector<Graph> graphs;
    /// False when the budget ran out; `graphs` is then a partial stream.
    bool complete = true;
    std::uint64_t nodes = 0;
};

/// Subgraph-closed property used to prune generation. An empty function accepts everything.
using HereditaryProperty = std::function<bool(const Graph&)>;

/// Isomorph-free generation of all graphs on n vertices with at least min_edges edges that
/// satisfy `keep`. Vertices are added one at a time; a child is kept only if its new vertex
/// is a valid canonical deletion (minimum degree, canonically last up to isomorphism of the
/// deleted graph).
GenerationResult generate_graphs(int n, int min_edges, const HereditaryProperty& keep,
                                 const GenerationOptions& options = {});

/// Spec-free graphs on n vertices with at least min_edges edges, one per isomorphism class.
GenerationResult generate_free_graphs(int n, const PatternSpec& spec, int min_edges,
                                      const GenerationOptions& options = {});

/// Every graph on n vertices up to isomorphism.
std::vector<Graph> all_graphs(int n);

enum class SearchMethod {
    Augmentation,  // vertex-by-vertex canonical augmentation with edge-count thresholds
    EdgeDeletion   // top-down from K_n, deleting one edge of a witness per step
};
const char* to_string(SearchMethod m);

struct SearchOptions {
    SearchMethod method = SearchMethod::Augmentation;
    /// A spec-free host whose edge count seeds the lower bound.
    std::optional<Graph> lower_hint;
    std::uint64_t budget = 0;
    int workers = 1;
};

struct SearchReport {
    int n = 0;
    PatternSpec spec{Cycle{5}, 2};
    SearchMethod method = SearchMethod::Augmentation;
    int ex_value = 0;
    /// Every extremal graph up to isomorphism, sorted.
    std::vector<CanonicalForm> extremal;
    /// Witnessed lower bound the search started from.
    int lower_bound = 0;
    std::uint64_t nodes_expanded = 0;
    double wall_seconds = 0;
};

/// Raised when a search runs out of budget. Carries the best bound certified so far.
class SearchBudgetExceeded : public Error {
public:
    SearchBudgetExceeded(int best_lower_bound, std::uint64_t nodes)
        : Error("search budget exceeded after " + std::to_string(nodes) +
                " nodes; best certified lower bound " + std::to_string(best_lower_bound)),
          best_lower_bound(best_lower_bound), nodes(nodes) {}

    int best_lower_bound;
    std::uint64_t nodes;
};

/// ex(n, spec) together with all extremal graphs. Requires n <= kMaxSearchOrder.
SearchReport extremal_numbers(int n, const PatternSpec& spec, const SearchOptions& options = {});

/// A spec-free graph on n vertices found greedily; its edge count is a lower bound on ex.
Graph greedy_free_graph(int n, const PatternSpec& spec);

struct KnownValue {
    std::optional<long> value;
    std::string note;
};

/// Literature value of ex(n, spec) where it is proven for these parameters.
KnownValue known_values(int n, const PatternSpec& spec);

}  // namespace fanfree

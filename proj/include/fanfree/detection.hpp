#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanfree/constructions.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

/// Explicit occurrence of a PatternSpec in a host. Each gadget image starts with the
/// center; cycle images list the cycle in traversal order.
struct EmbeddingWitness {
    int center = -1;
    std::vector<std::vector<int>> gadgets;
};

enum class Outcome { Present, Absent, Indeterminate };
const char* to_string(Outcome o);

struct DetectOptions {
    /// Maximum number of search nodes; 0 means unlimited.
    std::uint64_t budget = 0;
    /// Threads used to explore different centers.
    int workers = 1;
};

struct DetectResult {
    Outcome outcome = Outcome::Absent;
    std::optional<EmbeddingWitness> witness;
    std::uint64_t nodes = 0;
};

/// Exact subgraph containment test for k gadgets through a common center.
///
/// Absence is only reported when the search space was exhausted; running out of budget
/// yields Outcome::Indeterminate.
DetectResult detect(const Graph& g, const PatternSpec& spec, const DetectOptions& options = {});

/// Unbudgeted convenience wrapper around detect().
std::optional<EmbeddingWitness> contains_pattern(const Graph& g, const PatternSpec& spec);
bool is_free(const Graph& g, const PatternSpec& spec);

bool verify_witness(const Graph& g, const EmbeddingWitness& w, const PatternSpec& spec);

/// Proper 2-coloring (0/1 per vertex) if g has no odd cycle.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

}  // namespace fanfree

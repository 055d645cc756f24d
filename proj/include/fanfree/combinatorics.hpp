#pragma once

#include <span>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

struct MatchingCertificate {
    std::vector<Edge> edges;
    int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Maximum matching (Edmonds' blossom algorithm).
MatchingCertificate max_matching(const Graph& g);
/// ν(G).
int matching_number(const Graph& g);
/// Maximum matching size for an arbitrary adjacency-list graph (no vertex cap).
int matching_number(std::span<const std::vector<int>> adjacency);
/// True iff the edges are present in g and pairwise vertex-disjoint.
bool is_matching(const Graph& g, const MatchingCertificate& m);

/// f(ν, Δ) = νΔ + ⌊Δ/2⌋·⌊ν/⌈Δ/2⌉⌋, the edge bound for graphs with matching number ν and
/// maximum degree Δ. Throws ArgumentError unless ν, Δ >= 1.
long chvatal_bound(long nu, long delta);

/// g(k): k²−k for odd k, k²−3k/2 for even k.
long fan_excess(long k);

enum class PatternKind {
    IntersectingOddCycles,  // C_{k,q}, q >= 5
    TriangleFan             // F_k
};

/// ⌊n²/4⌋ + (k−1)² for intersecting odd cycles, ⌊n²/4⌋ + g(k) for fans.
long predicted_ex(long n, long k, PatternKind kind);

enum class Verdict { Pass, Fail, NotApplicable };
const char* to_string(Verdict v);

struct Observation1Result {
    Verdict verdict;
    int matching = 0;
    int vertices = 0;
    int components = 0;
};

/// For Δ <= 2 and no isolated vertex: checks 2ν >= |V| − ω.
Observation1Result check_observation1(const Graph& g);

}  // namespace fanfree

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fanfree {

/// Outcome of one exhaustive or randomized property run.
struct CheckSummary {
    std::string name;
    long checked = 0;
    long violations = 0;
    std::string detail;
    bool passed() const noexcept { return violations == 0 && checked > 0; }
};

/// e(G) <= f(ν, Δ) over every graph on at most max_n vertices with ν, Δ >= 1, and f(3,2) = 9.
CheckSummary verify_chvatal_bound(int max_n = 7);

/// For r in 1..3 over isolated-vertex-free graphs on at most max_n vertices: the
/// neighborhood condition implies e <= r², with equality exactly at K_{r,r}.
CheckSummary verify_lemma_main(int max_n = 7);

/// 2ν >= |V| − ω for graphs with Δ <= 2 and no isolated vertex on at most max_n vertices.
CheckSummary verify_observation1(int max_n = 8);

/// Both placements of family_member(n, k) are C_{k,q}-free for (k, q) in {2,3} x {5,7}
/// and n from max(4(k−1)², 4(k−1)) to max_n.
CheckSummary verify_family_freeness(int max_n = 24, int workers = 1);

/// min_degree_peel postconditions on random graphs with e = ⌊n²/4⌋ + j.
CheckSummary verify_peeling(int instances = 100, std::uint64_t seed = 1);

/// f(k−1, k−2) <= (k−1)² − 1 for 3 <= k <= 12, k != 4.
CheckSummary verify_degree_matching_bound();

std::vector<CheckSummary> verify_all(int workers = 1);

}  // namespace fanfree

#include <algorithm>
#include <random>
#include <thread>

#include "fanfree/error.hpp"
#include "fanfree/structure.hpp"

namespace fanfree {

VertexSet Partition::part(int i) const noexcept {
    VertexSet s = 0;
    for (int v = 0; v < order(); ++v)
        if (side[v] == i) s |= singleton(v);
    return s;
}

Partition make_partition(const Graph& g, VertexSet v0) {
    Partition p;
    p.side.assign(g.order(), 1);
    for_each_vertex(v0 & g.vertices(), [&](int v) { p.side[v] = 0; });
    const VertexSet v1 = g.vertices() & ~v0;
    p.cut_edges = g.edges_between(v0 & g.vertices(), v1);
    p.internal_edges = g.edge_count() - p.cut_edges;
    return p;
}

namespace {

constexpr int kExactLimit = 20;
constexpr int kRestarts = 32;

// Vertex 0 always sits in V0; the remaining vertices are read from the highest key bit
// down, so increasing keys visit side vectors in lexicographic order.
VertexSet side_one_from_key(std::uint64_t key, int n) {
    VertexSet s = 0;
    for (int v = 1; v < n; ++v)
        if ((key >> (n - 1 - v)) & 1U) s |= singleton(v);
    return s;
}

Partition exact_cut(const Graph& g) {
    const int n = g.order();
    if (n == 0) return make_partition(g, 0);
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    const VertexSet all = g.vertices();
    int best = -1;
    VertexSet best_one = 0;
    for (std::uint64_t key = 0; key < limit; ++key) {
        const VertexSet one = side_one_from_key(key, n);
        int cut = 0;
        for_each_vertex(one, [&](int v) { cut += popcount(g.neighbors(v) & all & ~one); });
        if (cut > best) {
            best = cut;
            best_one = one;
        }
    }
    Partition p = make_partition(g, all & ~best_one);
    p.exact = true;
    return p;
}

// Moves single vertices across while that strictly increases the cut.
void improve(const Graph& g, std::vector<int>& side) {
    const int n = g.order();
    VertexSet one = 0;
    for (int v = 0; v < n; ++v)
        if (side[v]) one |= singleton(v);
    for (bool moved = true; moved;) {
        moved = false;
        for (int v = 0; v < n; ++v) {
            const VertexSet same = contains(one, v) ? one : g.vertices() & ~one;
            const int inside = popcount(g.neighbors(v) & same);
            const int across = g.degree(v) - inside;
            if (inside > across) {
                one ^= singleton(v);
                side[v] ^= 1;
                moved = true;
            }
        }
    }
}

}  // namespace

Partition local_search_cut(const Graph& g, int restarts, int workers) {
    if (restarts < 1) throw ArgumentError("at least one restart is needed");
    const int n = g.order();
    std::vector<std::vector<int>> results(restarts);
    auto run = [&](int start) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(start));
        std::vector<int> side(n);
        for (int v = 0; v < n; ++v) side[v] = static_cast<int>(rng() & 1U);
        improve(g, side);
        if (side[0] == 1)
            for (int& s : side) s ^= 1;
        results[start] = std::move(side);
    };
    workers = std::clamp(workers, 1, restarts);
    if (workers == 1) {
        for (int i = 0; i < restarts; ++i) run(i);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t)
            threads.emplace_back([&, t] {
                for (int i = t; i < restarts; i += workers) run(i);
            });
        for (auto& t : threads) t.join();
    }

    Partition best;
    for (const auto& side : results) {
        VertexSet zero = 0;
        for (int v = 0; v < n; ++v)
            if (side[v] == 0) zero |= singleton(v);
        Partition p = make_partition(g, zero);
        if (best.side.empty() || p.cut_edges > best.cut_edges ||
            (p.cut_edges == best.cut_edges && p.side < best.side))
            best = std::move(p);
    }
    return best;
}

Partition max_cut_partition(const Graph& g, int workers) {
    if (g.order() <= kExactLimit) return exact_cut(g);
    return local_search_cut(g, kRestarts, workers);
}

}  // namespace fanfree

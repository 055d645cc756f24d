#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "fanfree/detection.hpp"
#include "fanfree/search.hpp"

namespace fanfree {

namespace {

// Edge thresholds per level. An n-vertex graph with e edges has a vertex of degree at most
// ⌊2e/n⌋, so deleting a minimum-degree vertex keeps at least e − ⌊2e/n⌋ edges; the map
// e ↦ e − ⌊2e/n⌋ is nondecreasing, which makes the threshold chain exact.
std::vector<int> level_thresholds(int n, int min_edges) {
    std::vector<int> t(n + 1, 0);
    if (n == 0) return t;
    t[n] = std::max(0, min_edges);
    for (int m = n; m > 1; --m) t[m - 1] = std::max(0, t[m] - (2 * t[m]) / m);
    return t;
}

class Augmenter {
public:
    Augmenter(const HereditaryProperty& keep, bool prune, std::uint64_t budget,
              std::atomic<std::uint64_t>& nodes)
        : keep_(keep), prune_(prune), budget_(budget), nodes_(nodes) {}

    bool out_of_budget() const { return exhausted_; }

    // Children on m+1 vertices of `parent` whose canonical parent is `parent`.
    std::vector<Graph> children(const Graph& parent, int min_edges) {
        std::vector<Graph> out;
        const int m = parent.order();
        const CanonicalForm parent_form = canonical_form(parent);
        std::set<CanonicalForm> seen;
        std::vector<int> degree(m);
        for (int v = 0; v < m; ++v) degree[v] = parent.degree(v);

        const VertexSet limit = VertexSet{1} << m;
        for (VertexSet s = 0; s < limit; ++s) {
            const int d = popcount(s);
            if (parent.edge_count() + d < min_edges) continue;
            bool minimum = true;
            for (int v = 0; v < m && minimum; ++v)
                if (degree[v] + (contains(s, v) ? 1 : 0) < d) minimum = false;
            if (!minimum) continue;

            if (budget_ != 0 && nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
                exhausted_ = true;
                return out;
            }
            if (budget_ == 0) nodes_.fetch_add(1, std::memory_order_relaxed);

            std::vector<VertexSet> rows(parent.rows().begin(), parent.rows().end());
            rows.push_back(s);
            for_each_vertex(s, [&](int v) { rows[v] |= singleton(m); });
            Graph child = Graph::from_rows(std::move(rows));
            if (prune_ && keep_ && !keep_(child)) continue;

            CanonicalLabeling lab = canonical_labeling(child);
            // Canonical deletion: the minimum-degree vertex with the largest canonical position.
            int deletion = -1;
            for (int pos = m; pos >= 0; --pos) {
                if (child.degree(lab.labeling[pos]) == d) {
                    deletion = lab.labeling[pos];
                    break;
                }
            }
            if (deletion != m && canonical_form(remove_vertices(child, singleton(deletion))) != parent_form)
                continue;
            if (!seen.insert(lab.form).second) continue;
            out.push_back(std::move(child));
        }
        return out;
    }

private:
    const HereditaryProperty& keep_;
    bool prune_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
    bool exhausted_ = false;
};

}  // namespace

GenerationResult generate_graphs(int n, int min_edges, const HereditaryProperty& keep,
                                 const GenerationOptions& options) {
    if (n < 0 || n > kMaxSearchOrder)
        throw ArgumentError("generation is limited to n <= " + std::to_string(kMaxSearchOrder));
    GenerationResult result;
    if (min_edges > n * (n - 1) / 2) return result;

    const std::vector<int> threshold = level_thresholds(n, min_edges);
    std::vector<Graph> level;
    level.emplace_back(n == 0 ? 0 : 1);
    if (options.prune && keep && !keep(level.front())) level.clear();

    std::atomic<std::uint64_t> nodes{0};
    for (int m = 1; m < n && !level.empty(); ++m) {
        const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(level.size())));
        std::vector<std::vector<Graph>> per_parent(level.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> exhausted{false};
        auto work = [&] {
            Augmenter aug(keep, options.prune, options.budget, nodes);
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= level.size() || exhausted) return;
                per_parent[i] = aug.children(level[i], threshold[m + 1]);
                if (aug.out_of_budget()) exhausted = true;
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::thread> threads;
            for (int t = 0; t < workers; ++t) threads.emplace_back(work);
            for (auto& t : threads) t.join();
        }
        std::vector<Graph> next_level;
        for (auto& kids : per_parent)
            for (auto& g : kids) next_level.push_back(std::move(g));
        level = std::move(next_level);
        if (exhausted) {
            result.complete = false;
            break;
        }
    }

    result.nodes = nodes.load();
    std::vector<std::pair<CanonicalForm, Graph>> keyed;
    for (auto& g : level) {
        if (g.order() != n) continue;
        if (g.edge_count() < min_edges) continue;
        if (!options.prune && keep && !keep(g)) continue;
        keyed.emplace_back(canonical_form(g), std::move(g));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [form, g] : keyed) result.graphs.push_back(std::move(g));
    return result;
}

GenerationResult generate_free_graphs(int n, const PatternSpec& spec, int min_edges,
                                      const GenerationOptions& options) {
    spec.validate();
    HereditaryProperty keep = [&spec](const Graph& g) { return is_free(g, spec); };
    return generate_graphs(n, min_edges, keep, options);
}

std::vector<Graph> all_graphs(int n) { return generate_graphs(n, 0, {}).graphs; }

}  // namespace fanfree

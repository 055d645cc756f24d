#include "fanfree/detection.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "fanfree/combinatorics.hpp"

namespace fanfree {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Present: return "present";
        case Outcome::Absent: return "absent";
        case Outcome::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int root = 0; root < g.order(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            bool clash = false;
            for_each_vertex(g.neighbors(v), [&](int w) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    return color;
}

bool verify_witness(const Graph& g, const EmbeddingWitness& w, const PatternSpec& spec) {
    const int order = spec.gadget_order();
    if (w.center < 0 || w.center >= g.order()) return false;
    if (static_cast<int>(w.gadgets.size()) != spec.count) return false;
    VertexSet seen = singleton(w.center);
    for (const auto& image : w.gadgets) {
        if (static_cast<int>(image.size()) != order || image.front() != w.center) return false;
        for (std::size_t i = 1; i < image.size(); ++i) {
            const int v = image[i];
            if (v < 0 || v >= g.order() || contains(seen, v)) return false;
            seen |= singleton(v);
        }
        if (spec.is_cycle()) {
            for (std::size_t i = 0; i < image.size(); ++i)
                if (!g.adjacent(image[i], image[(i + 1) % image.size()])) return false;
        } else {
            for (std::size_t i = 0; i < image.size(); ++i)
                for (std::size_t j = i + 1; j < image.size(); ++j)
                    if (!g.adjacent(image[i], image[j])) return false;
        }
    }
    return true;
}

namespace {

// Static facts about the host shared by all center searches.
struct Host {
    const Graph& g;
    PatternSpec spec;
    int gadget_order;
    // Vertices that can occur in any gadget copy (a core of the host).
    VertexSet pool = 0;
    // Twin class per vertex: swapping two unused twins is an automorphism fixing the rest.
    std::vector<int> twin_class;
    // Adjacency restricted to one side of a large cut. Every odd cycle uses an odd number
    // of these edges.
    std::vector<VertexSet> internal;
    std::vector<int> centers;

    Host(const Graph& host, const PatternSpec& s)
        : g(host), spec(s), gadget_order(s.gadget_order()) {
        const int n = g.order();
        const int core = spec.is_cycle() ? 2 : gadget_order - 1;
        pool = g.vertices();
        for (bool changed = true; changed;) {
            changed = false;
            for_each_vertex(pool, [&](int v) {
                if (popcount(g.neighbors(v) & pool) < core) {
                    pool &= ~singleton(v);
                    changed = true;
                }
            });
        }

        twin_class.resize(n);
        for (int v = 0; v < n; ++v) {
            twin_class[v] = v;
            for (int u = 0; u < v; ++u) {
                const VertexSet mask = ~(singleton(u) | singleton(v));
                if ((g.neighbors(u) & mask) == (g.neighbors(v) & mask)) {
                    twin_class[v] = twin_class[u];
                    break;
                }
            }
        }

        internal = internal_rows();

        const int need = spec.count * (gadget_order - 1);
        VertexSet tried_classes = 0;
        std::vector<int> order = to_vector(pool);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int c : order) {
            if (popcount(g.neighbors(c) & pool) < (spec.is_cycle() ? 2 * spec.count : need)) continue;
            if (contains(tried_classes, twin_class[c])) continue;
            tried_classes |= singleton(twin_class[c]);
            centers.push_back(c);
        }
    }

    // Best of a few deterministic local-search cuts.
    std::vector<VertexSet> internal_rows() const {
        const int n = g.order();
        std::vector<int> best_side(n, 0);
        int best_cut = -1;
        auto improve = [&](std::vector<int>& side) {
            VertexSet mask[2] = {0, 0};
            for (int v = 0; v < n; ++v) mask[side[v]] |= singleton(v);
            for (bool moved = true; moved;) {
                moved = false;
                for (int v = 0; v < n; ++v) {
                    const int s = side[v];
                    if (2 * popcount(g.neighbors(v) & mask[s]) > g.degree(v)) {
                        mask[s] &= ~singleton(v);
                        mask[1 - s] |= singleton(v);
                        side[v] = 1 - s;
                        moved = true;
                    }
                }
            }
            const int cut = g.edge_count() - g.edges_within(mask[0]) - g.edges_within(mask[1]);
            if (cut > best_cut) {
                best_cut = cut;
                best_side = side;
            }
        };
        auto greedy = [&](const std::vector<int>& order) {
            std::vector<int> side(n, 0);
            VertexSet placed[2] = {0, 0};
            for (int v : order) {
                const int to0 = popcount(g.neighbors(v) & placed[0]);
                const int to1 = popcount(g.neighbors(v) & placed[1]);
                side[v] = to0 > to1 ? 1 : 0;
                placed[side[v]] |= singleton(v);
            }
            improve(side);
        };
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        greedy(order);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        greedy(order);

        VertexSet side_mask[2] = {0, 0};
        for (int v = 0; v < n; ++v) side_mask[best_side[v]] |= singleton(v);
        std::vector<VertexSet> rows(n);
        for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v) & side_mask[best_side[v]];
        return rows;
    }
};

enum class CenterResult { Found, NotFound, OutOfBudget, Cancelled };

class CenterSearch {
public:
    CenterSearch(const Host& host, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
                 const std::atomic<int>* found_at, int my_index)
        : h_(host), g_(host.g), nodes_(nodes), budget_(budget), found_at_(found_at),
          my_index_(my_index) {}

    CenterResult run(int center) {
        center_ = center;
        used_ = singleton(center);
        gadgets_.clear();
        const bool ok = solve(0);
        if (ok) return CenterResult::Found;
        if (stop_ == Stop::Budget) return CenterResult::OutOfBudget;
        if (stop_ == Stop::Cancelled) return CenterResult::Cancelled;
        return CenterResult::NotFound;
    }

    EmbeddingWitness witness() const { return EmbeddingWitness{center_, gadgets_}; }

private:
    enum class Stop { None, Budget, Cancelled };

    bool tick() {
        if (stop_ != Stop::None) return false;
        const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget_ != 0 && n > budget_) {
            stop_ = Stop::Budget;
            return false;
        }
        if (found_at_ && (n & 255) == 0 && found_at_->load(std::memory_order_relaxed) < my_index_) {
            stop_ = Stop::Cancelled;
            return false;
        }
        return true;
    }

    VertexSet avail() const { return h_.pool & ~used_; }

    // Largest number of further gadgets that can each get their own internal edge: a
    // matching on the internal edges among unused vertices, where the center may be
    // matched several times.
    int internal_capacity(VertexSet free, int wanted) const {
        const VertexSet at_center = h_.internal[center_] & free;
        const int copies = std::min(wanted, popcount(at_center));
        if (copies >= wanted) return wanted;
        std::vector<int> index(g_.order(), -1);
        std::vector<int> members = to_vector(free);
        for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
        const int m = static_cast<int>(members.size());
        std::vector<std::vector<int>> adj(m + copies);
        for (int i = 0; i < m; ++i)
            for_each_vertex(h_.internal[members[i]] & free, [&](int w) { adj[i].push_back(index[w]); });
        for (int c = 0; c < copies; ++c) {
            for_each_vertex(at_center, [&](int w) {
                adj[m + c].push_back(index[w]);
                adj[index[w]].push_back(m + c);
            });
        }
        return matching_number(adj);
    }

    bool solve(int gadget) {
        if (gadget == h_.spec.count) return true;
        if (!tick()) return false;
        const int remaining = h_.spec.count - gadget;
        const VertexSet free = avail();
        const int per = h_.gadget_order - 1;
        if (popcount(free) < remaining * per) return false;
        const int center_need = h_.spec.is_cycle() ? 2 : per;
        if (popcount(g_.neighbors(center_) & free) < remaining * center_need) return false;
        if (internal_capacity(free, remaining) < remaining) return false;

        gadgets_.push_back({center_});
        const bool ok = h_.spec.is_cycle() ? extend_cycle(gadget, center_)
                                           : extend_clique(gadget, g_.neighbors(center_) & free);
        if (!ok) gadgets_.pop_back();
        return ok;
    }

    bool within(VertexSet allowed, int from, int to, int steps) const {
        VertexSet seen = singleton(from);
        VertexSet frontier = seen;
        for (int s = 0; s < steps; ++s) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g_.neighbors(v); });
            next &= allowed & ~seen;
            if (contains(next, to)) return true;
            if (!next) return false;
            seen |= next;
            frontier = next;
        }
        return false;
    }

    bool extend_cycle(int gadget, int current) {
        const int q = h_.gadget_order;
        const int len = static_cast<int>(gadgets_[gadget].size());
        if (len == q) return solve(gadget + 1);
        if (!tick()) return false;

        VertexSet candidates = g_.neighbors(current) & avail();
        if (len == q - 1) {
            candidates &= g_.neighbors(center_);
            // Orientation: the closing vertex carries a larger id than the first one.
            candidates &= ~first_n(gadgets_[gadget][1] + 1);
        }
        VertexSet tried = 0;
        while (candidates) {
            const int w = lowest(candidates);
            candidates &= candidates - 1;
            if (contains(tried, h_.twin_class[w])) continue;
            tried |= singleton(h_.twin_class[w]);
            if (len + 1 < q) {
                const VertexSet allowed = (avail() & ~singleton(w)) | singleton(center_);
                if (!within(allowed, w, center_, q - len)) continue;
            }
            gadgets_[gadget].push_back(w);
            used_ |= singleton(w);
            if (extend_cycle(gadget, w)) return true;
            used_ &= ~singleton(w);
            gadgets_[gadget].pop_back();
            if (stop_ != Stop::None) return false;
        }
        return false;
    }

    bool extend_clique(int gadget, VertexSet candidates) {
        if (static_cast<int>(gadgets_[gadget].size()) == h_.gadget_order) return solve(gadget + 1);
        if (!tick()) return false;
        const int missing = h_.gadget_order - static_cast<int>(gadgets_[gadget].size());
        VertexSet tried = 0;
        while (candidates && popcount(candidates) >= missing) {
            const int w = lowest(candidates);
            candidates &= candidates - 1;
            if (contains(tried, h_.twin_class[w])) continue;
            tried |= singleton(h_.twin_class[w]);
            gadgets_[gadget].push_back(w);
            used_ |= singleton(w);
            if (extend_clique(gadget, candidates & g_.neighbors(w))) return true;
            used_ &= ~singleton(w);
            gadgets_[gadget].pop_back();
            if (stop_ != Stop::None) return false;
        }
        return false;
    }

    const Host& h_;
    const Graph& g_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    const std::atomic<int>* found_at_;
    int my_index_;

    int center_ = -1;
    VertexSet used_ = 0;
    std::vector<std::vector<int>> gadgets_;
    Stop stop_ = Stop::None;
};

}  // namespace

DetectResult detect(const Graph& g, const PatternSpec& spec, const DetectOptions& options) {
    spec.validate();
    DetectResult result;
    if (g.order() < spec.order() || g.edge_count() < spec.size()) return result;
    // Every gadget contains an odd cycle, so bipartite hosts are free.
    if (is_bipartite(g)) return result;

    const Host host(g, spec);
    std::atomic<std::uint64_t> nodes{0};
    const int total = static_cast<int>(host.centers.size());
    const int workers = std::max(1, std::min(options.workers, total));

    if (workers == 1) {
        bool exhausted = false;
        for (int i = 0; i < total; ++i) {
            CenterSearch s(host, nodes, options.budget, nullptr, i);
            const CenterResult r = s.run(host.centers[i]);
            if (r == CenterResult::Found) {
                result.outcome = Outcome::Present;
                result.witness = s.witness();
                break;
            }
            if (r == CenterResult::OutOfBudget) {
                exhausted = true;
                break;
            }
        }
        if (!result.witness && exhausted) result.outcome = Outcome::Indeterminate;
        result.nodes = nodes.load();
        return result;
    }

    // Parallel: workers pull centers in order; the witness from the earliest center wins.
    std::atomic<int> next{0};
    std::atomic<int> found_at{total};
    std::atomic<bool> out_of_budget{false};
    std::mutex mu;
    std::vector<std::optional<EmbeddingWitness>> found(total);
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= total || i > found_at.load()) return;
            CenterSearch s(host, nodes, options.budget, &found_at, i);
            const CenterResult r = s.run(host.centers[i]);
            if (r == CenterResult::Found) {
                std::lock_guard lock(mu);
                found[i] = s.witness();
                int cur = found_at.load();
                while (i < cur && !found_at.compare_exchange_weak(cur, i)) {
                }
            } else if (r == CenterResult::OutOfBudget) {
                out_of_budget = true;
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();

    const int first = found_at.load();
    if (first < total) {
        result.outcome = Outcome::Present;
        result.witness = found[first];
    } else if (out_of_budget) {
        result.outcome = Outcome::Indeterminate;
    }
    result.nodes = nodes.load();
    return result;
}

std::optional<EmbeddingWitness> contains_pattern(const Graph& g, const PatternSpec& spec) {
    return detect(g, spec).witness;
}

bool is_free(const Graph& g, const PatternSpec& spec) { return !contains_pattern(g, spec); }

}  // namespace fanfree

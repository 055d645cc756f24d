#include <string>

#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"

namespace fanfree {

namespace {

constexpr int kBias = 63;

std::size_t body_length(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > Graph::kMaxVertices) throw UnsupportedSizeError("graph6 short form needs n <= 62");
    std::string out;
    out.reserve(1 + body_length(n));
    out.push_back(static_cast<char>(n + kBias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) throw DecodeError(0, "empty input, expected a header byte");

    const int header = static_cast<unsigned char>(text[0]);
    if (header == 126) throw DecodeError(0, "vertex count above 62 is not supported");
    if (header < kBias || header > 126) throw DecodeError(0, "header byte out of range");
    const int n = header - kBias;

    const std::size_t expected = 1 + body_length(n);
    for (std::size_t i = 1; i < text.size(); ++i) {
        const int c = static_cast<unsigned char>(text[i]);
        if (c < kBias || c > kBias + 63) throw DecodeError(i, "character out of range");
        if (i >= expected) throw DecodeError(i, "trailing bytes after the adjacency data");
    }
    if (text.size() < expected) throw DecodeError(text.size(), "truncated adjacency data");

    std::vector<VertexSet> rows(n, 0);
    std::size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const int group = static_cast<unsigned char>(text[pos]) - kBias;
            if ((group >> bit) & 1) {
                rows[i] |= singleton(j);
                rows[j] |= singleton(i);
            }
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    }
    if (bit != 5) {
        const int group = static_cast<unsigned char>(text[pos]) - kBias;
        if (group & ((1 << (bit + 1)) - 1)) throw DecodeError(pos, "nonzero padding bits");
    }
    return Graph::from_rows(std::move(rows));
}

bool Graph6Reader::next(Graph& out, std::string* raw) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // nauty writes the prologue directly in front of the first graph on the same line.
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        out = graph6_decode(line);
        if (raw) *raw = line;
        return true;
    }
    return false;
}

}  // namespace fanfree

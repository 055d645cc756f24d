#include "fanfree/combinatorics.hpp"
#include "fanfree/error.hpp"

namespace fanfree {

long chvatal_bound(long nu, long delta) {
    if (nu < 1 || delta < 1) throw ArgumentError("chvatal_bound needs nu >= 1 and delta >= 1");
    const long half_up = (delta + 1) / 2;
    return nu * delta + (delta / 2) * (nu / half_up);
}

long fan_excess(long k) {
    if (k < 1) throw ArgumentError("fan_excess needs k >= 1");
    return k % 2 == 1 ? k * k - k : k * k - 3 * k / 2;
}

long predicted_ex(long n, long k, PatternKind kind) {
    if (n < 0) throw ArgumentError("predicted_ex needs n >= 0");
    const long base = n * n / 4;
    switch (kind) {
        case PatternKind::IntersectingOddCycles:
            if (k < 2) throw ArgumentError("predicted_ex for intersecting cycles needs k >= 2");
            return base + (k - 1) * (k - 1);
        case PatternKind::TriangleFan:
            return base + fan_excess(k);
    }
    throw ArgumentError("unknown pattern kind");
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

Observation1Result check_observation1(const Graph& g) {
    Observation1Result r{Verdict::NotApplicable};
    r.vertices = g.order();
    if (g.order() == 0 || g.max_degree() > 2 || g.isolated_vertices() != 0) return r;
    r.matching = matching_number(g);
    r.components = g.component_count();
    r.verdict = 2 * r.matching >= r.vertices - r.components ? Verdict::Pass : Verdict::Fail;
    return r;
}

}  // namespace fanfree

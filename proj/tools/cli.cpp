#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "fanfree/combinatorics.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/detection.hpp"
#include "fanfree/error.hpp"
#include "fanfree/search.hpp"
#include "fanfree/structure.hpp"
#include "fanfree/verify.hpp"

namespace fanfree::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    int n = -1;
    int n_min = -1;
    int n_max = -1;
    int k = 2;
    int q = 5;
    int clique = 0;
    int r = 2;
    long nu = 0;
    long delta = 0;
    std::string family = "fnk";
    std::string placement = "larger";
    std::string gamma = "1/1600";
    std::string format;
    std::string in;
    std::string out;
    std::string method = "augment";
    std::string lower_hint = "none";
    std::string suite = "all";
    std::uint64_t budget = 0;
    int workers = 1;
};

class UsageError : public Error {
public:
    using Error::Error;
};

int default_workers() {
    const char* env = std::getenv("FANFREE_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long w = std::strtol(env, &end, 10);
    if (*end != '\0' || w < 1 || w > 1024) throw UsageError("FANFREE_WORKERS must be a positive integer");
    return static_cast<int>(w);
}

Ratio parse_gamma(const std::string& text) {
    Ratio r;
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            std::size_t used = 0;
            r.num = std::stol(text.substr(0, slash), &used);
            if (used != slash) throw UsageError("bad numerator");
            const std::string den = text.substr(slash + 1);
            r.den = std::stol(den, &used);
            if (used != den.size()) throw UsageError("bad denominator");
        } else {
            // Decimal: read the digits exactly instead of going through floating point.
            const auto dot = text.find('.');
            const std::string whole = text.substr(0, dot);
            const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
            if ((whole + frac).empty() || (whole + frac).find_first_not_of("0123456789") != std::string::npos ||
                frac.size() > 12)
                throw UsageError("bad decimal");
            r.num = std::stol(whole.empty() ? "0" : whole);
            r.den = 1;
            for (char c : frac) {
                r.num = r.num * 10 + (c - '0');
                r.den *= 10;
            }
        }
    } catch (const std::logic_error&) {
        throw UsageError("--gamma expects a ratio like 1/1600 or a decimal");
    } catch (const UsageError&) {
        throw UsageError("--gamma expects a ratio like 1/1600 or a decimal");
    }
    if (r.num <= 0 || r.den <= 0) throw UsageError("--gamma must be positive");
    return r;
}

PatternSpec pattern(const Config& c) {
    PatternSpec spec = c.clique > 0 ? PatternSpec::cliques(c.clique, c.k) : PatternSpec::cycles(c.q, c.k);
    spec.validate();
    return spec;
}

std::vector<int> host_sizes(const Config& c) {
    if (c.n >= 0) return {c.n};
    if (c.n_min < 0 || c.n_max < 0) throw UsageError("give --n or both --n-min and --n-max");
    if (c.n_min > c.n_max) throw UsageError("--n-min exceeds --n-max");
    std::vector<int> out;
    for (int n = c.n_min; n <= c.n_max; ++n) out.push_back(n);
    return out;
}

Placement placement(const Config& c) { return c.placement == "smaller" ? Placement::Smaller : Placement::Larger; }

Json header(const char* command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::vector<std::pair<std::string, Graph>> read_graphs(std::istream& in) {
    std::vector<std::pair<std::string, Graph>> out;
    Graph6Reader reader(in);
    Graph g;
    std::string raw;
    while (reader.next(g, &raw)) out.emplace_back(raw, g);
    return out;
}

// --- construct ----------------------------------------------------------------

int cmd_construct(const Config& c, std::ostream& out) {
    Json j = header("construct");
    j["family"] = c.family;
    Json graphs = Json::array();
    std::vector<Graph> built;
    if (c.family == "pattern") {
        built.push_back(build_pattern(pattern(c)));
    } else {
        for (int n : host_sizes(c)) {
            if (c.family == "turan") {
                if (c.r < 1) throw UsageError("--r must be at least 1");
                built.push_back(turan_graph(n, c.r));
            } else {
                built.push_back(family_member(n, c.k, placement(c)).graph);
            }
        }
    }
    if (c.format != "json") {
        for (const Graph& g : built) out << graph6_encode(g) << '\n';
        return kOk;
    }
    for (const Graph& g : built)
        graphs.push_back({{"n", g.order()}, {"edges", g.edge_count()}, {"graph6", graph6_encode(g)}});
    j["graphs"] = std::move(graphs);
    out << j.dump(2) << '\n';
    return kOk;
}

// --- detect -------------------------------------------------------------------

Json witness_json(const EmbeddingWitness& w) { return {{"center", w.center}, {"gadgets", w.gadgets}}; }

int cmd_detect(const Config& c, std::istream& in, std::ostream& out) {
    const PatternSpec spec = pattern(c);
    DetectOptions opts;
    opts.budget = c.budget;
    opts.workers = c.workers;
    bool indeterminate = false;
    Json results = Json::array();
    for (const auto& [raw, g] : read_graphs(in)) {
        const DetectResult r = detect(g, spec, opts);
        indeterminate |= r.outcome == Outcome::Indeterminate;
        if (c.format == "json") {
            Json item{{"graph6", raw}, {"outcome", to_string(r.outcome)}, {"nodes", r.nodes}};
            if (r.witness) item["witness"] = witness_json(*r.witness);
            results.push_back(std::move(item));
        } else {
            out << raw << ' ' << to_string(r.outcome);
            if (r.witness) {
                out << " center " << r.witness->center;
                for (const auto& gadget : r.witness->gadgets) {
                    out << " [";
                    for (std::size_t i = 0; i < gadget.size(); ++i) out << (i ? " " : "") << gadget[i];
                    out << ']';
                }
            }
            out << '\n';
        }
    }
    if (c.format == "json") {
        Json j = header("detect");
        j["pattern"] = spec.describe();
        j["results"] = std::move(results);
        out << j.dump(2) << '\n';
    }
    return indeterminate ? kBudget : kOk;
}

// --- search -------------------------------------------------------------------

Json report_json(const SearchReport& r) {
    Json forms = Json::array();
    for (const auto& f : r.extremal) forms.push_back(f.graph6);
    return {{"n", r.n},
            {"pattern", r.spec.describe()},
            {"method", to_string(r.method)},
            {"ex", r.ex_value},
            {"extremal", std::move(forms)},
            {"lower_bound", r.lower_bound},
            {"nodes_expanded", r.nodes_expanded},
            {"wall_seconds", r.wall_seconds}};
}

int cmd_search(const Config& c, std::ostream& out) {
    const PatternSpec spec = pattern(c);
    std::vector<SearchMethod> methods;
    if (c.method != "delete") methods.push_back(SearchMethod::Augmentation);
    if (c.method != "augment") methods.push_back(SearchMethod::EdgeDeletion);

    Json j = header("search");
    j["pattern"] = spec.describe();
    Json runs = Json::array();
    int status = kOk;
    for (int n : host_sizes(c)) {
        SearchOptions opts;
        opts.budget = c.budget;
        opts.workers = c.workers;
        if (c.lower_hint == "fnk" && spec.is_cycle() && c.k >= 2 && n >= 4 * (c.k - 1) * (c.k - 1))
            opts.lower_hint = family_member(n, c.k).graph;
        std::vector<SearchReport> reports;
        try {
            for (SearchMethod m : methods) {
                opts.method = m;
                reports.push_back(extremal_numbers(n, spec, opts));
            }
        } catch (const SearchBudgetExceeded& e) {
            runs.push_back({{"n", n},
                            {"error", "budget-exhausted"},
                            {"best_lower_bound", e.best_lower_bound},
                            {"nodes_expanded", e.nodes}});
            status = kBudget;
            break;
        }
        Json item;
        item["n"] = n;
        item["ex"] = reports.front().ex_value;
        const KnownValue known = known_values(n, spec);
        item["known"] = known.value ? Json(*known.value) : Json(nullptr);
        item["known_note"] = known.note;
        if (reports.size() == 2) {
            const bool agree = reports[0].ex_value == reports[1].ex_value && reports[0].extremal == reports[1].extremal;
            item["methods_agree"] = agree;
            if (!agree) status = kCheckFailed;
        }
        Json per = Json::array();
        for (const auto& r : reports) per.push_back(report_json(r));
        item["reports"] = std::move(per);
        runs.push_back(std::move(item));
    }
    j["results"] = runs;

    if (c.format == "table") {
        for (const auto& item : runs) {
            if (item.contains("error")) {
                out << "n=" << item["n"] << " budget exhausted, best lower bound " << item["best_lower_bound"] << '\n';
                continue;
            }
            out << "n=" << item["n"] << " ex=" << item["ex"];
            if (item.contains("methods_agree")) out << " methods_agree=" << item["methods_agree"];
            out << " extremal=" << item["reports"][0]["extremal"].size() << '\n';
            for (const auto& g6 : item["reports"][0]["extremal"]) out << g6.get<std::string>() << '\n';
        }
    } else {
        out << j.dump(2) << '\n';
    }
    return status;
}

// --- bounds -------------------------------------------------------------------

int cmd_bounds(const Config& c, std::ostream& out) {
    Json j = header("bounds");
    if (c.nu > 0 || c.delta > 0) j["chvatal_bound"] = {{"nu", c.nu}, {"delta", c.delta}, {"f", chvatal_bound(c.nu, c.delta)}};
    if (c.n >= 0 || c.n_min >= 0) {
        const PatternSpec spec = pattern(c);
        Json rows = Json::array();
        for (int n : host_sizes(c)) {
            const KnownValue known = known_values(n, spec);
            Json row{{"n", n},
                     {"turan_edges", turan_edges(n, 2)},
                     {"predicted_cycles", c.k >= 2 ? Json(predicted_ex(n, c.k, PatternKind::IntersectingOddCycles)) : Json(nullptr)},
                     {"predicted_fan", predicted_ex(n, c.k, PatternKind::TriangleFan)},
                     {"known", known.value ? Json(*known.value) : Json(nullptr)},
                     {"known_note", known.note}};
            if (c.k >= 2 && n >= 4 * (c.k - 1) * (c.k - 1) && n <= Graph::kMaxVertices) row["family_member_edges"] = family_member(n, c.k).graph.edge_count();
            rows.push_back(std::move(row));
        }
        j["pattern"] = spec.describe();
        j["rows"] = std::move(rows);
    } else if (!j.contains("chvatal_bound")) {
        throw UsageError("bounds needs --n/--n-min/--n-max or --nu with --delta");
    }

    if (c.format == "table") {
        if (j.contains("chvatal_bound")) out << "f(" << c.nu << "," << c.delta << ") = " << j["chvatal_bound"]["f"] << '\n';
        if (j.contains("rows"))
            for (const auto& row : j["rows"])
                out << "n=" << row["n"] << " turan=" << row["turan_edges"] << " cycles=" << row["predicted_cycles"]
                    << " fan=" << row["predicted_fan"] << " known=" << row["known"] << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return kOk;
}

// --- audit --------------------------------------------------------------------

Json audit_json(const std::string& raw, const AuditReport& a) {
    Json stages = Json::array();
    for (const auto& s : a.stages) stages.push_back({{"name", s.name}, {"verdict", to_string(s.verdict)}, {"detail", s.detail}});
    const Partition& p = a.partition;
    return {{"graph6", raw},
            {"n", a.n},
            {"edges", a.edges},
            {"predicted", a.predicted},
            {"partition",
             {{"sizes", {popcount(p.part(0)), popcount(p.part(1))}},
              {"cut_edges", p.cut_edges},
              {"internal_edges", p.internal_edges},
              {"exact", p.exact}}},
            {"stages", std::move(stages)},
            {"first_failure", a.first_failure()},
            {"member", a.member}};
}

int cmd_audit(const Config& c, std::istream& in, std::ostream& out) {
    if (c.k < 2) throw UsageError("audit needs --k >= 2");
    AuditOptions opts;
    opts.gamma = parse_gamma(c.gamma);
    opts.detect_budget = c.budget;
    opts.workers = c.workers;
    Json j = header("audit");
    j["k"] = c.k;
    j["q"] = c.q;
    Json results = Json::array();
    bool all_members = true;
    for (const auto& [raw, g] : read_graphs(in)) {
        const AuditReport a = extremal_audit(g, c.k, c.q, opts);
        all_members &= a.member;
        if (c.format == "table") {
            out << raw << " member=" << (a.member ? "yes" : "no") << " first_failure=" << a.first_failure() << '\n';
            for (const auto& s : a.stages) out << "  " << s.name << ": " << to_string(s.verdict) << " (" << s.detail << ")\n";
        } else {
            results.push_back(audit_json(raw, a));
        }
    }
    if (c.format != "table") {
        j["results"] = std::move(results);
        out << j.dump(2) << '\n';
    }
    return all_members ? kOk : kCheckFailed;
}

// --- verify-lemmas ------------------------------------------------------------

int cmd_verify(const Config& c, std::ostream& out) {
    std::vector<CheckSummary> checks;
    const std::string& s = c.suite;
    if (s == "all") {
        checks = verify_all(c.workers);
    } else if (s == "chvatal") {
        checks.push_back(verify_chvatal_bound());
    } else if (s == "lemma-main") {
        checks.push_back(verify_lemma_main());
    } else if (s == "observation1") {
        checks.push_back(verify_observation1());
    } else if (s == "family") {
        checks.push_back(verify_family_freeness(24, c.workers));
    } else if (s == "peel") {
        checks.push_back(verify_peeling());
    } else {
        checks.push_back(verify_degree_matching_bound());
    }
    bool ok = true;
    Json j = header("verify-lemmas");
    Json list = Json::array();
    for (const auto& ch : checks) {
        ok &= ch.passed();
        list.push_back({{"name", ch.name},
                        {"checked", ch.checked},
                        {"violations", ch.violations},
                        {"passed", ch.passed()},
                        {"detail", ch.detail}});
    }
    j["checks"] = std::move(list);
    j["passed"] = ok;
    if (c.format == "table") {
        for (const auto& ch : checks)
            out << (ch.passed() ? "[PASS] " : "[FAIL] ") << ch.name << " checked=" << ch.checked
                << " violations=" << ch.violations << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

void add_pattern_flags(CLI::App* app, Config& c) {
    app->add_option("--k", c.k, "number of gadgets through the center")->check(CLI::Range(1, 62));
    app->add_option("--q", c.q, "odd cycle length")->check(CLI::Range(3, 61));
    app->add_option("--clique", c.clique, "use cliques of this order instead of cycles")->check(CLI::Range(3, 62));
}

void add_sizes(CLI::App* app, Config& c, int max_n = Graph::kMaxVertices) {
    app->add_option("--n", c.n, "host order")->check(CLI::Range(0, max_n));
    app->add_option("--n-min", c.n_min, "smallest host order")->check(CLI::Range(0, max_n));
    app->add_option("--n-max", c.n_max, "largest host order")->check(CLI::Range(0, max_n));
}

void add_run_flags(CLI::App* app, Config& c) {
    app->add_option("--budget", c.budget, "node budget (unlimited when omitted)")->check(CLI::PositiveNumber);
    app->add_option("--workers", c.workers, "worker threads (default from FANFREE_WORKERS)")->check(CLI::Range(1, 1024));
}

void add_io(CLI::App* app, Config& c, bool input) {
    if (input) app->add_option("--in", c.in, "graph6 input file (default stdin)");
    app->add_option("--out", c.out, "output file (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config c;
    try {
        c.workers = default_workers();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App app{"Constructions, detection and exact search for intersecting odd cycles"};
    app.name("fanfree");
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"json", "table"});

    auto* construct = app.add_subcommand("construct", "build a graph and print it as graph6");
    construct->add_option("--family", c.family, "turan | fnk | pattern")->check(CLI::IsMember({"turan", "fnk", "pattern"}));
    add_sizes(construct, c);
    add_pattern_flags(construct, c);
    construct->add_option("--r", c.r, "number of Turan classes")->check(CLI::Range(1, 62));
    construct->add_option("--placement", c.placement, "class receiving K_{k-1,k-1}")->check(CLI::IsMember({"larger", "smaller"}));
    construct->add_option("--format", c.format, "json, or graph6 lines when omitted")->check(CLI::IsMember({"json"}));
    add_io(construct, c, false);

    auto* detect_cmd = app.add_subcommand("detect", "test each input graph for the pattern");
    add_pattern_flags(detect_cmd, c);
    add_run_flags(detect_cmd, c);
    detect_cmd->add_option("--format", c.format, "json | table")->check(formats);
    add_io(detect_cmd, c, true);

    auto* search = app.add_subcommand("search", "exact extremal number and all extremal graphs");
    add_sizes(search, c);
    add_pattern_flags(search, c);
    add_run_flags(search, c);
    search->add_option("--method", c.method, "augment | delete | both")->check(CLI::IsMember({"augment", "delete", "both"}));
    search->add_option("--lower-hint", c.lower_hint, "fnk | none")->check(CLI::IsMember({"fnk", "none"}));
    search->add_option("--format", c.format, "json | table")->check(formats);
    add_io(search, c, false);

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds and literature values");
    add_sizes(bounds, c, 1000000);  // closed forms only
    add_pattern_flags(bounds, c);
    bounds->add_option("--nu", c.nu, "matching number for f(nu, delta)")->check(CLI::PositiveNumber);
    bounds->add_option("--delta", c.delta, "maximum degree for f(nu, delta)")->check(CLI::PositiveNumber);
    bounds->add_option("--format", c.format, "json | table")->check(formats);
    add_io(bounds, c, false);

    auto* audit = app.add_subcommand("audit", "extremal-structure audit of each input graph");
    audit->add_option("--k", c.k, "number of cycles through the center")->check(CLI::Range(2, 62));
    audit->add_option("--q", c.q, "odd cycle length")->check(CLI::Range(5, 61));
    audit->add_option("--gamma", c.gamma, "stability parameter, e.g. 1/1600");
    add_run_flags(audit, c);
    audit->add_option("--format", c.format, "json | table")->check(formats);
    add_io(audit, c, true);

    auto* verify = app.add_subcommand("verify-lemmas", "run the exhaustive property suites");
    verify->add_option("--suite", c.suite, "all | chvatal | lemma-main | observation1 | family | peel | degree-matching")
        ->check(CLI::IsMember({"all", "chvatal", "lemma-main", "observation1", "family", "peel", "degree-matching"}));
    verify->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 1024));
    verify->add_option("--format", c.format, "json | table")->check(formats);
    add_io(verify, c, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    std::ifstream in_file;
    std::istream* src = &in;
    if (!c.in.empty()) {
        in_file.open(c.in);
        if (!in_file) {
            err << "error: cannot open " << c.in << '\n';
            return kUsage;
        }
        src = &in_file;
    }
    std::ofstream out_file;
    std::ostream* dst = &out;
    if (!c.out.empty()) {
        out_file.open(c.out);
        if (!out_file) {
            err << "error: cannot write " << c.out << '\n';
            return kUsage;
        }
        dst = &out_file;
    }

    try {
        if (construct->parsed()) return cmd_construct(c, *dst);
        if (detect_cmd->parsed()) return cmd_detect(c, *src, *dst);
        if (search->parsed()) return cmd_search(c, *dst);
        if (bounds->parsed()) return cmd_bounds(c, *dst);
        if (audit->parsed()) return cmd_audit(c, *src, *dst);
        return cmd_verify(c, *dst);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedSizeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DecodeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace fanfree::cli

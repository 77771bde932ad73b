// resolvdim: build Γ(F_q^n), check resolving sets, compute metric
// dimension and exchange verdicts, and run the whole verification grid.
//
// Exit codes: 0 success / all pass, 1 verification failure, 2 usage error,
// 3 budget or vertex cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "resolvdim/error.hpp"
#include "resolvdim/exchange.hpp"
#include "resolvdim/graph.hpp"
#include "resolvdim/intersection.hpp"
#include "resolvdim/linalg.hpp"
#include "resolvdim/report.hpp"
#include "resolvdim/resolving.hpp"
#include "resolvdim/twins.hpp"

namespace {

using namespace resolvdim;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::uint32_t q = 2;
    std::uint32_t n = 2;
    std::string q_range;
    std::string n_range;
    std::string format = "text";
    std::string out;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t vertex_cap = kDefaultVertexCap;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool allow_theorem = false;
    bool timings = false;

    std::string w;
    std::string dot_path;
    std::string edges_path;
    std::string family_path;
    std::string realize_path;
    std::uint32_t powerset = 0;
    bool q_given = false;
    bool n_given = false;
};

// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open " + o.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

SearchOptions search(const Options& o) { return SearchOptions{o.budget, o.workers}; }

int cmd_graph(const Options& o) {
    const ComponentGraph g(o.q, o.n, o.vertex_cap);
    if (!o.dot_path.empty()) {
        std::ofstream f(o.dot_path);
        if (!f) throw std::runtime_error("cannot open " + o.dot_path);
        write_dot(f, g);
    }
    if (!o.edges_path.empty()) {
        std::ofstream f(o.edges_path);
        if (!f) throw std::runtime_error("cannot open " + o.edges_path);
        write_edge_list(f, g);
    }
    const auto size = g.size_bruteforce();
    if (o.format == "json")
        emit(o, dump({{"schema_version", kSchemaVersion}, {"q", o.q}, {"n", o.n}, {"order", g.order()}, {"size", size}}));
    else
        emit(o, "order=" + std::to_string(g.order()) + " size=" + std::to_string(size) + "\n");
    return 0;
}

int cmd_dim(const Options& o) {
    const ComponentGraph g(o.q, o.n, o.vertex_cap);
    const auto formula = metric_dimension_formula(o.q, o.n);
    const auto found = metric_dimension_search(g, search(o));
    const bool match = found.dimension == formula;
    if (o.format == "json") {
        emit(o, dump({{"schema_version", kSchemaVersion},
                      {"q", o.q},
                      {"n", o.n},
                      {"formula", formula},
                      {"search", found.dimension},
                      {"witness", to_json(g, found.witness)},
                      {"evaluated", found.evaluated},
                      {"match", match}}));
    } else {
        std::ostringstream s;
        s << "formula=" << formula << " search=" << found.dimension << " witness={"
          << g.space().format_set(found.witness) << "}" << (match ? "" : " MISMATCH") << "\n";
        emit(o, s.str());
    }
    return match ? 0 : kExitFail;
}

std::string binary(std::uint32_t mask, std::uint32_t width) {
    std::string s;
    for (std::uint32_t i = width; i-- > 0;) s += (mask >> i) & 1u ? '1' : '0';
    return s;
}

int cmd_twins(const Options& o) {
    const ComponentGraph g(o.q, o.n, o.vertex_cap);
    const auto p = partition_by_neighborhood(g);
    const bool coincide = p == partition_by_skeleton(g);
    if (o.format == "json") {
        json classes = json::array();
        for (const auto& c : p.classes)
            classes.push_back({{"mask", c.skeleton ? json(binary(c.skeleton->mask, o.n)) : json("mixed")},
                               {"size", c.members.size()},
                               {"members", to_json(g, c.members)}});
        emit(o, dump({{"schema_version", kSchemaVersion}, {"classes", classes}, {"coincide", coincide}}));
        return 0;
    }
    std::ostringstream s;
    for (const auto& c : p.classes) {
        s << "mask=" << (c.skeleton ? binary(c.skeleton->mask, o.n) : std::string("mixed")) << " size=" << c.members.size()
          << " members=[" << g.space().format_set(c.members) << "]\n";
    }
    emit(o, s.str());
    return 0;
}

int cmd_check(const Options& o) {
    const ComponentGraph g(o.q, o.n, o.vertex_cap);
    const VertexSet w = g.space().parse_set(o.w);
    const auto report = resolving_report(g, w);
    std::vector<Vector> vs;
    for (VertexId v : w) vs.push_back(g.space().decode(v));
    const bool basis = contains_v_basis(g.space().field(), o.n, vs);
    if (o.format == "json") {
        json j = to_json(g, report);
        j["contains_v_basis"] = basis;
        emit(o, dump(j));
        return 0;
    }
    std::ostringstream s;
    s << "resolving=" << (report.is_resolving ? "yes" : "no") << " minimal=" << (report.is_minimal ? "yes" : "no")
      << " contains_v_basis=" << (basis ? "yes" : "no");
    if (report.colliding_pair)
        s << " collision=(" << g.label(report.colliding_pair->first) << ", " << g.label(report.colliding_pair->second)
          << ")";
    if (report.redundant_vertex) s << " redundant=" << g.label(*report.redundant_vertex);
    s << "\n";
    emit(o, s.str());
    return 0;
}

int cmd_exchange(const Options& o) {
    const ComponentGraph g(o.q, o.n, o.vertex_cap);
    const auto report = has_exchange_property(g, ExchangeOptions{search(o), o.allow_theorem});
    emit(o, dump(to_json(g, report)));
    return 0;
}

int cmd_intersect(const Options& o) {
    std::ostringstream s;
    if (o.powerset) {
        write_set_family(s, powerset_family(o.powerset));
    } else if (!o.realize_path.empty()) {
        std::ifstream f(o.realize_path);
        if (!f) throw std::runtime_error("cannot open " + o.realize_path);
        write_set_family(s, realize_as_intersection_family(read_edge_list(f)));
    } else {
        std::unique_ptr<std::ifstream> file;
        std::istream* in = &std::cin;
        if (!o.family_path.empty() && o.family_path != "-") {
            file = std::make_unique<std::ifstream>(o.family_path);
            if (!*file) throw std::runtime_error("cannot open " + o.family_path);
            in = file.get();
        }
        write_edge_list(s, intersection_graph(read_set_family(*in)));
    }
    emit(o, s.str());
    return 0;
}

int cmd_verify(const Options& o) {
    RunConfig cfg;
    // Without --q / --q-range the default grid axis is kept.
    auto values = [](const std::string& range, bool given, std::uint32_t single, std::vector<std::uint32_t>& out) {
        if (range.empty() && !given) return;
        const Range r = range.empty() ? Range{single, single} : parse_range(range);
        out.clear();
        for (auto v = r.first; v <= r.last; ++v) out.push_back(v);
    };
    values(o.q_range, o.q_given, o.q, cfg.qs);
    values(o.n_range, o.n_given, o.n, cfg.ns);
    // A q range keeps only tabled orders; an explicit --q must be tabled.
    if (!o.q_range.empty()) std::erase_if(cfg.qs, [](std::uint32_t q) { return !Field::is_supported(q); });
    if (cfg.qs.empty()) throw Error(ErrorCode::BadParameters, "no supported field order in " + o.q_range);
    for (auto q : cfg.qs)
        if (!Field::is_supported(q)) throw Error(ErrorCode::BadParameters, "q=" + std::to_string(q) + " is not supported");
    cfg.vertex_cap = o.vertex_cap;
    cfg.budget = o.budget;
    cfg.workers = o.workers;
    cfg.seed = o.seed;
    cfg.allow_theorem = o.allow_theorem;
    cfg.timings = o.timings;
    const auto report = run_verify(cfg);
    emit(o, o.format == "json" ? dump(to_json(report, cfg.timings)) : render_text(report));
    return report.exit_code();
}

int exit_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::BudgetExceeded:
        case ErrorCode::InstanceTooLarge: return kExitBudget;
        default: return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* env = std::getenv("RESOLVDIM_BUDGET")) {
        try {
            o.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: RESOLVDIM_BUDGET is not a number\n";
            return kExitUsage;
        }
    }

    CLI::App app{"Metric dimension and exchange property of non-zero component graphs"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool grid) {
        if (grid) {
            sub->add_option("--q", o.q, "Field order (single value)")->each([&](const std::string&) { o.q_given = true; });
            sub->add_option("--n", o.n, "Dimension (single value)")->each([&](const std::string&) { o.n_given = true; });
            sub->add_option("--q-range", o.q_range, "Field orders A..B (default 2..3)");
            sub->add_option("--n-range", o.n_range, "Dimensions A..B (default 1..3)");
        } else {
            sub->add_option("--q", o.q, "Field order")->required();
            sub->add_option("--n", o.n, "Dimension")->required();
        }
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "Write the report to PATH");
        sub->add_option("--budget", o.budget, "Maximum subsets examined (default $RESOLVDIM_BUDGET)");
        sub->add_option("--vertex-cap", o.vertex_cap, "Maximum vertex count")->check(CLI::PositiveNumber);
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Seed for randomized trials");
        sub->add_flag("--allow-theorem", o.allow_theorem, "Fall back to known verdicts past the budget");
    };

    auto* graph = app.add_subcommand("graph", "Build the graph, print order and size, export DOT / edge list");
    common(graph, false);
    graph->add_option("--dot", o.dot_path, "Write Graphviz DOT to PATH");
    graph->add_option("--edges", o.edges_path, "Write the edge list to PATH");

    auto* dim = app.add_subcommand("dim", "Metric dimension by formula and by exhaustive search");
    common(dim, false);

    auto* twins = app.add_subcommand("twins", "Twin classes");
    common(twins, false);

    auto* check = app.add_subcommand("check", "Check a vertex set for resolving / minimal");
    common(check, false);
    check->add_option("-W,--set", o.w, "Comma-separated vertices, e.g. e1,e1+e3,e3")->required();

    auto* exchange = app.add_subcommand("exchange", "Decide the exchange property");
    common(exchange, false);

    auto* intersect = app.add_subcommand("intersect", "Intersection graphs of set families");
    intersect->add_option("--family", o.family_path, "Set family file (default stdin)");
    intersect->add_option("--powerset", o.powerset, "Emit the non-empty subsets of {1..N}");
    intersect->add_option("--realize", o.realize_path, "Realize an edge-list graph as a set family");
    intersect->add_option("--out", o.out, "Write the result to PATH");

    auto* verify = app.add_subcommand("verify", "Run every check over a (q, n) grid");
    common(verify, true);
    verify->add_flag("--timings", o.timings, "Include per-cell timings (breaks byte-identical output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*graph) return cmd_graph(o);
        if (*dim) return cmd_dim(o);
        if (*twins) return cmd_twins(o);
        if (*check) return cmd_check(o);
        if (*exchange) return cmd_exchange(o);
        if (*intersect) return cmd_intersect(o);
        if (*verify) return cmd_verify(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << " (bounds " << e.lower_bound() << ".." << e.upper_bound()
                  << ")\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

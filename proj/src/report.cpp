#include "resolvdim/report.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <string>

#include "resolvdim/error.hpp"
#include "resolvdim/linalg.hpp"
#include "resolvdim/twins.hpp"

namespace resolvdim {

using nlohmann::json;

json to_json(const MetricGraph& g, const VertexSet& w) {
    json out = json::array();
    for (VertexId v : w) out.push_back(g.label(v));
    return out;
}

json to_json(const MetricGraph& g, const ResolvingReport& report) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["w"] = to_json(g, report.w);
    out["resolving"] = report.is_resolving;
    out["minimal"] = report.is_minimal;
    out["collision"] = report.colliding_pair
                           ? json::array({g.label(report.colliding_pair->first), g.label(report.colliding_pair->second)})
                           : json(nullptr);
    out["redundant"] = report.redundant_vertex ? json(g.label(*report.redundant_vertex)) : json(nullptr);
    return out;
}

json to_json(const MetricGraph& g, const ExchangeReport& report) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["holds"] = report.holds;
    out["method"] = to_string(report.method);
    out["sizes"] = report.minimal_set_sizes;
    if (const auto* v = std::get_if<ExchangeViolation>(&report.witness)) {
        out["witness"] = {{"kind", "violation"}, {"w1", to_json(g, v->w1)}, {"r", g.label(v->r)}, {"w2", to_json(g, v->w2)}};
    } else if (const auto* p = std::get_if<SizePair>(&report.witness)) {
        out["witness"] = {{"kind", "distinct-sizes"}, {"smaller", to_json(g, p->smaller)}, {"larger", to_json(g, p->larger)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Range parse_range(const std::string& text) {
    auto number = [&](const std::string& s) -> std::uint32_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
            throw Error(ErrorCode::BadParameters, "malformed range '" + text + "'");
        return static_cast<std::uint32_t>(std::stoul(s));
    };
    const auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.first = r.last = number(text);
    } else {
        r.first = number(text.substr(0, dots));
        r.last = number(text.substr(dots + 2));
    }
    if (r.first > r.last) throw Error(ErrorCode::BadParameters, "range '" + text + "' is reversed");
    return r;
}

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::NotApplicable: return "n/a";
    }
    return "unknown";
}

bool CellReport::failed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return true;
    return false;
}

bool CellReport::skipped() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Skipped) return true;
    return false;
}

bool VerificationReport::passed() const {
    for (const auto& c : cells)
        if (c.failed() || c.skipped()) return false;
    return true;
}

bool VerificationReport::any_skipped() const {
    for (const auto& c : cells)
        if (c.skipped()) return true;
    return false;
}

int VerificationReport::exit_code() const {
    for (const auto& c : cells)
        if (c.failed()) return 1;
    return any_skipped() ? 3 : 0;
}

namespace {

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

std::vector<Vector> vectors_of(const ComponentGraph& g, const VertexSet& w) {
    std::vector<Vector> out;
    for (VertexId v : w) out.push_back(g.space().decode(v));
    return out;
}

// Known exchange verdicts for Γ(F_q^n) at desk scale.
std::optional<bool> expected_exchange(std::uint32_t q, std::uint32_t n) {
    if (q == 2 && n == 2) return true;
    if (q == 2 && (n == 3 || n == 4)) return false;
    if (q == 3 && n == 2) return true;
    return std::nullopt;
}

CheckResult check_order_size(const ComponentGraph& g) {
    CheckResult c{"order_size", CheckStatus::NotApplicable, {}};
    const auto order = order_formula(g.q(), g.n());
    const auto size = size_formula(g.q(), g.n());
    const auto brute = g.size_bruteforce();
    c.detail = {{"order_formula", order}, {"order", g.order()}, {"size_formula", size}, {"size_bruteforce", brute}};
    c.status = verdict(order == g.order() && size == brute);
    return c;
}

CheckResult check_completeness(const ComponentGraph& g) {
    CheckResult c{"completeness", CheckStatus::NotApplicable, {}};
    const bool complete = g.is_complete();
    c.detail = {{"complete", complete}};
    c.status = verdict(complete == (g.n() == 1));
    return c;
}

CheckResult check_twins(const ComponentGraph& g) {
    CheckResult c{"twin_partitions", CheckStatus::NotApplicable, {}};
    const auto by_nbr = partition_by_neighborhood(g);
    const auto by_skel = partition_by_skeleton(g);
    c.detail = {{"neighborhood_classes", by_nbr.classes.size()}, {"skeleton_classes", by_skel.classes.size()}};
    c.status = verdict(by_nbr == by_skel);
    return c;
}

CheckResult check_dimension(const ComponentGraph& g, const RunConfig& cfg, std::optional<std::uint32_t>& dim) {
    CheckResult c{"metric_dimension", CheckStatus::NotApplicable, {}};
    const auto formula = metric_dimension_formula(g.q(), g.n());
    c.detail["formula"] = formula;
    try {
        const auto found = metric_dimension_search(g, SearchOptions{cfg.budget, cfg.workers});
        dim = found.dimension;
        c.detail["search"] = found.dimension;
        c.detail["witness"] = to_json(g, found.witness);
        c.detail["evaluated"] = found.evaluated;
        c.status = verdict(found.dimension == formula);
    } catch (const BudgetExceeded& e) {
        c.detail["lower_bound"] = e.lower_bound();
        c.detail["upper_bound"] = e.upper_bound();
        c.status = CheckStatus::Skipped;
    }
    return c;
}

CheckResult check_canonical(const ComponentGraph& g) {
    CheckResult c{"canonical_basis", CheckStatus::NotApplicable, {}};
    const auto w = canonical_basis(g);
    const bool resolving = is_resolving(g, w);
    const bool minimal = resolving && is_minimal(g, w);
    c.detail = {{"size", w.size()}, {"resolving", resolving}, {"minimal", minimal}};
    c.status = verdict(resolving && minimal && w.size() == metric_dimension_formula(g.q(), g.n()));
    return c;
}

CheckResult check_corollary(const ComponentGraph& g, const RunConfig& cfg, std::optional<std::uint32_t> dim) {
    CheckResult c{"corollary", CheckStatus::NotApplicable, {}};
    if (g.q() == 2 && g.n() == 3) {
        const VertexSet w = g.space().parse_set("e1,e1+e3,e3");
        const bool resolving = is_resolving(g, w);
        const bool minimum = resolving && dim && w.size() == *dim;
        const bool basis = contains_v_basis(g.space().field(), g.n(), vectors_of(g, w));
        c.detail = {{"counterexample", to_json(g, w)}, {"minimum_resolving", minimum}, {"contains_v_basis", basis}};
        c.status = verdict(minimum && !basis);
        return c;
    }
    if (g.q() < 3) {
        c.status = CheckStatus::NotApplicable;
        return c;
    }
    if (!dim) {
        c.status = CheckStatus::Skipped;
        return c;
    }
    try {
        const auto sets = resolving_sets_of_size(g, *dim, SearchOptions{cfg.budget, cfg.workers});
        std::size_t without_basis = 0;
        for (const auto& w : sets)
            if (!contains_v_basis(g.space().field(), g.n(), vectors_of(g, w))) ++without_basis;
        c.detail = {{"minimum_sets", sets.size()}, {"without_v_basis", without_basis}};
        c.status = verdict(!sets.empty() && without_basis == 0);
    } catch (const BudgetExceeded&) {
        c.status = CheckStatus::Skipped;
    }
    return c;
}

CheckResult check_exchange(const ComponentGraph& g, const RunConfig& cfg) {
    CheckResult c{"exchange", CheckStatus::NotApplicable, {}};
    const auto expected = expected_exchange(g.q(), g.n());
    if (!expected) {
        c.status = CheckStatus::NotApplicable;
        return c;
    }
    try {
        const auto report = has_exchange_property(g, ExchangeOptions{SearchOptions{cfg.budget, cfg.workers}, false});
        c.detail = to_json(g, report);
        c.detail.erase("schema_version");
        bool ok = report.holds == *expected;
        if (g.q() == 2 && g.n() >= 3) {
            const auto w = non_exchange_witness(g.n());
            const bool minimal = is_resolving(g, w) && is_minimal(g, w);
            const bool larger = w.size() > metric_dimension_formula(2, g.n());
            c.detail["explicit_witness"] = {{"set", to_json(g, w)}, {"size", w.size()}, {"minimal", minimal}};
            ok = ok && minimal && larger;
        }
        c.status = verdict(ok);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::InstanceTooLarge) throw;
        c.status = CheckStatus::Skipped;
    }
    return c;
}

CheckResult check_twin_swap(const ComponentGraph& g, std::uint64_t seed) {
    CheckResult c{"twin_swap", CheckStatus::NotApplicable, {}};
    const auto twins = partition_by_neighborhood(g);
    const VertexSet base = canonical_basis(g);
    if (!is_resolving(g, base) || twins.lower_bound() == 0) {
        c.status = CheckStatus::NotApplicable;
        return c;
    }
    std::mt19937_64 rng(seed ^ (std::uint64_t(g.q()) << 32) ^ g.n());
    constexpr int kTrials = 50;
    int preserved = 0;
    VertexSet w = base;
    for (int t = 0; t < kTrials; ++t) {
        // Pick a member with an outside twin, then one of those twins.
        std::vector<std::pair<VertexId, VertexId>> moves;
        for (VertexId u : w)
            for (VertexId v : twins.classes[twins.class_index(u)].members)
                if (std::find(w.begin(), w.end(), v) == w.end()) moves.emplace_back(u, v);
        if (moves.empty()) break;
        const auto [u, v] = moves[rng() % moves.size()];
        w = twin_swap(twins, w, u, v);
        if (is_resolving(g, w)) ++preserved;
    }
    c.detail = {{"trials", kTrials}, {"preserved", preserved}};
    c.status = verdict(preserved == kTrials);
    return c;
}

}  // namespace

VerificationReport run_verify(const RunConfig& cfg) {
    VerificationReport report;
    for (auto q : cfg.qs)
        for (auto n : cfg.ns) {
            const auto start = std::chrono::steady_clock::now();
            CellReport cell{q, n, {}, 0.0};
            try {
                const ComponentGraph g(q, n, cfg.vertex_cap);
                std::optional<std::uint32_t> dim;
                cell.checks.push_back(check_order_size(g));
                cell.checks.push_back(check_completeness(g));
                cell.checks.push_back(check_twins(g));
                cell.checks.push_back(check_dimension(g, cfg, dim));
                cell.checks.push_back(check_canonical(g));
                cell.checks.push_back(check_corollary(g, cfg, dim));
                cell.checks.push_back(check_exchange(g, cfg));
                cell.checks.push_back(check_twin_swap(g, cfg.seed));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::InstanceTooLarge) throw;
                cell.checks.push_back({"instance", CheckStatus::Skipped, {{"reason", e.what()}}});
            }
            cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            report.cells.push_back(std::move(cell));
        }
    return report;
}

json to_json(const VerificationReport& report, bool timings) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
        json checks = json::object();
        for (const auto& c : cell.checks) {
            json entry = c.detail.is_object() ? c.detail : json::object();
            entry["status"] = to_string(c.status);
            checks[c.name] = entry;
        }
        json j = {{"q", cell.q},
                  {"n", cell.n},
                  {"status", cell.failed() ? "fail" : cell.skipped() ? "skipped" : "pass"},
                  {"checks", checks}};
        if (timings) j["seconds"] = cell.seconds;
        cells.push_back(j);
    }
    return {{"schema_version", kSchemaVersion}, {"passed", report.passed()}, {"cells", cells}};
}

std::string render_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& cell : report.cells) {
        out << "q=" << cell.q << " n=" << cell.n << ":";
        for (const auto& c : cell.checks) out << ' ' << c.name << '=' << to_string(c.status);
        out << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace resolvdim

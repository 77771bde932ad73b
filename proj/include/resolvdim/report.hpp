#pragma once

// JSON rendering of reports. Keys are emitted in sorted order, so a parse
// and re-dump reproduces the same bytes.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "resolvdim/exchange.hpp"
#include "resolvdim/graph.hpp"
#include "resolvdim/resolving.hpp"

namespace resolvdim {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const MetricGraph& g, const VertexSet& w);
nlohmann::json to_json(const MetricGraph& g, const ResolvingReport& report);
nlohmann::json to_json(const MetricGraph& g, const ExchangeReport& report);

struct Range {
    std::uint32_t first = 0;
    std::uint32_t last = 0;
};

// Parses "A..B" (or a single value "A"). Throws BadParameters for a
// reversed or malformed range.
Range parse_range(const std::string& text);

struct RunConfig {
    std::vector<std::uint32_t> qs{2, 3};
    std::vector<std::uint32_t> ns{1, 2, 3};
    std::uint64_t vertex_cap = kDefaultVertexCap;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    bool allow_theorem = false;
    bool timings = false;
};

enum class CheckStatus { Pass, Fail, Skipped, NotApplicable };

const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    nlohmann::json detail;
};

struct CellReport {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool failed() const;
    bool skipped() const;
};

struct VerificationReport {
    std::vector<CellReport> cells;

    bool passed() const;
    bool any_skipped() const;
    // 0 all pass, 1 failure, 3 budget exhausted somewhere.
    int exit_code() const;
};

// Runs every closed-form statement against its brute-force counterpart on
// each (q, n) of the grid, in (q, n) order.
VerificationReport run_verify(const RunConfig& cfg);

nlohmann::json to_json(const VerificationReport& report, bool timings = false);
std::string render_text(const VerificationReport& report);

}  // namespace resolvdim

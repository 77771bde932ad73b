#include <gtest/gtest.h>

#include "resolvdim/error.hpp"
#include "resolvdim/report.hpp"

using namespace resolvdim;
using nlohmann::json;

TEST(Range, Parse) {
    const auto r = parse_range("2..5");
    EXPECT_EQ(r.first, 2u);
    EXPECT_EQ(r.last, 5u);
    const auto one = parse_range("7");
    EXPECT_EQ(one.first, 7u);
    EXPECT_EQ(one.last, 7u);
    for (const char* bad : {"5..2", "", "..", "a..b", "1..", "-1..2", "1...3"}) {
        try {
            parse_range(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::BadParameters) << bad;
        }
    }
}

TEST(Json, ResolvingReport) {
    const ComponentGraph g(2, 3);
    const auto j = to_json(g, resolving_report(g, g.space().parse_set("e1,e2")));
    EXPECT_EQ(j.dump(), R"({"collision":["e1+e2","e1+e2+e3"],"minimal":false,"redundant":null,"resolving":false,)"
                        R"("schema_version":1,"w":["e1","e2"]})");
}

TEST(Json, ExchangeReport) {
    const ComponentGraph g(2, 3);
    const auto j = to_json(g, has_exchange_property(g));
    EXPECT_FALSE(j["holds"].get<bool>());
    EXPECT_EQ(j["method"], "definition-check");
    EXPECT_EQ(j["witness"]["kind"], "violation");
    EXPECT_EQ(j["witness"]["r"], "e2");
    EXPECT_EQ(j["witness"]["w1"], json({"e1", "e2", "e1+e2"}));
    const auto held = to_json(ComponentGraph(2, 2), has_exchange_property(ComponentGraph(2, 2)));
    EXPECT_TRUE(held["witness"].is_null());
}

TEST(Json, RoundTripIsByteEqual) {
    RunConfig cfg;
    cfg.qs = {2, 3};
    cfg.ns = {1, 2, 3};
    const std::string text = to_json(run_verify(cfg)).dump(2);
    EXPECT_EQ(json::parse(text).dump(2), text);
}

TEST(Verify, DeterministicAcrossRunsAndWorkers) {
    RunConfig a;
    a.qs = {2, 3, 4};
    a.ns = {1, 2};
    a.seed = 9;
    RunConfig b = a;
    b.workers = 4;
    const auto first = to_json(run_verify(a)).dump();
    EXPECT_EQ(to_json(run_verify(a)).dump(), first);
    EXPECT_EQ(to_json(run_verify(b)).dump(), first);
}

// Open neighbourhoods of e1 and e2 in Γ(F_2^2) coincide although their
// skeletons differ, so the two partitions disagree on that one instance.
TEST(Verify, DefaultGrid) {
    const auto report = run_verify(RunConfig{});
    ASSERT_EQ(report.cells.size(), 6u);
    for (const auto& cell : report.cells) {
        for (const auto& c : cell.checks) {
            const bool expect_fail = cell.q == 2 && cell.n == 2 && c.name == "twin_partitions";
            EXPECT_EQ(c.status == CheckStatus::Fail, expect_fail) << cell.q << "," << cell.n << " " << c.name;
            EXPECT_NE(c.status, CheckStatus::Skipped);
        }
    }
    EXPECT_EQ(report.exit_code(), 1);
    const auto text = render_text(report);
    EXPECT_NE(text.find("q=2 n=2: order_size=pass completeness=pass twin_partitions=fail"), std::string::npos);
    EXPECT_EQ(text.substr(text.size() - 5), "FAIL\n");
}

TEST(Verify, LargerCellsPass) {
    RunConfig cfg;
    cfg.qs = {2, 3, 4};
    cfg.ns = {3, 4};
    cfg.vertex_cap = 100;
    cfg.budget = 200'000;
    cfg.workers = 4;
    const auto report = run_verify(cfg);
    for (const auto& cell : report.cells)
        for (const auto& c : cell.checks) EXPECT_NE(c.status, CheckStatus::Fail) << cell.q << "," << cell.n << " " << c.name;
    // (4,4) exceeds the cap and the (3,4), (4,3) searches exceed the budget.
    EXPECT_TRUE(report.any_skipped());
    EXPECT_EQ(report.exit_code(), 3);
}

TEST(Verify, TimingsOnlyOnRequest) {
    RunConfig cfg;
    cfg.qs = {2};
    cfg.ns = {1};
    const auto report = run_verify(cfg);
    EXPECT_FALSE(to_json(report)["cells"][0].contains("seconds"));
    EXPECT_TRUE(to_json(report, true)["cells"][0].contains("seconds"));
    EXPECT_EQ(report.exit_code(), 0);
}

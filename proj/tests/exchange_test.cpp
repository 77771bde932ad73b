#include <gtest/gtest.h>

#include "resolvdim/error.hpp"
#include "resolvdim/exchange.hpp"

using namespace resolvdim;

TEST(Exchange, HoldsForTwoTwo) {
    const auto r = has_exchange_property(ComponentGraph(2, 2));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.method, ExchangeMethod::DefinitionCheck);
    EXPECT_TRUE(std::holds_alternative<std::monostate>(r.witness));
    EXPECT_EQ(r.minimal_set_sizes, (std::vector<std::uint32_t>{1, 1}));
}

// Violation frozen from an independent enumeration.
TEST(Exchange, FailsForTwoThree) {
    const auto r = has_exchange_property(ComponentGraph(2, 3));
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.method, ExchangeMethod::DefinitionCheck);
    ASSERT_TRUE(std::holds_alternative<ExchangeViolation>(r.witness));
    const auto& v = std::get<ExchangeViolation>(r.witness);
    EXPECT_EQ(v.w1, (VertexSet{1, 2, 3}));
    EXPECT_EQ(v.r, 2u);
    EXPECT_EQ(v.w2, (VertexSet{1, 3, 6, 7}));
    EXPECT_EQ(r.minimal_set_sizes.size(), 17u);
}

TEST(Exchange, FailsForTwoFour) {
    const auto r = has_exchange_property(ComponentGraph(2, 4));
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.minimal_set_sizes.size(), 729u);
}

TEST(Exchange, HoldsForThreeTwo) {
    const auto r = has_exchange_property(ComponentGraph(3, 2));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.minimal_set_sizes, std::vector<std::uint32_t>(16, 5));
}

TEST(Exchange, SameVerdictForAnyWorkerCount) {
    ExchangeOptions one;
    one.search.workers = 1;
    ExchangeOptions many;
    many.search.workers = 6;
    const auto a = has_exchange_property(ComponentGraph(2, 4), one);
    const auto b = has_exchange_property(ComponentGraph(2, 4), many);
    EXPECT_EQ(a.holds, b.holds);
    ASSERT_TRUE(std::holds_alternative<ExchangeViolation>(a.witness));
    ASSERT_TRUE(std::holds_alternative<ExchangeViolation>(b.witness));
    EXPECT_EQ(std::get<ExchangeViolation>(a.witness).w1, std::get<ExchangeViolation>(b.witness).w1);
    EXPECT_EQ(std::get<ExchangeViolation>(a.witness).r, std::get<ExchangeViolation>(b.witness).r);
    EXPECT_EQ(std::get<ExchangeViolation>(a.witness).w2, std::get<ExchangeViolation>(b.witness).w2);
}

TEST(Exchange, Shortcut) {
    EXPECT_FALSE(distinct_sizes_shortcut(ComponentGraph(2, 2)));
    EXPECT_FALSE(distinct_sizes_shortcut(ComponentGraph(3, 2)));
    const auto p = distinct_sizes_shortcut(ComponentGraph(2, 3));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->smaller, (VertexSet{1, 2, 3}));
    EXPECT_EQ(p->smaller.size(), 3u);
    EXPECT_EQ(p->larger.size(), 4u);
}

TEST(Exchange, VnMinusOne) {
    EXPECT_EQ(vn_minus_one_set(3), (VertexSet{1, 4, 5}));
    EXPECT_EQ(vn_minus_one_set(4), (VertexSet{1, 2, 3, 8, 9, 10, 11}));
    EXPECT_EQ(vn_minus_one_set(5).size(), 15u);
    EXPECT_EQ(vn_minus_one_set(2, 4), vn_minus_one_set(4));
    for (std::uint32_t n : {4u, 5u, 6u}) {
        const ComponentGraph g(2, n);
        const auto w = non_exchange_witness(n);
        EXPECT_EQ(w, vn_minus_one_set(n));
        EXPECT_TRUE(is_resolving(g, w)) << n;
        EXPECT_TRUE(is_minimal(g, w)) << n;
        EXPECT_GT(w.size(), metric_dimension_formula(2, n));
    }
}

TEST(Exchange, WitnessForThree) {
    const ComponentGraph g(2, 3);
    const auto w = non_exchange_witness(3);
    EXPECT_EQ(g.space().format_set(w), "e1,e1+e2,e2+e3,e1+e2+e3");
    EXPECT_TRUE(is_minimal(g, w));
    EXPECT_EQ(w.size(), 4u);
}

TEST(Exchange, BadParameters) {
    for (std::uint32_t n : {0u, 1u, 2u}) {
        try {
            vn_minus_one_set(n);
            FAIL() << n;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::BadParameters);
        }
    }
    EXPECT_THROW(vn_minus_one_set(3, 3), Error);
    EXPECT_THROW(non_exchange_witness(2), Error);
}

TEST(Exchange, TheoremFallbackOnlyWhenAllowed) {
    ExchangeOptions strict;
    strict.search.budget = 10;
    EXPECT_THROW(has_exchange_property(ComponentGraph(3, 3), strict), BudgetExceeded);

    ExchangeOptions lenient = strict;
    lenient.allow_theorem = true;
    const auto holds = has_exchange_property(ComponentGraph(3, 3), lenient);
    EXPECT_TRUE(holds.holds);
    EXPECT_EQ(holds.method, ExchangeMethod::TheoremCitation);

    const auto fails = has_exchange_property(ComponentGraph(2, 5), lenient);
    EXPECT_FALSE(fails.holds);
    EXPECT_EQ(fails.method, ExchangeMethod::TheoremCitation);
    EXPECT_STREQ(to_string(fails.method), "theorem-citation");
}

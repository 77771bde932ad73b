#include <gtest/gtest.h>

#include <map>

#include "resolvdim/error.hpp"
#include "resolvdim/vectorspace.hpp"

using namespace resolvdim;

namespace {

Vector vec(std::initializer_list<std::uint32_t> cs) {
    Vector v;
    for (auto c : cs) v.coeffs.push_back(FieldElement{c});
    return v;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST(VectorSpace, EncodeDecodeExamples) {
    const VectorSpace s23(2, 3);
    EXPECT_EQ(s23.encode(vec({1, 0, 0})), 1u);
    const VectorSpace s32(3, 2);
    EXPECT_EQ(s32.encode(vec({2, 1})), 5u);
    EXPECT_EQ(s32.decode(5), vec({2, 1}));
}

TEST(VectorSpace, ZeroAndOutOfRange) {
    const VectorSpace s(3, 2);
    for (VertexId bad : {0u, 9u, 100u}) {
        try {
            s.decode(bad);
            FAIL() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
        }
    }
    EXPECT_THROW(s.encode(vec({0, 0})), Error);
    EXPECT_THROW(s.encode(vec({3, 0})), Error);
    EXPECT_THROW(s.encode(vec({1, 0, 0})), Error);
}

TEST(VectorSpace, Skeletons) {
    EXPECT_EQ(skeleton(vec({1, 0, 1})).mask, 0b101u);
    EXPECT_EQ(skeleton(vec({2, 1})).mask, 0b11u);
    EXPECT_EQ(skeleton(vec({2, 0})), skeleton(vec({1, 0})));
    EXPECT_EQ(skeleton(vec({2, 0})).mask, 0b01u);
    EXPECT_EQ(skeleton(vec({1, 1, 0})).length(), 2);
}

TEST(VectorSpace, EnumerationCounts) {
    EXPECT_EQ(VectorSpace(2, 2).enumerate_vertices(), (std::vector<VertexId>{1, 2, 3}));
    EXPECT_EQ(VectorSpace(3, 2).enumerate_vertices().size(), 8u);
    EXPECT_EQ(VectorSpace(2, 1).enumerate_vertices(), (std::vector<VertexId>{1}));
}

TEST(VectorSpace, VertexCap) {
    try {
        VectorSpace s(2, 20);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
    }
    EXPECT_NO_THROW(VectorSpace(2, 20, 1u << 21));
    EXPECT_NO_THROW(VectorSpace(2, 16));  // 65535 <= 2^16
    EXPECT_THROW(VectorSpace(2, 0), Error);
    EXPECT_THROW(VectorSpace(6, 2), Error);
}

TEST(VectorSpace, RoundTripFullRange) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
        for (std::uint32_t n = 1; n <= 4; ++n) {
            const VectorSpace s(q, n);
            for (VertexId id : s.enumerate_vertices()) {
                const Vector v = s.decode(id);
                ASSERT_FALSE(v.is_zero());
                ASSERT_EQ(s.encode(v), id);
                ASSERT_EQ(s.skeleton_of(id), skeleton(v));
                ASSERT_EQ(s.parse(s.format(id)), id) << s.format(id);
            }
        }
}

// (q-1)^|S| vectors per skeleton S, and the class sizes tile q^n - 1.
TEST(VectorSpace, SkeletonClassSizes) {
    for (std::uint32_t q : {2u, 3u, 4u})
        for (std::uint32_t n = 1; n <= 4; ++n) {
            const VectorSpace s(q, n);
            std::map<std::uint32_t, std::uint64_t> count;
            for (VertexId id : s.enumerate_vertices()) ++count[s.skeleton_of(id).mask];
            ASSERT_EQ(count.size(), (1u << n) - 1);
            for (auto [mask, c] : count) {
                std::uint64_t expect = 1;
                for (int i = 0; i < __builtin_popcount(mask); ++i) expect *= q - 1;
                EXPECT_EQ(c, expect);
            }
            std::uint64_t tiled = 0;
            for (std::uint32_t k = 1; k <= n; ++k) {
                std::uint64_t pw = 1;
                for (std::uint32_t i = 0; i < k; ++i) pw *= q - 1;
                tiled += choose(n, k) * pw;
            }
            EXPECT_EQ(tiled, s.vertex_count());
        }
}

TEST(VectorSpace, TextForm) {
    const VectorSpace s3(3, 2);
    EXPECT_EQ(s3.format(s3.encode(vec({2, 1}))), "2e1+e2");
    const VectorSpace s2(2, 3);
    EXPECT_EQ(s2.format(s2.encode(vec({1, 1, 0}))), "e1+e2");
    EXPECT_EQ(s2.parse("e1+e3"), 5u);
    EXPECT_EQ(s2.parse(" e1 + e3 "), 5u);
    EXPECT_EQ(s2.parse_set("e1,e1+e3,e3"), (VertexSet{1, 5, 4}));
    EXPECT_EQ(s2.format_set({1, 5, 4}), "e1,e1+e3,e3");
}

TEST(VectorSpace, ParseErrorsCarryPosition) {
    const VectorSpace s(3, 2);
    auto position_of = [&](const std::string& text) -> std::size_t {
        try {
            s.parse_set(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position_of("e3"), 1u);       // index past n
    EXPECT_EQ(position_of("3e1"), 0u);      // coefficient outside GF(3)
    EXPECT_EQ(position_of("e1,x"), 3u);     // second item
    EXPECT_EQ(position_of("e2+e1"), 4u);    // indices must ascend
    EXPECT_EQ(position_of("e1+"), 3u);
    EXPECT_EQ(position_of(""), 0u);
    EXPECT_EQ(position_of("e1,,e2"), 3u);
}

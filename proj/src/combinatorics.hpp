#pragma once

// Internal: binomials, lexicographic k-subset ranking and the resolving
// check used by the exhaustive searches.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "resolvdim/metric.hpp"
#include "resolvdim/vectorspace.hpp"

namespace resolvdim::detail {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Writes the rank-th k-subset of {0..n-1} in lexicographic order.
void unrank_subset(std::uint32_t n, std::uint32_t k, std::uint64_t rank, std::span<std::uint32_t> out);

// Advances to the lexicographic successor; false after the last subset.
bool next_subset(std::uint32_t n, std::span<std::uint32_t> c);

// Reusable buffers for collision detection among representations.
class CollisionFinder {
public:
    explicit CollisionFinder(const DistanceTable& table);

    // Members are 0-based vertex indices. With least = false, returns the
    // first collision found; otherwise the lexicographically least pair
    // (as 1-based ids).
    std::optional<std::pair<VertexId, VertexId>> find(std::span<const std::uint32_t> members, bool least);

    bool resolves(std::span<const std::uint32_t> members) { return !find(members, false).has_value(); }

private:
    const DistanceTable& table_;
    unsigned bits_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> order_;
};

// Bits needed per coordinate for distances up to max_distance.
unsigned bits_for(std::uint32_t max_distance);

// Lexicographically least collision in the packed representations given
// column-wise: column i holds d(v, w_i) for v = 1..n at [i * n + v - 1].
std::optional<std::pair<VertexId, VertexId>> least_collision(std::uint32_t n, std::size_t k,
                                                             std::span<const std::uint8_t> columns,
                                                             bool least = true);

// Resolving flag per subset mask of size <= cap, and the minimal ones.
struct SubsetTable {
    std::uint32_t n = 0;
    std::uint32_t cap = 0;
    std::vector<std::uint8_t> resolving;   // index = mask, valid for popcount <= cap
    std::vector<std::uint32_t> minimal;    // masks, lexicographic order of vertex lists

    bool is_minimal(std::uint32_t mask) const;
};

// Requires order <= 24. Throws BudgetExceeded if sum_{k<=cap} C(N,k) > budget.
SubsetTable build_subset_table(const MetricGraph& g, std::uint32_t cap, std::uint64_t budget, unsigned workers);

VertexSet mask_to_set(std::uint32_t mask);

}  // namespace resolvdim::detail

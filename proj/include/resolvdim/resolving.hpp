#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resolvdim/graph.hpp"
#include "resolvdim/metric.hpp"

namespace resolvdim {

// Distances from v to the ordered members of W.
struct Representation {
    std::vector<std::uint8_t> coords;

    friend auto operator<=>(const Representation&, const Representation&) = default;
};

struct ResolvingReport {
    VertexSet w;
    bool is_resolving = false;
    bool is_minimal = false;
    // Lexicographically least (u, v), u < v, with r(u|W) = r(v|W).
    std::optional<std::pair<VertexId, VertexId>> colliding_pair;
    // Smallest w with W \ {w} still resolving.
    std::optional<VertexId> redundant_vertex;
};

// Throws EmptySet for W = ∅, OutOfRange for invalid ids.
Representation representation(const MetricGraph& g, VertexId v, const VertexSet& w);

// W = ∅ resolves only the one-vertex graph.
bool is_resolving(const MetricGraph& g, const VertexSet& w);
ResolvingReport resolving_report(const MetricGraph& g, const VertexSet& w);
// Throws NotResolving if W does not resolve. Removing single vertices is
// enough since supersets of resolving sets resolve.
bool is_minimal(const MetricGraph& g, const VertexSet& w);

// Closed form: (2,1) -> 0, (2,2) -> 1, (2,n>=3) -> n, q >= 3 ->
// sum_k C(n,k)((q-1)^k - 1).
std::uint64_t metric_dimension_formula(std::uint32_t q, std::uint32_t n);

// The resolving sets built in the closed-form argument: {e_1} for (2,2),
// the unit vectors for q = 2, n >= 3, and every skeleton class minus its
// largest id for q >= 3.
VertexSet canonical_basis(const ComponentGraph& g);

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
    // Maximum subsets examined, counted in serial lexicographic order.
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct SearchResult {
    std::uint32_t dimension = 0;
    VertexSet witness;  // lexicographically least minimum resolving set
    std::uint64_t start_size = 0;  // twin lower bound the search began at
    std::uint64_t evaluated = 0;
};

// Exhaustive search over k-subsets in lexicographic order, k increasing
// from the twin lower bound. Throws BudgetExceeded.
SearchResult metric_dimension_search(const MetricGraph& g, const SearchOptions& opts = {});

// Every resolving k-subset, lexicographically. At k = metric dimension
// these are exactly the minimum resolving sets. Throws BudgetExceeded if
// C(N,k) exceeds the budget.
std::vector<VertexSet> resolving_sets_of_size(const MetricGraph& g, std::uint32_t k,
                                              const SearchOptions& opts = {});

// All minimal resolving sets of size <= size_cap, sorted lexicographically.
// Requires order <= 24; throws BudgetExceeded if sum_{k<=cap} C(N,k)
// exceeds the budget.
std::vector<VertexSet> enumerate_minimal_resolving_sets(const MetricGraph& g, std::uint32_t size_cap,
                                                        const SearchOptions& opts = {});

}  // namespace resolvdim

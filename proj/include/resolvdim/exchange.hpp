#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "resolvdim/graph.hpp"
#include "resolvdim/resolving.hpp"

namespace resolvdim {

enum class ExchangeMethod { DefinitionCheck, DistinctSizesShortcut, TheoremCitation };

const char* to_string(ExchangeMethod m) noexcept;

// Minimal W1, W2 and r ∈ W1 such that no s ∈ W2 makes (W2 \ {s}) ∪ {r}
// minimal resolving.
struct ExchangeViolation {
    VertexSet w1;
    VertexId r = 0;
    VertexSet w2;
};

// Two minimal resolving sets of different sizes, smaller first.
struct SizePair {
    VertexSet smaller;
    VertexSet larger;
};

struct ExchangeReport {
    bool holds = false;
    ExchangeMethod method = ExchangeMethod::DefinitionCheck;
    std::variant<std::monostate, ExchangeViolation, SizePair> witness;
    std::vector<std::uint32_t> minimal_set_sizes;  // ascending, with repeats
};

struct ExchangeOptions {
    SearchOptions search;
    bool allow_theorem = false;
};

// Decides the exchange property by enumerating every minimal resolving set
// and testing the definition over all ordered pairs. Throws BudgetExceeded.
ExchangeReport has_exchange_property(const MetricGraph& g, const ExchangeOptions& opts = {});

// As above; with allow_theorem set, a budget overflow falls back to the
// known verdicts for Γ(F_q^n) (holds for q >= 3, fails for q = 2, n >= 3).
ExchangeReport has_exchange_property(const ComponentGraph& g, const ExchangeOptions& opts = {});

// Two minimal resolving sets of different sizes if any exist. A hit proves
// the exchange property fails; a miss proves nothing.
std::optional<SizePair> distinct_sizes_shortcut(const MetricGraph& g, const SearchOptions& opts = {});

// q = 2 only: the vertices whose skeleton omits e_{n-1}, as ids of
// Γ(F_2^n). Throws BadParameters for n < 3.
VertexSet vn_minus_one_set(std::uint32_t n);
// Throws BadParameters unless q = 2.
VertexSet vn_minus_one_set(std::uint32_t q, std::uint32_t n);

// q = 2, n >= 3: a minimal resolving set larger than the metric dimension.
// {e1, e1+e2, e2+e3, e1+e2+e3} for n = 3, V_{n-1} otherwise.
VertexSet non_exchange_witness(std::uint32_t n);

}  // namespace resolvdim

#include "resolvdim/exchange.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "combinatorics.hpp"
#include "resolvdim/error.hpp"

namespace resolvdim {
namespace {

void require_minimal(const MetricGraph& g, const VertexSet& w) {
    if (!is_resolving(g, w) || !is_minimal(g, w))
        throw std::logic_error("exchange witness failed re-validation");
}

std::vector<std::uint32_t> sizes_of(const detail::SubsetTable& t) {
    std::vector<std::uint32_t> sizes;
    for (auto m : t.minimal) sizes.push_back(static_cast<std::uint32_t>(std::popcount(m)));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::optional<SizePair> size_pair(const detail::SubsetTable& t) {
    // t.minimal is lexicographic, so the first hit of a size is its least set.
    std::optional<std::uint32_t> smallest_mask, larger_mask;
    int smallest = 64;
    for (auto m : t.minimal) smallest = std::min(smallest, std::popcount(m));
    int next = 64;
    for (auto m : t.minimal)
        if (std::popcount(m) > smallest) next = std::min(next, std::popcount(m));
    if (next == 64) return std::nullopt;
    for (auto m : t.minimal) {
        if (!smallest_mask && std::popcount(m) == smallest) smallest_mask = m;
        if (!larger_mask && std::popcount(m) == next) larger_mask = m;
    }
    return SizePair{detail::mask_to_set(*smallest_mask), detail::mask_to_set(*larger_mask)};
}

// First (i, j, r) in lexicographic order such that no s ∈ W_j makes
// (W_j \ {s}) ∪ {r} minimal resolving, for r ∈ W_i.
std::optional<ExchangeViolation> find_violation(const detail::SubsetTable& t, unsigned workers) {
    const auto& sets = t.minimal;
    const std::size_t count = sets.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{SIZE_MAX};
    std::vector<std::optional<ExchangeViolation>> found(count);

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i > best.load()) return;
            const std::uint32_t w1 = sets[i];
            for (std::size_t j = 0; j < count && !found[i]; ++j) {
                const std::uint32_t w2 = sets[j];
                for (std::uint32_t rest = w1; rest && !found[i]; rest &= rest - 1) {
                    const std::uint32_t r = rest & (~rest + 1);
                    if (w2 & r) continue;  // s = r leaves W_j unchanged
                    bool exchanged = false;
                    for (std::uint32_t cand = w2; cand && !exchanged; cand &= cand - 1) {
                        const std::uint32_t s = cand & (~cand + 1);
                        exchanged = t.is_minimal((w2 & ~s) | r);
                    }
                    if (!exchanged)
                        found[i] = ExchangeViolation{detail::mask_to_set(w1),
                                                     static_cast<VertexId>(std::countr_zero(r) + 1),
                                                     detail::mask_to_set(w2)};
                }
            }
            if (found[i]) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {}
            }
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (best.load() == SIZE_MAX) return std::nullopt;
    return found[best.load()];
}

}  // namespace

const char* to_string(ExchangeMethod m) noexcept {
    switch (m) {
        case ExchangeMethod::DefinitionCheck: return "definition-check";
        case ExchangeMethod::DistinctSizesShortcut: return "distinct-sizes-shortcut";
        case ExchangeMethod::TheoremCitation: return "theorem-citation";
    }
    return "unknown";
}

ExchangeReport has_exchange_property(const MetricGraph& g, const ExchangeOptions& opts) {
    const auto table = detail::build_subset_table(g, g.order(), opts.search.budget, opts.search.workers);
    ExchangeReport report;
    report.method = ExchangeMethod::DefinitionCheck;
    report.minimal_set_sizes = sizes_of(table);
    if (auto v = find_violation(table, opts.search.workers)) {
        require_minimal(g, v->w1);
        require_minimal(g, v->w2);
        report.holds = false;
        report.witness = std::move(*v);
    } else {
        report.holds = true;
    }
    return report;
}

ExchangeReport has_exchange_property(const ComponentGraph& g, const ExchangeOptions& opts) {
    try {
        return has_exchange_property(static_cast<const MetricGraph&>(g), opts);
    } catch (const Error& e) {
        const bool over = e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::InstanceTooLarge;
        if (!opts.allow_theorem || !over) throw;
    }
    ExchangeReport report;
    report.method = ExchangeMethod::TheoremCitation;
    if (g.q() >= 3 || g.n() <= 2) {
        report.holds = true;
        return report;
    }
    SizePair pair{canonical_basis(g), non_exchange_witness(g.n())};
    require_minimal(g, pair.smaller);
    require_minimal(g, pair.larger);
    report.holds = false;
    report.minimal_set_sizes = {static_cast<std::uint32_t>(pair.smaller.size()),
                                static_cast<std::uint32_t>(pair.larger.size())};
    report.witness = std::move(pair);
    return report;
}

std::optional<SizePair> distinct_sizes_shortcut(const MetricGraph& g, const SearchOptions& opts) {
    const auto table = detail::build_subset_table(g, g.order(), opts.budget, opts.workers);
    auto pair = size_pair(table);
    if (pair) {
        require_minimal(g, pair->smaller);
        require_minimal(g, pair->larger);
    }
    return pair;
}

VertexSet vn_minus_one_set(std::uint32_t n) {
    if (n < 3 || n > 24) throw Error(ErrorCode::BadParameters, "V_{n-1} needs q = 2 and 3 <= n <= 24");
    // For q = 2 the vertex id is the skeleton mask itself.
    const std::uint32_t excluded = 1u << (n - 2);
    VertexSet out;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (!(m & excluded)) out.push_back(m);
    return out;
}

VertexSet vn_minus_one_set(std::uint32_t q, std::uint32_t n) {
    if (q != 2) throw Error(ErrorCode::BadParameters, "V_{n-1} is defined for q = 2 only");
    return vn_minus_one_set(n);
}

VertexSet non_exchange_witness(std::uint32_t n) {
    if (n < 3) throw Error(ErrorCode::BadParameters, "no exchange counterexample for n < 3");
    if (n == 3) return {0b001, 0b011, 0b110, 0b111};  // e1, e1+e2, e2+e3, e1+e2+e3
    return vn_minus_one_set(n);
}

}  // namespace resolvdim

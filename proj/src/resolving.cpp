#include "resolvdim/resolving.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <map>
#include <string>
#include <thread>

#include "combinatorics.hpp"
#include "resolvdim/error.hpp"
#include "resolvdim/twins.hpp"

namespace resolvdim {
namespace {

void validate(const MetricGraph& g, const VertexSet& w) {
    for (VertexId v : w)
        if (!g.contains(v))
            throw Error(ErrorCode::OutOfRange, "vertex id " + std::to_string(v) + " outside [1, " +
                                                   std::to_string(g.order()) + "]");
    VertexSet sorted = w;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadParameters, "W lists a vertex twice");
}

std::optional<std::pair<VertexId, VertexId>> collision(const MetricGraph& g, const VertexSet& w, bool least) {
    const std::uint32_t n = g.order();
    std::vector<std::uint8_t> columns(std::size_t(n) * w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (VertexId v = 1; v <= n; ++v)
            columns[i * n + (v - 1)] = static_cast<std::uint8_t>(std::min<std::uint32_t>(g.distance(v, w[i]), 255));
    return detail::least_collision(n, w.size(), columns, least);
}

VertexSet without(const VertexSet& w, VertexId x) {
    VertexSet out;
    for (VertexId v : w)
        if (v != x) out.push_back(v);
    return out;
}

}  // namespace

Representation representation(const MetricGraph& g, VertexId v, const VertexSet& w) {
    if (w.empty()) throw Error(ErrorCode::EmptySet, "representation against an empty set");
    if (!g.contains(v)) throw Error(ErrorCode::OutOfRange, "vertex id " + std::to_string(v) + " out of range");
    validate(g, w);
    Representation r;
    r.coords.reserve(w.size());
    for (VertexId x : w) r.coords.push_back(static_cast<std::uint8_t>(g.distance(v, x)));
    return r;
}

bool is_resolving(const MetricGraph& g, const VertexSet& w) {
    validate(g, w);
    return !collision(g, w, false).has_value();
}

ResolvingReport resolving_report(const MetricGraph& g, const VertexSet& w) {
    validate(g, w);
    ResolvingReport report;
    report.w = w;
    report.colliding_pair = collision(g, w, true);
    report.is_resolving = !report.colliding_pair;
    if (!report.is_resolving) return report;

    VertexSet ascending = w;
    std::sort(ascending.begin(), ascending.end());
    for (VertexId x : ascending) {
        if (!collision(g, without(w, x), false)) {
            report.redundant_vertex = x;
            break;
        }
    }
    report.is_minimal = !report.redundant_vertex;
    return report;
}

bool is_minimal(const MetricGraph& g, const VertexSet& w) {
    if (!is_resolving(g, w)) throw Error(ErrorCode::NotResolving, "W does not resolve the graph");
    for (VertexId x : w)
        if (!collision(g, without(w, x), false)) return false;
    return true;
}

std::uint64_t metric_dimension_formula(std::uint32_t q, std::uint32_t n) {
    if (q < 2 || n < 1) throw Error(ErrorCode::BadParameters, "need q >= 2 and n >= 1");
    if (q == 2) {
        if (n == 1) return 0;
        if (n == 2) return 1;
        return n;
    }
    unsigned __int128 total = 0;
    for (std::uint32_t k = 1; k <= n; ++k) {
        const std::uint64_t choose = detail::binomial(n, k);
        const std::uint64_t cls = checked_pow(q - 1, k);
        total += static_cast<unsigned __int128>(choose) * (cls - 1);
        if (choose == UINT64_MAX || total > UINT64_MAX) throw Error(ErrorCode::Overflow, "metric dimension exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(total);
}

VertexSet canonical_basis(const ComponentGraph& g) {
    const auto& space = g.space();
    const std::uint32_t n = g.n();
    VertexSet out;
    if (g.q() == 2) {
        if (n == 1) return out;
        if (n == 2) return {space.unit(1)};
        for (std::uint32_t i = 1; i <= n; ++i) out.push_back(space.unit(i));
        return out;
    }
    // Keep every member of each skeleton class except the largest id.
    std::map<std::uint32_t, VertexId> largest;
    for (VertexId v = 1; v <= g.order(); ++v) largest[g.skeleton(v).mask] = v;
    for (VertexId v = 1; v <= g.order(); ++v)
        if (largest[g.skeleton(v).mask] != v) out.push_back(v);
    return out;
}

SearchResult metric_dimension_search(const MetricGraph& g, const SearchOptions& opts) {
    const std::uint32_t n = g.order();
    const std::uint64_t upper = n <= 1 ? 0 : n - 1;
    SearchResult result;
    // At least one of any two twins is in every resolving set.
    result.start_size = partition_by_neighborhood(g).lower_bound();

    const DistanceTable table(g);
    const unsigned workers = std::max(1u, opts.workers);
    constexpr std::uint64_t kBlock = 2048;

    std::uint64_t used = 0;
    for (std::uint32_t k = static_cast<std::uint32_t>(result.start_size); k <= n; ++k) {
        const std::uint64_t total = detail::binomial(n, k);
        const std::uint64_t limit = std::min(total, opts.budget - used);
        const std::uint64_t blocks = (limit + kBlock - 1) / kBlock;

        std::atomic<std::uint64_t> next_block{0};
        std::atomic<std::uint64_t> best{UINT64_MAX};
        // Blocks are claimed in increasing order and a worker only stops once
        // its block starts past the best hit, so every rank below the final
        // best has been examined whatever the scheduling.
        auto work = [&] {
            detail::CollisionFinder finder(table);
            std::vector<std::uint32_t> subset(k);
            while (true) {
                const std::uint64_t b = next_block.fetch_add(1);
                const std::uint64_t lo = b * kBlock;
                if (b >= blocks || lo > best.load()) return;
                const std::uint64_t hi = std::min(limit, lo + kBlock);
                detail::unrank_subset(n, k, lo, subset);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    if (finder.resolves(subset)) {
                        std::uint64_t cur = best.load();
                        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {}
                        break;
                    }
                    detail::next_subset(n, subset);
                }
            }
        };
        if (workers == 1 || blocks <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }

        if (best.load() != UINT64_MAX) {
            std::vector<std::uint32_t> subset(k);
            detail::unrank_subset(n, k, best.load(), subset);
            result.dimension = k;
            for (auto i : subset) result.witness.push_back(i + 1);
            result.evaluated = used + best.load() + 1;
            return result;
        }
        used += limit;
        if (limit < total)
            throw BudgetExceeded("metric dimension search exhausted its budget of " + std::to_string(opts.budget) +
                                     " subsets at size " + std::to_string(k),
                                 used, k, upper);
    }
    // Unreachable for connected graphs: the whole vertex set resolves.
    throw Error(ErrorCode::NotResolving, "no subset resolves the graph (disconnected input?)");
}

std::vector<VertexSet> resolving_sets_of_size(const MetricGraph& g, std::uint32_t k, const SearchOptions& opts) {
    const std::uint32_t n = g.order();
    if (k > n) return {};
    const std::uint64_t total = detail::binomial(n, k);
    if (total > opts.budget)
        throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") subsets exceed budget " +
                                 std::to_string(opts.budget),
                             0, 0, n <= 1 ? 0 : n - 1);
    const DistanceTable table(g);
    const unsigned workers = std::max(1u, opts.workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::vector<VertexSet>> parts(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = std::min(total, w * chunk), hi = std::min(total, (w + 1) * chunk);
        if (lo >= hi) return;
        detail::CollisionFinder finder(table);
        std::vector<std::uint32_t> subset(k);
        detail::unrank_subset(n, k, lo, subset);
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            if (finder.resolves(subset)) {
                auto& out = parts[w].emplace_back();
                for (auto i : subset) out.push_back(i + 1);
            }
            detail::next_subset(n, subset);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::vector<VertexSet> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexSet> enumerate_minimal_resolving_sets(const MetricGraph& g, std::uint32_t size_cap,
                                                        const SearchOptions& opts) {
    const auto table = detail::build_subset_table(g, size_cap, opts.budget, opts.workers);
    std::vector<VertexSet> out;
    out.reserve(table.minimal.size());
    for (auto m : table.minimal) out.push_back(detail::mask_to_set(m));
    return out;
}

}  // namespace resolvdim

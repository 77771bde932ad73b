#include "combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "resolvdim/error.hpp"

namespace resolvdim::detail {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

void unrank_subset(std::uint32_t n, std::uint32_t k, std::uint64_t rank, std::span<std::uint32_t> out) {
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        // Skip candidates whose subtree lies entirely before rank.
        while (true) {
            const std::uint64_t below = binomial(n - next - 1, k - i - 1);
            if (rank < below) break;
            rank -= below;
            ++next;
        }
        out[i] = next++;
    }
}

bool next_subset(std::uint32_t n, std::span<std::uint32_t> c) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

unsigned bits_for(std::uint32_t max_distance) {
    return std::max(1u, static_cast<unsigned>(std::bit_width(max_distance)));
}

namespace {

// Sorts vertex indices by (key words, index) and reports equal neighbors.
std::optional<std::pair<VertexId, VertexId>> scan_sorted(std::uint32_t n, std::size_t words,
                                                         const std::vector<std::uint64_t>& keys,
                                                         std::vector<std::uint32_t>& order, bool least) {
    order.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    auto key_less = [&](std::uint32_t a, std::uint32_t b) {
        for (std::size_t w = 0; w < words; ++w) {
            const auto ka = keys[std::size_t(a) * words + w];
            const auto kb = keys[std::size_t(b) * words + w];
            if (ka != kb) return ka < kb;
        }
        return a < b;
    };
    auto key_equal = [&](std::uint32_t a, std::uint32_t b) {
        for (std::size_t w = 0; w < words; ++w)
            if (keys[std::size_t(a) * words + w] != keys[std::size_t(b) * words + w]) return false;
        return true;
    };
    std::sort(order.begin(), order.end(), key_less);

    std::optional<std::pair<VertexId, VertexId>> best;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        if (!key_equal(order[i], order[i + 1])) continue;
        // Within a run of equal keys indices ascend, so the first two form
        // the least pair of the run.
        const std::pair<VertexId, VertexId> pair{order[i] + 1, order[i + 1] + 1};
        if (!least) return pair;
        if (!best || pair < *best) best = pair;
        while (i + 1 < n && key_equal(order[i], order[i + 1])) ++i;
    }
    return best;
}

}  // namespace

std::optional<std::pair<VertexId, VertexId>> least_collision(std::uint32_t n, std::size_t k,
                                                             std::span<const std::uint8_t> columns,
                                                             bool least) {
    std::uint32_t max_d = 0;
    for (auto d : columns) max_d = std::max<std::uint32_t>(max_d, d);
    const unsigned bits = bits_for(max_d);
    const std::size_t words = std::max<std::size_t>(1, (k * bits + 63) / 64);
    std::vector<std::uint64_t> keys(std::size_t(n) * words, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t bit = i * bits;
        for (std::uint32_t v = 0; v < n; ++v)
            keys[std::size_t(v) * words + bit / 64] |= std::uint64_t(columns[i * n + v]) << (bit % 64);
    }
    std::vector<std::uint32_t> order;
    return scan_sorted(n, words, keys, order, least);
}

CollisionFinder::CollisionFinder(const DistanceTable& table) : table_(table) {
    std::uint32_t max_d = 0;
    for (VertexId u = 1; u <= table.order(); ++u)
        for (VertexId v = 1; v <= table.order(); ++v) max_d = std::max<std::uint32_t>(max_d, table.at(u, v));
    bits_ = bits_for(max_d);
}

std::optional<std::pair<VertexId, VertexId>> CollisionFinder::find(std::span<const std::uint32_t> members,
                                                                   bool least) {
    const std::uint32_t n = table_.order();
    const std::size_t k = members.size();
    const std::size_t words = std::max<std::size_t>(1, (k * bits_ + 63) / 64);
    keys_.assign(std::size_t(n) * words, 0);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint8_t* row = table_.row(members[i] + 1);
        const std::size_t bit = i * bits_;
        std::uint64_t* dst = keys_.data() + bit / 64;
        const unsigned shift = bit % 64;
        // Distances are symmetric, so row w lists d(v, w) for every v. A
        // coordinate straddles two words when bits_ does not divide 64.
        if (shift + bits_ <= 64) {
            for (std::uint32_t v = 0; v < n; ++v) dst[std::size_t(v) * words] |= std::uint64_t(row[v]) << shift;
        } else {
            for (std::uint32_t v = 0; v < n; ++v) {
                dst[std::size_t(v) * words] |= std::uint64_t(row[v]) << shift;
                dst[std::size_t(v) * words + 1] |= std::uint64_t(row[v]) >> (64 - shift);
            }
        }
    }
    return scan_sorted(n, words, keys_, order_, least);
}

bool SubsetTable::is_minimal(std::uint32_t mask) const {
    if (std::popcount(mask) > static_cast<int>(cap) || !resolving[mask]) return false;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        if (resolving[mask ^ bit]) return false;
    }
    return true;
}

VertexSet mask_to_set(std::uint32_t mask) {
    VertexSet out;
    for (std::uint32_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i + 1);
    return out;
}

SubsetTable build_subset_table(const MetricGraph& g, std::uint32_t cap, std::uint64_t budget, unsigned workers) {
    const std::uint32_t n = g.order();
    cap = std::min(cap, n);
    std::uint64_t total = 0;
    for (std::uint32_t k = 0; k <= cap; ++k) total = std::min(total + binomial(n, k), UINT64_MAX / 2);
    if (total > budget)
        throw BudgetExceeded("enumerating " + std::to_string(total) + " subsets exceeds budget " +
                                 std::to_string(budget),
                             0, 0, n == 0 ? 0 : n - 1);
    if (n > 24) throw Error(ErrorCode::InstanceTooLarge, "subset table needs at most 24 vertices");

    SubsetTable t;
    t.n = n;
    t.cap = cap;
    const std::uint64_t masks = std::uint64_t(1) << n;
    t.resolving.assign(masks, 0);

    const DistanceTable table(g);
    workers = std::max(1u, workers);
    const std::uint64_t chunk = (masks + workers - 1) / workers;
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        CollisionFinder finder(table);
        std::vector<std::uint32_t> members;
        for (std::uint64_t m = lo; m < hi; ++m) {
            if (std::popcount(m) > static_cast<int>(cap)) continue;
            members.clear();
            for (std::uint64_t rest = m; rest; rest &= rest - 1)
                members.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
            t.resolving[m] = finder.resolves(members) ? 1 : 0;
        }
    };
    if (workers == 1) {
        work(0, masks);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, std::min(masks, w * chunk), std::min(masks, (w + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    for (std::uint64_t m = 0; m < masks; ++m)
        if (t.is_minimal(static_cast<std::uint32_t>(m))) t.minimal.push_back(static_cast<std::uint32_t>(m));
    std::sort(t.minimal.begin(), t.minimal.end(),
              [](std::uint32_t a, std::uint32_t b) { return mask_to_set(a) < mask_to_set(b); });
    return t;
}

}  // namespace resolvdim::detail

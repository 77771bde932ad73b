#include "resolvdim/twins.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "resolvdim/error.hpp"

namespace resolvdim {
namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

bool same_open(const MetricGraph& g, VertexId u, VertexId v) {
    for (VertexId w = 1; w <= g.order(); ++w) {
        const bool a = w != u && g.adjacent(u, w);
        const bool b = w != v && g.adjacent(v, w);
        if (a != b) return false;
    }
    return true;
}

bool same_closed(const MetricGraph& g, VertexId u, VertexId v) {
    for (VertexId w = 1; w <= g.order(); ++w) {
        const bool a = w == u || g.adjacent(u, w);
        const bool b = w == v || g.adjacent(v, w);
        if (a != b) return false;
    }
    return true;
}

// Buckets vertices by key, then splits each bucket into exact classes with
// `equal` and unites every member with its class representative.
template <typename Equal>
void merge_by_key(const std::vector<std::uint64_t>& key, UnionFind& uf, Equal equal) {
    std::map<std::uint64_t, std::vector<VertexId>> buckets;
    for (std::size_t i = 0; i < key.size(); ++i) buckets[key[i]].push_back(static_cast<VertexId>(i + 1));
    for (const auto& [_, bucket] : buckets) {
        std::vector<VertexId> reps;
        for (VertexId v : bucket) {
            auto it = std::find_if(reps.begin(), reps.end(), [&](VertexId r) { return equal(r, v); });
            if (it == reps.end()) reps.push_back(v);
            else
                uf.unite(*it - 1, v - 1);
        }
    }
}

TwinPartition from_roots(UnionFind& uf, std::size_t n) {
    TwinPartition p;
    p.class_of.assign(n, 0);
    std::unordered_map<std::size_t, std::uint32_t> index_of_root;
    // Vertices are visited in increasing order, so classes come out ordered
    // by their smallest member.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        auto [it, inserted] = index_of_root.try_emplace(root, static_cast<std::uint32_t>(p.classes.size()));
        if (inserted) p.classes.emplace_back();
        p.classes[it->second].members.push_back(static_cast<VertexId>(i + 1));
        p.class_of[i] = it->second;
    }
    return p;
}

void annotate(TwinPartition& p, const ComponentGraph& g) {
    for (auto& c : p.classes) {
        const Skeleton s = g.skeleton(c.members.front());
        const bool uniform = std::all_of(c.members.begin(), c.members.end(),
                                         [&](VertexId v) { return g.skeleton(v) == s; });
        c.skeleton = uniform ? std::optional<Skeleton>(s) : std::nullopt;
    }
}

}  // namespace

std::uint64_t TwinPartition::lower_bound() const {
    std::uint64_t total = 0;
    for (const auto& c : classes) total += c.members.size() - 1;
    return total;
}

TwinPartition partition_by_neighborhood(const MetricGraph& g, std::uint64_t vertex_cap) {
    const std::uint32_t n = g.order();
    if (n > vertex_cap)
        throw Error(ErrorCode::InstanceTooLarge,
                    std::to_string(n) + " vertices exceed cap " + std::to_string(vertex_cap));

    // Set hashes are sums of per-vertex mixes, so the closed key is the open
    // key plus the vertex's own mix.
    std::vector<std::uint64_t> open_key(n, 0), closed_key(n, 0);
    for (VertexId u = 1; u <= n; ++u) {
        std::uint64_t h = 0;
        for (VertexId v = 1; v <= n; ++v)
            if (v != u && g.adjacent(u, v)) h += mix(v);
        open_key[u - 1] = h;
        closed_key[u - 1] = h + mix(u);
    }

    UnionFind uf(n);
    merge_by_key(open_key, uf, [&](VertexId a, VertexId b) { return same_open(g, a, b); });
    merge_by_key(closed_key, uf, [&](VertexId a, VertexId b) { return same_closed(g, a, b); });
    return from_roots(uf, n);
}

TwinPartition partition_by_neighborhood(const ComponentGraph& g, std::uint64_t vertex_cap) {
    TwinPartition p = partition_by_neighborhood(static_cast<const MetricGraph&>(g), vertex_cap);
    annotate(p, g);
    return p;
}

TwinPartition partition_by_skeleton(const ComponentGraph& g) {
    const std::uint32_t n = g.order();
    UnionFind uf(n);
    std::unordered_map<std::uint32_t, VertexId> first_with_mask;
    for (VertexId v = 1; v <= n; ++v) {
        auto [it, inserted] = first_with_mask.try_emplace(g.skeleton(v).mask, v);
        if (!inserted) uf.unite(it->second - 1, v - 1);
    }
    TwinPartition p = from_roots(uf, n);
    annotate(p, g);
    return p;
}

bool partitions_coincide(const ComponentGraph& g) {
    return partition_by_neighborhood(g) == partition_by_skeleton(g);
}

VertexSet twin_swap(const TwinPartition& twins, const VertexSet& w, VertexId u, VertexId v) {
    auto it = std::find(w.begin(), w.end(), u);
    if (it == w.end()) throw Error(ErrorCode::NotMember, std::to_string(u) + " is not in W");
    if (std::find(w.begin(), w.end(), v) != w.end())
        throw Error(ErrorCode::AlreadyMember, std::to_string(v) + " is already in W");
    if (u == 0 || v == 0 || u > twins.class_of.size() || v > twins.class_of.size())
        throw Error(ErrorCode::OutOfRange, "vertex outside the partition");
    if (!twins.same_class(u, v))
        throw Error(ErrorCode::NotTwins, std::to_string(u) + " and " + std::to_string(v) + " are not twins");
    VertexSet out = w;
    out[static_cast<std::size_t>(it - w.begin())] = v;
    return out;
}

}  // namespace resolvdim

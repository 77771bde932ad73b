#include "resolvdim/graph.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <string>

#include "resolvdim/error.hpp"

namespace resolvdim {

DistanceTable::DistanceTable(const MetricGraph& g) : n_(g.order()), d_(std::size_t(n_) * n_) {
    for (VertexId u = 1; u <= n_; ++u)
        for (VertexId v = 1; v <= n_; ++v) d_[std::size_t(u - 1) * n_ + (v - 1)] =
            static_cast<std::uint8_t>(std::min<std::uint32_t>(g.distance(u, v), 255));
}

PlainGraph PlainGraph::from_edges(std::uint32_t order, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw Error(ErrorCode::BadParameters, "self-loop at " + std::to_string(u));
        if (u < 1 || v < 1 || u > order || v > order)
            throw Error(ErrorCode::BadParameters, "edge endpoint outside 1.." + std::to_string(order));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return PlainGraph{order, std::move(edges)};
}

PlainMetric::PlainMetric(const PlainGraph& g) : order_(g.order), d_(std::size_t(g.order) * g.order, kUnreachable) {
    std::vector<std::vector<VertexId>> adj(order_);
    for (auto [u, v] : g.edges) {
        adj[u - 1].push_back(v);
        adj[v - 1].push_back(u);
    }
    for (VertexId s = 1; s <= order_; ++s) {
        std::uint8_t* row = d_.data() + std::size_t(s - 1) * order_;
        row[s - 1] = 0;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop_front();
            for (VertexId v : adj[u - 1]) {
                if (row[v - 1] != kUnreachable) continue;
                row[v - 1] = static_cast<std::uint8_t>(std::min<std::uint32_t>(row[u - 1] + 1u, kUnreachable - 1));
                queue.push_back(v);
            }
        }
        for (std::uint32_t i = 0; i < order_; ++i)
            if (row[i] == kUnreachable) connected_ = false;
    }
}

std::uint32_t PlainMetric::distance(VertexId u, VertexId v) const {
    return d_[std::size_t(u - 1) * order_ + (v - 1)];
}

ComponentGraph::ComponentGraph(std::uint32_t q, std::uint32_t n, std::uint64_t vertex_cap)
    : space_(q, n, vertex_cap), masks_(space_.vertex_count()) {
    for (VertexId v = 1; v <= space_.vertex_count(); ++v) masks_[v - 1] = space_.skeleton_of(v).mask;
}

void ComponentGraph::check(VertexId v) const {
    if (v == 0 || v > order())
        throw Error(ErrorCode::OutOfRange, "vertex id " + std::to_string(v) + " outside [1, " +
                                               std::to_string(order()) + "]");
}

// Any two vertices are joined through e_1+...+e_n, so non-adjacent
// distinct vertices sit at distance exactly 2.
std::uint32_t ComponentGraph::distance(VertexId u, VertexId v) const {
    if (u == v) return 0;
    return (masks_[u - 1] & masks_[v - 1]) ? 1 : 2;
}

Skeleton ComponentGraph::skeleton(VertexId v) const {
    check(v);
    return Skeleton{masks_[v - 1]};
}

bool ComponentGraph::is_adjacent(VertexId u, VertexId v) const {
    check(u);
    check(v);
    return u != v && (masks_[u - 1] & masks_[v - 1]) != 0;
}

std::uint32_t ComponentGraph::checked_distance(VertexId u, VertexId v) const {
    check(u);
    check(v);
    return distance(u, v);
}

VertexSet ComponentGraph::open_neighborhood(VertexId u) const {
    check(u);
    VertexSet out;
    for (VertexId v = 1; v <= order(); ++v)
        if (v != u && (masks_[u - 1] & masks_[v - 1])) out.push_back(v);
    return out;
}

VertexSet ComponentGraph::closed_neighborhood(VertexId u) const {
    VertexSet out = open_neighborhood(u);
    out.insert(std::lower_bound(out.begin(), out.end(), u), u);
    return out;
}

bool ComponentGraph::is_complete() const {
    for (VertexId u = 1; u <= order(); ++u)
        for (VertexId v = u + 1; v <= order(); ++v)
            if (!is_adjacent(u, v)) return false;
    return true;
}

std::uint64_t ComponentGraph::size_bruteforce() const {
    std::uint64_t count = 0;
    for (VertexId u = 1; u <= order(); ++u)
        for (VertexId v = u + 1; v <= order(); ++v)
            if (masks_[u - 1] & masks_[v - 1]) ++count;
    return count;
}

PlainGraph ComponentGraph::to_plain() const {
    std::vector<Edge> edges;
    for (VertexId u = 1; u <= order(); ++u)
        for (VertexId v = u + 1; v <= order(); ++v)
            if (masks_[u - 1] & masks_[v - 1]) edges.emplace_back(u, v);
    return PlainGraph{order(), std::move(edges)};
}

std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source) {
    constexpr std::uint32_t kInf = UINT32_MAX;
    std::vector<std::uint32_t> dist(g.order(), kInf);
    dist[source - 1] = 0;
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (VertexId v = 1; v <= g.order(); ++v) {
            if (dist[v - 1] != kInf || !g.adjacent(u, v)) continue;
            dist[v - 1] = dist[u - 1] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

namespace {

using u128 = unsigned __int128;

u128 pow128(std::uint64_t base, std::uint32_t exp) {
    u128 r = 1;
    const u128 limit = ~u128(0) / (base ? base : 1);
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > limit) throw Error(ErrorCode::Overflow, "intermediate exceeds 128 bits");
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t order_formula(std::uint32_t q, std::uint32_t n) {
    if (q < 2 || n < 1) throw Error(ErrorCode::BadParameters, "need q >= 2 and n >= 1");
    return checked_pow(q, n) - 1;
}

std::uint64_t size_formula(std::uint32_t q, std::uint32_t n) {
    if (q < 2 || n < 1) throw Error(ErrorCode::BadParameters, "need q >= 2 and n >= 1");
    const u128 qn = pow128(q, n);
    const u128 q2n = pow128(q, 2 * n);
    const u128 odd = pow128(2ull * q - 1, n);
    // q^{2n} + 1 >= q^n + (2q-1)^n holds for q >= 2, n >= 1.
    const u128 numerator = q2n - qn + 1 - odd;
    if (numerator % 2 != 0) throw std::logic_error("size formula numerator is odd");
    const u128 size = numerator / 2;
    if (size > UINT64_MAX) throw Error(ErrorCode::Overflow, "graph size exceeds 64 bits");
    return static_cast<std::uint64_t>(size);
}

void write_dot(std::ostream& out, const ComponentGraph& g) {
    out << "graph gv {\n";
    for (VertexId v = 1; v <= g.order(); ++v) out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (auto [u, v] : g.to_plain().edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

void write_edge_list(std::ostream& out, const PlainGraph& g) {
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const ComponentGraph& g) { write_edge_list(out, g.to_plain()); }

}  // namespace resolvdim

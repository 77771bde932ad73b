#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "resolvdim/metric.hpp"
#include "resolvdim/vectorspace.hpp"

namespace resolvdim {

using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph on vertices 1..order, edges stored as (u, v)
// with u < v, sorted.
struct PlainGraph {
    std::uint32_t order = 0;
    std::vector<Edge> edges;

    // Sorts, dedups and validates. Throws BadParameters on loops or
    // out-of-range endpoints.
    static PlainGraph from_edges(std::uint32_t order, std::vector<Edge> edges);

    friend bool operator==(const PlainGraph&, const PlainGraph&) = default;
};

// All-pairs BFS over a plain graph. Unreachable pairs get kUnreachable.
class PlainMetric final : public MetricGraph {
public:
    static constexpr std::uint32_t kUnreachable = 255;

    explicit PlainMetric(const PlainGraph& g);

    std::uint32_t order() const override { return order_; }
    std::uint32_t distance(VertexId u, VertexId v) const override;
    bool connected() const noexcept { return connected_; }

private:
    std::uint32_t order_;
    std::vector<std::uint8_t> d_;
    bool connected_ = true;
};

// Γ(F_q^n): non-zero vectors, adjacent iff their skeletons meet.
// Adjacency is computed from the skeleton table, never stored.
class ComponentGraph final : public MetricGraph {
public:
    ComponentGraph(std::uint32_t q, std::uint32_t n, std::uint64_t vertex_cap = kDefaultVertexCap);

    const VectorSpace& space() const noexcept { return space_; }
    std::uint32_t q() const noexcept { return space_.q(); }
    std::uint32_t n() const noexcept { return space_.dimension(); }

    std::uint32_t order() const override { return space_.vertex_count(); }
    std::uint32_t distance(VertexId u, VertexId v) const override;
    std::string label(VertexId v) const override { return space_.format(v); }

    Skeleton skeleton(VertexId v) const;

    // Throw OutOfRange for invalid ids.
    bool is_adjacent(VertexId u, VertexId v) const;
    std::uint32_t checked_distance(VertexId u, VertexId v) const;
    VertexSet open_neighborhood(VertexId u) const;
    VertexSet closed_neighborhood(VertexId u) const;

    bool is_complete() const;
    // Unordered adjacent pairs by a full double loop.
    std::uint64_t size_bruteforce() const;

    PlainGraph to_plain() const;

private:
    void check(VertexId v) const;

    VectorSpace space_;
    std::vector<std::uint32_t> masks_;  // index id - 1
};

// BFS distances from source over the adjacency of g, index v - 1.
std::vector<std::uint32_t> bfs_distances(const MetricGraph& g, VertexId source);

// q^n - 1.
std::uint64_t order_formula(std::uint32_t q, std::uint32_t n);
// (q^{2n} - q^n + 1 - (2q-1)^n) / 2, in 128-bit arithmetic. Throws
// Overflow when the result does not fit 64 bits.
std::uint64_t size_formula(std::uint32_t q, std::uint32_t n);

void write_dot(std::ostream& out, const ComponentGraph& g);
void write_edge_list(std::ostream& out, const ComponentGraph& g);
void write_edge_list(std::ostream& out, const PlainGraph& g);

}  // namespace resolvdim

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resolvdim/vectorspace.hpp"

namespace resolvdim {

// A finite connected graph seen through its shortest-path metric.
// Vertices are 1..order().
class MetricGraph {
public:
    virtual ~MetricGraph() = default;

    virtual std::uint32_t order() const = 0;
    // 0 when u == v. Ids are validated by callers.
    virtual std::uint32_t distance(VertexId u, VertexId v) const = 0;
    virtual std::string label(VertexId v) const { return std::to_string(v); }

    bool adjacent(VertexId u, VertexId v) const { return distance(u, v) == 1; }
    bool contains(VertexId v) const { return v >= 1 && v <= order(); }
};

// Dense all-pairs distance table, row-major over 0-based indices.
class DistanceTable {
public:
    explicit DistanceTable(const MetricGraph& g);

    std::uint32_t order() const noexcept { return n_; }
    std::uint8_t at(VertexId u, VertexId v) const noexcept {
        return d_[std::size_t(u - 1) * n_ + (v - 1)];
    }
    const std::uint8_t* row(VertexId u) const noexcept { return d_.data() + std::size_t(u - 1) * n_; }

private:
    std::uint32_t n_;
    std::vector<std::uint8_t> d_;
};

}  // namespace resolvdim

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "resolvdim/graph.hpp"
#include "resolvdim/metric.hpp"

namespace resolvdim {

struct TwinClass {
    VertexSet members;                // ascending
    std::optional<Skeleton> skeleton; // set when every member shares one
};

// Classes ordered by their smallest member.
struct TwinPartition {
    std::vector<TwinClass> classes;
    std::vector<std::uint32_t> class_of;  // index v - 1

    std::uint32_t class_index(VertexId v) const { return class_of.at(v - 1); }
    bool same_class(VertexId u, VertexId v) const { return class_index(u) == class_index(v); }
    // Sum over classes of |C| - 1: any resolving set has at least this many
    // vertices, since of two twins at least one must be in it.
    std::uint64_t lower_bound() const;

    friend bool operator==(const TwinPartition& a, const TwinPartition& b) {
        if (a.classes.size() != b.classes.size()) return false;
        for (std::size_t i = 0; i < a.classes.size(); ++i)
            if (a.classes[i].members != b.classes[i].members) return false;
        return true;
    }
};

// u ~ v iff N[u] = N[v] or N(u) = N(v), taken over the metric's adjacency.
// Throws InstanceTooLarge above vertex_cap (the pass is quadratic).
TwinPartition partition_by_neighborhood(const MetricGraph& g,
                                        std::uint64_t vertex_cap = kDefaultVertexCap);
// Same, with each class annotated by its common skeleton where one exists.
TwinPartition partition_by_neighborhood(const ComponentGraph& g,
                                        std::uint64_t vertex_cap = kDefaultVertexCap);

// u ~ v iff S_u = S_v. Produces 2^n - 1 classes.
TwinPartition partition_by_skeleton(const ComponentGraph& g);

bool partitions_coincide(const ComponentGraph& g);

// (W \ {u}) ∪ {v}, order of W preserved with v taking u's slot.
// Throws NotMember (u ∉ W), AlreadyMember (v ∈ W), NotTwins.
VertexSet twin_swap(const TwinPartition& twins, const VertexSet& w, VertexId u, VertexId v);

}  // namespace resolvdim

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "resolvdim/field.hpp"

namespace resolvdim {

// Vertex ids are 1..N. For Γ(F_q^n) the id is the little-endian base-q
// digit string of the coefficient vector; id 0 would be the zero vector.
using VertexId = std::uint32_t;
using VertexSet = std::vector<VertexId>;

inline constexpr std::uint64_t kDefaultVertexCap = 1u << 16;

// Coefficients a_1..a_n with respect to the fixed basis e_1..e_n.
struct Vector {
    std::vector<FieldElement> coeffs;

    std::size_t size() const noexcept { return coeffs.size(); }
    bool is_zero() const noexcept;

    friend bool operator==(const Vector&, const Vector&) = default;
};

// Bit i set iff a_{i+1} != 0.
struct Skeleton {
    std::uint32_t mask = 0;

    int length() const noexcept { return __builtin_popcount(mask); }
    bool meets(Skeleton other) const noexcept { return (mask & other.mask) != 0; }

    friend constexpr auto operator<=>(Skeleton, Skeleton) = default;
};

Skeleton skeleton(const Vector& v);

// q^n, or Error(Overflow) past 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

class VectorSpace {
public:
    // Throws UnsupportedOrder for bad q, BadParameters for n = 0 or n > 31,
    // InstanceTooLarge when q^n - 1 exceeds vertex_cap.
    VectorSpace(std::uint32_t q, std::uint32_t n, std::uint64_t vertex_cap = kDefaultVertexCap);

    const Field& field() const noexcept { return field_; }
    std::uint32_t q() const noexcept { return field_.order(); }
    std::uint32_t dimension() const noexcept { return n_; }
    std::uint32_t vertex_count() const noexcept { return count_; }

    VertexId encode(const Vector& v) const;
    // Throws OutOfRange for id 0 or id >= q^n.
    Vector decode(VertexId id) const;
    Skeleton skeleton_of(VertexId id) const;

    // Ids 1..q^n-1 in increasing order.
    std::vector<VertexId> enumerate_vertices() const;

    // The unit vector e_i, 1-based.
    VertexId unit(std::uint32_t i) const;
    // Sum of e_i over the bits of mask, all coefficients 1.
    VertexId indicator(std::uint32_t mask) const;

    // Text form: terms `<coeff?>e<index>` joined by '+', ascending index,
    // coefficient (its packed rep) omitted when 1.
    std::string format(VertexId id) const;
    VertexId parse(std::string_view text) const;
    // Comma-separated list of vertices in the text form.
    VertexSet parse_set(std::string_view text) const;
    std::string format_set(const VertexSet& set) const;

private:
    Field field_;
    std::uint32_t n_;
    std::uint32_t count_;
};

}  // namespace resolvdim

#pragma once

// Arithmetic in GF(q), q = p^m, over precomputed q x q tables.
//
// An element is packed as rep = c_0 + c_1 p + ... + c_{m-1} p^{m-1}, where
// c_i are the coefficients of its polynomial representative modulo the
// reduction polynomial. For prime fields rep is the residue itself.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace resolvdim {

struct FieldElement {
    std::uint32_t rep = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
public:
    // Orders with a built-in reduction polynomial.
    static constexpr std::uint32_t kSupportedOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27};

    // Throws Error(UnsupportedOrder) if q is not a tabled prime power.
    explicit Field(std::uint32_t q);

    static bool is_supported(std::uint32_t q) noexcept;

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    // Coefficients of the monic reduction polynomial, constant term first,
    // leading 1 included. Empty for prime fields.
    const std::vector<std::uint32_t>& reduction_poly() const noexcept { return poly_; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }

    bool contains(FieldElement a) const noexcept { return a.rep < q_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    // Throws Error(DivisionByZero) for a = 0.
    FieldElement inv(FieldElement a) const;

private:
    std::size_t index(FieldElement a, FieldElement b) const;
    void check(FieldElement a) const;

    std::uint32_t q_;
    std::uint32_t p_;
    std::uint32_t m_;
    std::vector<std::uint32_t> poly_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

// True iff the monic polynomial (constant term first) has no monic factor
// of degree 1..deg/2 over GF(p). Exhaustive trial division.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic_poly, std::uint32_t p);

}  // namespace resolvdim

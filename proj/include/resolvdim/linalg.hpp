#pragma once

#include <cstdint>
#include <span>

#include "resolvdim/field.hpp"
#include "resolvdim/vectorspace.hpp"

namespace resolvdim {

// Rank by Gaussian elimination over f. Throws DimensionMismatch if the
// vectors differ in length.
std::size_t rank(const Field& f, std::span<const Vector> vs);

bool linearly_independent(const Field& f, std::span<const Vector> vs);

// True iff some n-subset of W is a basis of F_q^n, i.e. rank(W) = n.
bool contains_v_basis(const Field& f, std::uint32_t n, std::span<const Vector> vs);

}  // namespace resolvdim

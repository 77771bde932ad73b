#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace resolvdim {

enum class ErrorCode {
    UnsupportedOrder,
    DivisionByZero,
    DimensionMismatch,
    OutOfRange,
    InstanceTooLarge,
    Overflow,
    NotTwins,
    NotMember,
    AlreadyMember,
    EmptySet,
    NotResolving,
    BudgetExceeded,
    BadParameters,
    EmptyMember,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown by exhaustive searches when the subset budget runs out before a
// verdict. The bounds are what was established before giving up.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t evaluated,
                   std::uint64_t lower_bound, std::uint64_t upper_bound)
        : Error(ErrorCode::BudgetExceeded, what),
          evaluated_(evaluated),
          lower_(lower_bound),
          upper_(upper_bound) {}

    std::uint64_t evaluated() const noexcept { return evaluated_; }
    std::uint64_t lower_bound() const noexcept { return lower_; }
    std::uint64_t upper_bound() const noexcept { return upper_; }

private:
    std::uint64_t evaluated_;
    std::uint64_t lower_;
    std::uint64_t upper_;
};

// Parse failures in the vertex grammar or the set-family format.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::ParseError,
                what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace resolvdim

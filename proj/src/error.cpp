#include "resolvdim/error.hpp"

namespace resolvdim {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NotTwins: return "NotTwins";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::AlreadyMember: return "AlreadyMember";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::NotResolving: return "NotResolving";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::EmptyMember: return "EmptyMember";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace resolvdim

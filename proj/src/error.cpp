#include "incfree/error.hpp"

namespace incfree {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidDesign: return "InvalidDesign";
    case ErrorKind::DegenerateComplement: return "DegenerateComplement";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NotEquinumerous: return "NotEquinumerous";
    case ErrorKind::IncidenceFound: return "IncidenceFound";
    case ErrorKind::DuplicateIndex: return "DuplicateIndex";
    case ErrorKind::NotInX: return "NotInX";
    case ErrorKind::InconsistentMatchings: return "InconsistentMatchings";
    case ErrorKind::FractionalCheckFailed: return "FractionalCheckFailed";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotAPlane: return "NotAPlane";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::NotOrderFive: return "NotOrderFive";
    case ErrorKind::InvalidChoices: return "InvalidChoices";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DesignMismatch: return "DesignMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace incfree

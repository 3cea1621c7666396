#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace incfree {

enum class ErrorKind {
    NotPrimePower,
    TooLarge,
    ShapeMismatch,
    InvalidDesign,
    DegenerateComplement,
    OutOfRange,
    NotRegular,
    NotPerfect,
    NotEquinumerous,
    IncidenceFound,
    DuplicateIndex,
    NotInX,
    InconsistentMatchings,
    FractionalCheckFailed,
    BudgetExhausted,
    NotAPlane,
    NotCovering,
    NotOrderFive,
    InvalidChoices,
    ParseError,
    DesignMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness()` carries the concrete
/// indices (point, block, chamber, ...) that triggered the error when there
/// are any.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::vector<std::size_t> witness_;
};

}  // namespace incfree

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shiftfam {

enum class ErrorKind {
    EmptyInput,
    NonPositiveEntry,
    NotNumerical,
    BaseNotMember,
    TooFewShifts,
    NotCoprime,
    BelowThreshold,
    NotInP,
    NotPseudoFrobenius,
    Overflow,
    BaseNotNearlyGorenstein,
    CapExceeded,
    BadReducedBase,
    InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

// Domain error carrying a machine-readable kind. InvariantViolation signals
// a broken internal consistency check, never bad user input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace shiftfam

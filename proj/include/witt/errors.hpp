#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace witt {

/// Failure categories raised by the library. Each maps to one documented
/// precondition or certification step.
enum class Errc {
    BackendMismatch,
    UndefinedDegree,
    PoleAtZero,
    DivisionByZero,
    NonFinite,
    BadTolerance,
    BadParameter,
    UncertifiedFactoring,
    NotInGamma,
    NotInVCross,
    RepeatedCoordinate,
    RequiresNonzero,
    VerificationFailed,
    UseNumeric,
    NoConvergence,
    NotClosed,
    NotIndependent,
    AbelianContradiction,
    StructureViolation,
    ValidationFailed,
    ParseError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

inline void require_tolerance(double tol) {
    if (!(tol > 0.0)) {
        throw Error(Errc::BadTolerance, "tolerance must be positive");
    }
}

}  // namespace witt

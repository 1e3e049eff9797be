#include "witt/errors.hpp"

namespace witt {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::BackendMismatch: return "BackendMismatch";
        case Errc::UndefinedDegree: return "UndefinedDegree";
        case Errc::PoleAtZero: return "PoleAtZero";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NonFinite: return "NonFinite";
        case Errc::BadTolerance: return "BadTolerance";
        case Errc::BadParameter: return "BadParameter";
        case Errc::UncertifiedFactoring: return "UncertifiedFactoring";
        case Errc::NotInGamma: return "NotInGamma";
        case Errc::NotInVCross: return "NotInVCross";
        case Errc::RepeatedCoordinate: return "RepeatedCoordinate";
        case Errc::RequiresNonzero: return "RequiresNonzero";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::UseNumeric: return "UseNumeric";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotIndependent: return "NotIndependent";
        case Errc::AbelianContradiction: return "AbelianContradiction";
        case Errc::StructureViolation: return "StructureViolation";
        case Errc::ValidationFailed: return "ValidationFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace witt

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "witt/subalgebra.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// A candidate two-dimensional subalgebra span{A, B}.
struct SpanInput {
    VectorField a;
    VectorField b;
    double tol = kDefaultSpanTolerance;
};

/// [A, B] = alpha A + beta B
struct ClosureCoords {
    Coefficient alpha;
    Coefficient beta;
};

/// Throws NotIndependent, AbelianContradiction or NotClosed.
ClosureCoords closure_check(const SpanInput& input);

/// [X, Y] = c Y with Y the monic derived element and X reduced modulo Y.
struct EigenBasis {
    VectorField x;
    VectorField y;
    Coefficient c;
};

EigenBasis eigen_basis(const SpanInput& input);

struct ClassificationCertificate {
    Coefficient eigenvalue;
    double closure_residual = 0.0;
    double factor_residual = 0.0;
    double bracket_residual = 0.0;
    std::optional<RVector> recovered;
    /// |r| >= k, read off the lowest degree of Y.
    bool abs_r_bound = false;
};

struct Classification {
    SubalgebraDescriptor descriptor;
    ClassificationCertificate certificate;
};

/// Throws NotClosed, NotIndependent, AbelianContradiction, StructureViolation
/// or ValidationFailed.
Classification classify_with_certificate(const SpanInput& input);
SubalgebraDescriptor classify(const SpanInput& input);

/// Rows give the new basis in terms of (P D, Q D).
using BasisChange = std::array<std::array<Coefficient, 2>, 2>;

bool roundtrip_check(const MuSignature& mu, const BasisChange& change, double tol = kDefaultDescriptorTolerance);
/// Draws a random invertible integer basis change from the seed.
bool roundtrip_check(const MuSignature& mu, std::uint64_t seed, double tol = kDefaultDescriptorTolerance);
BasisChange random_basis_change(std::uint64_t seed);

}  // namespace witt

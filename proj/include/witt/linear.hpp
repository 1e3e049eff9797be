#pragma once

#include <optional>
#include <vector>

#include "witt/coefficient.hpp"

namespace witt {

/// Dense row-major matrix of coefficients sharing one backend.
using CoeffMatrix = std::vector<std::vector<Coefficient>>;

struct SpanSolution {
    std::vector<Coefficient> coords;
    double residual = 0.0;  // max |A x - b|; exactly 0 on the exact backend
};

/// Solves A x = b. Exact backend: Gaussian elimination, absent when the
/// system is inconsistent. Float backend: least squares via column-pivoted QR,
/// absent when the residual exceeds tol * max(1, |b|_inf).
std::optional<SpanSolution> solve_linear(const CoeffMatrix& a, const std::vector<Coefficient>& b, Backend backend,
                                         double tol);

/// Exact rank by elimination (exact backend) or singular values above
/// rel_tol * largest (float backend).
int matrix_rank(const CoeffMatrix& a, Backend backend, double rel_tol);

}  // namespace witt

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

inline constexpr double kDefaultRootTolerance = 1e-8;

struct RootMultiplicity {
    Complex root;
    int multiplicity = 1;
    /// Present when the root is a rational number certified by exact substitution.
    std::optional<Rational> exact;
};

/// p = leading * t^zero_order * prod (t - root)^multiplicity
struct RootFactorization {
    Coefficient leading;
    int zero_order = 0;
    std::vector<RootMultiplicity> roots;
    /// Relative max-coefficient residual of the reconstruction.
    double residual = 0.0;

    int degree() const;
};

/// All complex roots of the dense polynomial sum coeffs[i] t^i by
/// simultaneous (Aberth-Ehrlich) iteration. The leading coefficient must be
/// nonzero. Each root appears as often as its multiplicity.
std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, int max_iter = 1000);

/// Yun's square-free decomposition of a dense rational polynomial (ascending
/// coefficients). Returns monic square-free, pairwise coprime factors with
/// their multiplicities; the constant content is dropped.
std::vector<std::pair<std::vector<Rational>, int>> square_free_decomposition(std::span<const Rational> coeffs);

/// Roots of p seen as t^{-deg2} p(t), together with the order of p at 0.
/// Exact polynomials go through square-free decomposition; float polynomials
/// merge numerical root clusters. Throws BadTolerance, UndefinedDegree, or
/// UncertifiedFactoring when the rebuilt product misses p by more than 100*tol.
RootFactorization roots_with_multiplicity(const LaurentPoly& p, double tol = kDefaultRootTolerance);

/// Best rational approximation with denominator <= max_den, accepted when it
/// lies within tol * max(1, |x|) of x.
std::optional<Rational> reconstruct_rational(double x, long max_den, double tol);

}  // namespace witt

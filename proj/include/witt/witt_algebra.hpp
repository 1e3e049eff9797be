#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

/// The Laurent vector field poly(t) * D, where D = t d/dt.
struct VectorField {
    LaurentPoly poly;

    Backend backend() const noexcept { return poly.backend(); }
    bool is_zero() const noexcept { return poly.is_zero(); }

    friend bool operator==(const VectorField&, const VectorField&) = default;
};

inline VectorField operator+(const VectorField& x, const VectorField& y) { return {x.poly + y.poly}; }
inline VectorField operator-(const VectorField& x, const VectorField& y) { return {x.poly - y.poly}; }
inline VectorField operator*(const Coefficient& c, const VectorField& x) { return {scale(x.poly, c)}; }

/// L_m = -t^m D.
VectorField L(int m, Backend backend = Backend::Exact);

/// [F D, G D] = (F theta(G) - G theta(F)) D.
VectorField bracket(const VectorField& x, const VectorField& y);

/// Coordinates x_m with x = sum x_m L_m.
std::map<int, Coefficient> to_L_basis(const VectorField& x);
VectorField from_L_basis(const std::map<int, Coefficient>& coords, Backend backend);

/// t^l D -> -t^{-l} D
VectorField omega(const VectorField& x);

/// t^l D -> s t^{sl} D; throws BadParameter for s < 1.
VectorField tau(int s, const VectorField& x);

inline constexpr double kDefaultSpanTolerance = 1e-9;

/// Coordinates c with x = sum c_i basis_i, or nothing when x is outside the
/// span. Basis elements must be nonzero.
std::optional<std::vector<Coefficient>> is_in_span(const VectorField& x, std::span<const VectorField> basis,
                                                   double tol = kDefaultSpanTolerance);

}  // namespace witt

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "witt/subalgebra.hpp"
#include "witt/witt_algebra.hpp"

namespace witt {

/// field + central * K
struct VirasoroElement {
    VectorField field;
    Coefficient central;

    VirasoroElement() : field{LaurentPoly(Backend::Exact)}, central(0) {}
    VirasoroElement(VectorField f, Coefficient k) : field(std::move(f)), central(std::move(k)) {}
    explicit VirasoroElement(VectorField f) : field(std::move(f)), central(Coefficient::zero(field.backend())) {}

    Backend backend() const noexcept { return field.backend(); }
    bool is_zero() const { return field.is_zero() && central.is_zero(); }
    friend bool operator==(const VirasoroElement&, const VirasoroElement&) = default;
};

VirasoroElement central_element(Backend backend = Backend::Exact);
VirasoroElement operator+(const VirasoroElement& x, const VirasoroElement& y);
VirasoroElement operator-(const VirasoroElement& x, const VirasoroElement& y);
VirasoroElement operator*(const Coefficient& c, const VirasoroElement& x);

/// (m^3 - m) / 12 when m + n = 0, else 0.
Rational cocycle(int m, int n);

VirasoroElement vir_bracket(const VirasoroElement& x, const VirasoroElement& y);

/// kappa / lambda from [P D, Q D] = lambda Q D + kappa K. Throws VerificationFailed.
Coefficient beta0(const MuSignature& mu, double tol = kDefaultBracketTolerance);

/// Coordinates of x in the span of basis (exact solve on the exact backend).
std::optional<std::vector<Coefficient>> vir_in_span(const VirasoroElement& x, std::span<const VirasoroElement> basis,
                                                    double tol = kDefaultSpanTolerance);
/// Every pairwise bracket lies in the span.
bool closes(std::span<const VirasoroElement> basis, double tol = kDefaultSpanTolerance);

// One alternative per family of finite-dimensional subalgebras.
struct Dim1 {  // C X
    VirasoroElement x;
};
struct Dim2a {  // C X + C K
    VectorField x;
};
struct Dim2b {  // span{L_0 + alpha K, L_m}
    int m = 1;
    Coefficient alpha;
};
struct Dim2c {  // span{P D + alpha K, Q D + beta0 K}
    MuSignature mu;
    Coefficient alpha;
    Coefficient beta0;
};
struct Dim3a {  // span{L_{-m}, L_0 + (m^2 - 1)/24 K, L_m}
    int m = 1;
    Rational beta() const;
};
struct Dim3b {  // z(m) + C K
    int m = 1;
};
struct Dim3c {  // s(mu) + C K
    MuSignature mu;
};
struct Dim4 {  // span{L_0, L_{-m}, L_m, K}
    int m = 1;
};

using FiniteSubalgebraDescriptor = std::variant<Dim1, Dim2a, Dim2b, Dim2c, Dim3a, Dim3b, Dim3c, Dim4>;

std::string family_name(const FiniteSubalgebraDescriptor& d);
int dimension(const FiniteSubalgebraDescriptor& d);
std::vector<VirasoroElement> basis(const FiniteSubalgebraDescriptor& d);

/// Zm -> Dim2b(m, alpha), Smu -> Dim2c(mu, alpha, beta0(mu)).
FiniteSubalgebraDescriptor lift_descriptor(const SubalgebraDescriptor& base, const Coefficient& alpha);
/// Dim3a(m) after checking closure exactly. Throws BadParameter for m = 0.
FiniteSubalgebraDescriptor lift_3dim(int m);
/// span{L_{-m}, L_0 + beta K, L_m} with an arbitrary beta.
std::vector<VirasoroElement> three_dim_basis(int m, const Coefficient& beta);

struct FamilyParams {
    int m = 1;
    Coefficient alpha{0};
    std::optional<MuSignature> mu;
    std::optional<VirasoroElement> x;
};

struct FamilyTemplate {
    std::string name;
    int dim = 0;
    std::string span;
    std::vector<std::string> slots;
    std::function<FiniteSubalgebraDescriptor(const FamilyParams&)> instantiate;
};

/// Families of subalgebras of the given dimension. Throws BadParameter
/// outside 1..4.
std::vector<FamilyTemplate> catalog(int dim);

}  // namespace witt

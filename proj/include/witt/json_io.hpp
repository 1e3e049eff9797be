#pragma once

#include "json.hpp"

#include "witt/classifier.hpp"
#include "witt/virasoro.hpp"
#include "witt/vr_solver.hpp"

namespace witt {

using Json = nlohmann::json;

// Exact coefficients are "p/q" (or "p"), float ones [re, im].
Json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

/// {"terms": [[e, coeff], ...]} with ascending exponents.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"poly": ...}
Json to_json(const VectorField& x);
VectorField field_from_json(const Json& j);
/// {"L": [[m, coeff], ...]}
Json to_L_json(const VectorField& x);

Json to_json(const RVector& r);
/// {"n", "k", "r", "a"}
Json to_json(const MuSignature& mu);
MuSignature mu_from_json(const Json& j, double tol = kDefaultMembershipTolerance);

Json to_json(const SubalgebraDescriptor& d);
SubalgebraDescriptor descriptor_from_json(const Json& j);

Json to_json(const ClassificationCertificate& c);

/// {"field": ..., "K": coeff}
Json to_json(const VirasoroElement& x);
VirasoroElement virasoro_from_json(const Json& j);

Json to_json(const FiniteSubalgebraDescriptor& d);
Json to_json(const FamilyTemplate& t);

Json to_json(const SolutionSet& s);
Json to_json(const SweepReport& r);

/// Parses text and maps syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace witt

#include "witt/witt_algebra.hpp"

#include <set>

#include "witt/linear.hpp"

namespace witt {

VectorField L(int m, Backend backend) {
    return {LaurentPoly::monomial(Coefficient::integer(-1, backend), m)};
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    require_same_backend(x.backend(), y.backend());
    return {x.poly * theta(y.poly) - y.poly * theta(x.poly)};
}

std::map<int, Coefficient> to_L_basis(const VectorField& x) {
    std::map<int, Coefficient> out;
    for (const auto& [e, c] : x.poly.terms()) out.emplace(e, -c);
    return out;
}

VectorField from_L_basis(const std::map<int, Coefficient>& coords, Backend backend) {
    LaurentPoly::TermMap terms;
    for (const auto& [m, c] : coords) terms.emplace(m, -c);
    return {LaurentPoly(backend, std::move(terms))};
}

VectorField omega(const VectorField& x) {
    return {-substitute_power(x.poly, -1)};
}

VectorField tau(int s, const VectorField& x) {
    if (s < 1) {
        throw Error(Errc::BadParameter, "tau_s needs s >= 1");
    }
    return {scale(substitute_power(x.poly, s), Coefficient::integer(s, x.backend()))};
}

std::optional<std::vector<Coefficient>> is_in_span(const VectorField& x, std::span<const VectorField> basis,
                                                   double tol) {
    std::set<int> exponents;
    for (const auto& [e, c] : x.poly.terms()) exponents.insert(e);
    for (const auto& b : basis) {
        if (b.is_zero()) {
            throw Error(Errc::BadParameter, "span basis contains the zero vector field");
        }
        require_same_backend(x.backend(), b.backend());
        for (const auto& [e, c] : b.poly.terms()) exponents.insert(e);
    }
    CoeffMatrix a;
    std::vector<Coefficient> rhs;
    for (int e : exponents) {
        std::vector<Coefficient> row;
        for (const auto& b : basis) row.push_back(b.poly.coefficient(e));
        a.push_back(std::move(row));
        rhs.push_back(x.poly.coefficient(e));
    }
    if (basis.empty()) {
        return x.is_zero() ? std::optional<std::vector<Coefficient>>(std::vector<Coefficient>{}) : std::nullopt;
    }
    auto sol = solve_linear(a, rhs, x.backend(), tol);
    if (!sol) return std::nullopt;
    return std::move(sol->coords);
}

}  // namespace witt

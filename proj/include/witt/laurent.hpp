#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "witt/coefficient.hpp"

namespace witt {

/// Sparse Laurent polynomial sum_m c_m t^m. Zero coefficients are never
/// stored, so the zero polynomial is the empty map. Every coefficient shares
/// the polynomial's backend.
class LaurentPoly {
public:
    using TermMap = std::map<int, Coefficient>;

    explicit LaurentPoly(Backend backend = Backend::Exact) : backend_(backend) {}
    /// Backend taken from the coefficients (exact when the list is empty).
    LaurentPoly(std::initializer_list<std::pair<const int, Coefficient>> terms);
    LaurentPoly(Backend backend, TermMap terms);

    static LaurentPoly monomial(const Coefficient& c, int exponent);
    static LaurentPoly constant(const Coefficient& c) { return monomial(c, 0); }
    /// t - root
    static LaurentPoly linear(const Coefficient& root);

    Backend backend() const noexcept { return backend_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Coefficient coefficient(int exponent) const;

    LaurentPoly to_backend(Backend target) const;
    LaurentPoly to_float() const { return to_backend(Backend::Float); }

    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        return lhs.backend_ == rhs.backend_ && lhs.terms_ == rhs.terms_;
    }

private:
    Backend backend_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, const Coefficient& c);
/// Multiplies by t^k.
LaurentPoly shift(const LaurentPoly& p, int k);
LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }
inline LaurentPoly operator*(const Coefficient& c, const LaurentPoly& p) { return scale(p, c); }
inline LaurentPoly operator-(const LaurentPoly& p) { return scale(p, Coefficient::integer(-1, p.backend())); }

/// Degree operator t d/dt: c t^m -> m c t^m.
LaurentPoly theta(const LaurentPoly& p);

/// Formal derivative d/dt.
LaurentPoly derivative(const LaurentPoly& p);

struct DegreeBounds {
    int deg1;  // highest exponent
    int deg2;  // lowest exponent
    friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

/// Throws UndefinedDegree on the zero polynomial.
DegreeBounds deg_bounds(const LaurentPoly& p);

Coefficient leading_coefficient(const LaurentPoly& p);
Coefficient lowest_coefficient(const LaurentPoly& p);

/// Returns (p / lambda, lambda) with lambda the coefficient of t^deg1.
std::pair<LaurentPoly, Coefficient> monic_normalize(const LaurentPoly& p);

/// Throws PoleAtZero when x = 0 and p has negative exponents.
Coefficient evaluate(const LaurentPoly& p, const Coefficient& x);

/// p(t^s) for any nonzero integer s; s = -1 reflects t -> 1/t.
LaurentPoly substitute_power(const LaurentPoly& p, int s);

/// Largest coefficient modulus (0 for the zero polynomial).
double max_norm(const LaurentPoly& p);

/// Max-coefficient distance, computed in complex arithmetic so the two
/// arguments may live on different backends.
double distance(const LaurentPoly& p, const LaurentPoly& q);

/// Drops float coefficients with modulus <= rel_tol * max_norm(p). Exact
/// polynomials are returned unchanged.
LaurentPoly chop(const LaurentPoly& p, double rel_tol);

std::string to_string(const LaurentPoly& p);

}  // namespace witt

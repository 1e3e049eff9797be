#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "witt/errors.hpp"

namespace witt {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Which arithmetic a coefficient (and every polynomial built from it) uses.
enum class Backend { Exact, Float };

std::string_view to_string(Backend backend) noexcept;

/// A scalar that is either an exact rational (always in lowest terms) or a
/// finite complex double. Arithmetic between the two backends is refused.
class Coefficient {
public:
    Coefficient() : value_(Rational(0)) {}
    Coefficient(int v) : value_(Rational(v)) {}
    Coefficient(long v) : value_(Rational(v)) {}
    Coefficient(Rational v);
    Coefficient(Complex v);

    static Coefficient rational(long numerator, long denominator);
    static Coefficient integer(long v, Backend backend);
    static Coefficient zero(Backend backend) { return integer(0, backend); }
    static Coefficient one(Backend backend) { return integer(1, backend); }
    /// Parses "p/q" or "p"; throws ParseError.
    static Coefficient parse_rational(std::string_view text);

    Backend backend() const noexcept {
        return std::holds_alternative<Rational>(value_) ? Backend::Exact : Backend::Float;
    }
    bool is_exact() const noexcept { return backend() == Backend::Exact; }
    bool is_zero() const;

    /// The rational value; throws BackendMismatch on a float coefficient.
    const Rational& exact() const;
    Complex to_complex() const;
    double abs() const { return std::abs(to_complex()); }

    /// Exact -> Float is always allowed; Float -> Exact throws BackendMismatch.
    Coefficient to_backend(Backend target) const;

    std::string to_string() const;

    Coefficient& operator+=(const Coefficient& rhs);
    Coefficient& operator-=(const Coefficient& rhs);
    Coefficient& operator*=(const Coefficient& rhs);
    Coefficient& operator/=(const Coefficient& rhs);

    friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
    friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
    friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
    friend Coefficient operator/(Coefficient lhs, const Coefficient& rhs) { return lhs /= rhs; }
    Coefficient operator-() const;

    friend bool operator==(const Coefficient& lhs, const Coefficient& rhs);

private:
    std::variant<Rational, Complex> value_;
};

void require_same_backend(Backend a, Backend b);

/// Integer power by repeated squaring; exponent may be negative for nonzero bases.
Coefficient power(const Coefficient& base, int exponent);

}  // namespace witt

#include "witt/coefficient.hpp"

#include <cmath>
#include <sstream>

namespace witt {

std::string_view to_string(Backend backend) noexcept {
    return backend == Backend::Exact ? "exact" : "float";
}

void require_same_backend(Backend a, Backend b) {
    if (a != b) {
        throw Error(Errc::BackendMismatch, "cannot combine exact and float coefficients");
    }
}

Coefficient::Coefficient(Rational v) : value_(std::move(v)) {
    std::get<Rational>(value_).canonicalize();
}

Coefficient::Coefficient(Complex v) : value_(v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(Errc::NonFinite, "complex coefficient is not finite");
    }
}

Coefficient Coefficient::rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw Error(Errc::DivisionByZero, "zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return Coefficient(std::move(q));
}

Coefficient Coefficient::integer(long v, Backend backend) {
    if (backend == Backend::Exact) {
        return Coefficient(Rational(v));
    }
    return Coefficient(Complex(static_cast<double>(v), 0.0));
}

Coefficient Coefficient::parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw Error(Errc::ParseError, "malformed rational '" + s + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    Rational q;
    q.get_num() = mpz_class(num);
    q.get_den() = mpz_class(den);
    if (q.get_den() == 0) {
        throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return Coefficient(std::move(q));
}

bool Coefficient::is_zero() const {
    if (auto q = std::get_if<Rational>(&value_)) {
        return sgn(*q) == 0;
    }
    return std::get<Complex>(value_) == Complex(0.0, 0.0);
}

const Rational& Coefficient::exact() const {
    if (auto q = std::get_if<Rational>(&value_)) {
        return *q;
    }
    throw Error(Errc::BackendMismatch, "coefficient is not exact");
}

Complex Coefficient::to_complex() const {
    if (auto q = std::get_if<Rational>(&value_)) {
        return {q->get_d(), 0.0};
    }
    return std::get<Complex>(value_);
}

Coefficient Coefficient::to_backend(Backend target) const {
    if (backend() == target) return *this;
    if (target == Backend::Float) return Coefficient(to_complex());
    throw Error(Errc::BackendMismatch, "float coefficient cannot be made exact");
}

std::string Coefficient::to_string() const {
    if (auto q = std::get_if<Rational>(&value_)) {
        return q->get_str();
    }
    const Complex z = std::get<Complex>(value_);
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) {
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
    require_same_backend(backend(), rhs.backend());
    if (is_exact()) {
        std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
    } else {
        *this = Coefficient(std::get<Complex>(value_) + std::get<Complex>(rhs.value_));
    }
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
    require_same_backend(backend(), rhs.backend());
    if (is_exact()) {
        std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
    } else {
        *this = Coefficient(std::get<Complex>(value_) - std::get<Complex>(rhs.value_));
    }
    return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
    require_same_backend(backend(), rhs.backend());
    if (is_exact()) {
        std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
    } else {
        *this = Coefficient(std::get<Complex>(value_) * std::get<Complex>(rhs.value_));
    }
    return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& rhs) {
    require_same_backend(backend(), rhs.backend());
    if (rhs.is_zero()) {
        throw Error(Errc::DivisionByZero, "division by zero coefficient");
    }
    if (is_exact()) {
        std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
    } else {
        *this = Coefficient(std::get<Complex>(value_) / std::get<Complex>(rhs.value_));
    }
    return *this;
}

Coefficient Coefficient::operator-() const {
    if (is_exact()) {
        return Coefficient(Rational(-std::get<Rational>(value_)));
    }
    return Coefficient(-std::get<Complex>(value_));
}

bool operator==(const Coefficient& lhs, const Coefficient& rhs) {
    if (lhs.backend() != rhs.backend()) return false;
    if (lhs.is_exact()) {
        return std::get<Rational>(lhs.value_) == std::get<Rational>(rhs.value_);
    }
    return std::get<Complex>(lhs.value_) == std::get<Complex>(rhs.value_);
}

Coefficient power(const Coefficient& base, int exponent) {
    if (exponent < 0) {
        return power(Coefficient::one(base.backend()) / base, -exponent);
    }
    Coefficient result = Coefficient::one(base.backend());
    Coefficient b = base;
    unsigned e = static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

}  // namespace witt

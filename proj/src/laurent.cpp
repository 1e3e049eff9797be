#include "witt/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace witt {

namespace {

void insert_term(LaurentPoly::TermMap& terms, int exponent, const Coefficient& c) {
    auto [it, inserted] = terms.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
    }
    if (it->second.is_zero()) {
        terms.erase(it);
    }
}

}  // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Coefficient>> terms)
    : backend_(terms.size() == 0 ? Backend::Exact : terms.begin()->second.backend()) {
    for (const auto& [e, c] : terms) {
        require_same_backend(backend_, c.backend());
        insert_term(terms_, e, c);
    }
}

LaurentPoly::LaurentPoly(Backend backend, TermMap terms) : backend_(backend), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        require_same_backend(backend_, it->second.backend());
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

LaurentPoly LaurentPoly::monomial(const Coefficient& c, int exponent) {
    LaurentPoly p(c.backend());
    if (!c.is_zero()) {
        p.terms_.emplace(exponent, c);
    }
    return p;
}

LaurentPoly LaurentPoly::linear(const Coefficient& root) {
    return LaurentPoly(root.backend(), {{1, Coefficient::one(root.backend())}, {0, -root}});
}

Coefficient LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coefficient::zero(backend_) : it->second;
}

LaurentPoly LaurentPoly::to_backend(Backend target) const {
    if (target == backend_) return *this;
    TermMap out;
    for (const auto& [e, c] : terms_) {
        out.emplace(e, c.to_backend(target));
    }
    return LaurentPoly(target, std::move(out));
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_backend(p.backend(), q.backend());
    LaurentPoly::TermMap terms = p.terms();
    for (const auto& [e, c] : q.terms()) {
        insert_term(terms, e, c);
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_backend(p.backend(), q.backend());
    LaurentPoly::TermMap terms = p.terms();
    for (const auto& [e, c] : q.terms()) {
        insert_term(terms, e, -c);
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_backend(p.backend(), q.backend());
    LaurentPoly::TermMap terms;
    for (const auto& [e1, c1] : p.terms()) {
        for (const auto& [e2, c2] : q.terms()) {
            insert_term(terms, e1 + e2, c1 * c2);
        }
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly scale(const LaurentPoly& p, const Coefficient& c) {
    require_same_backend(p.backend(), c.backend());
    LaurentPoly::TermMap terms;
    if (!c.is_zero()) {
        for (const auto& [e, v] : p.terms()) {
            terms.emplace(e, v * c);
        }
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly shift(const LaurentPoly& p, int k) {
    LaurentPoly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        terms.emplace(e + k, c);
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
    LaurentPoly result = LaurentPoly::constant(Coefficient::one(p.backend()));
    LaurentPoly base = p;
    while (exponent != 0) {
        if (exponent & 1u) result = mul(result, base);
        exponent >>= 1;
        if (exponent != 0) base = mul(base, base);
    }
    return result;
}

LaurentPoly theta(const LaurentPoly& p) {
    LaurentPoly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        if (e != 0) {
            terms.emplace(e, c * Coefficient::integer(e, p.backend()));
        }
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

LaurentPoly derivative(const LaurentPoly& p) {
    return shift(theta(p), -1);
}

DegreeBounds deg_bounds(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw Error(Errc::UndefinedDegree, "degree of the zero polynomial");
    }
    return {p.terms().rbegin()->first, p.terms().begin()->first};
}

Coefficient leading_coefficient(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw Error(Errc::UndefinedDegree, "leading coefficient of the zero polynomial");
    }
    return p.terms().rbegin()->second;
}

Coefficient lowest_coefficient(const LaurentPoly& p) {
    if (p.is_zero()) {
        throw Error(Errc::UndefinedDegree, "lowest coefficient of the zero polynomial");
    }
    return p.terms().begin()->second;
}

std::pair<LaurentPoly, Coefficient> monic_normalize(const LaurentPoly& p) {
    Coefficient lambda = leading_coefficient(p);
    return {scale(p, Coefficient::one(p.backend()) / lambda), lambda};
}

Coefficient evaluate(const LaurentPoly& p, const Coefficient& x) {
    require_same_backend(p.backend(), x.backend());
    if (p.is_zero()) return Coefficient::zero(p.backend());
    const auto [hi, lo] = deg_bounds(p);
    if (lo < 0 && x.is_zero()) {
        throw Error(Errc::PoleAtZero, "evaluating a negative power at t = 0");
    }
    // Horner over the ordinary polynomial t^{-lo} p(t), then rescale.
    Coefficient acc = Coefficient::zero(p.backend());
    for (int e = hi; e >= lo; --e) {
        acc = acc * x + p.coefficient(e);
    }
    return lo == 0 ? acc : acc * power(x, lo);
}

LaurentPoly substitute_power(const LaurentPoly& p, int s) {
    if (s == 0) {
        throw Error(Errc::BadParameter, "substitution t -> t^0 is not allowed");
    }
    LaurentPoly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        terms.emplace(e * s, c);
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

double max_norm(const LaurentPoly& p) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms()) {
        m = std::max(m, c.abs());
    }
    return m;
}

double distance(const LaurentPoly& p, const LaurentPoly& q) {
    std::map<int, Complex> diff;
    for (const auto& [e, c] : p.terms()) diff[e] += c.to_complex();
    for (const auto& [e, c] : q.terms()) diff[e] -= c.to_complex();
    double m = 0.0;
    for (const auto& [e, z] : diff) m = std::max(m, std::abs(z));
    return m;
}

LaurentPoly chop(const LaurentPoly& p, double rel_tol) {
    if (p.backend() == Backend::Exact) return p;
    const double cut = rel_tol * max_norm(p);
    LaurentPoly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        if (c.abs() > cut) terms.emplace(e, c);
    }
    return LaurentPoly(p.backend(), std::move(terms));
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        if (it->first != 0) os << "*t^" << it->first;
    }
    return os.str();
}

}  // namespace witt

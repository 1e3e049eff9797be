#include "witt/virasoro.hpp"

#include <set>

#include "witt/linear.hpp"

namespace witt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

VirasoroElement lm(int m, Backend b = Backend::Exact) { return VirasoroElement(L(m, b)); }

const MuSignature& need_mu(const FamilyParams& p) {
    if (!p.mu) throw Error(Errc::BadParameter, "family needs a mu signature");
    return *p.mu;
}

int need_m(const FamilyParams& p) {
    if (p.m == 0) throw Error(Errc::BadParameter, "m must be nonzero");
    return p.m;
}

}  // namespace

VirasoroElement central_element(Backend backend) {
    return {VectorField{LaurentPoly(backend)}, Coefficient::one(backend)};
}

VirasoroElement operator+(const VirasoroElement& x, const VirasoroElement& y) {
    return {x.field + y.field, x.central + y.central};
}

VirasoroElement operator-(const VirasoroElement& x, const VirasoroElement& y) {
    return {x.field - y.field, x.central - y.central};
}

VirasoroElement operator*(const Coefficient& c, const VirasoroElement& x) { return {c * x.field, c * x.central}; }

Rational cocycle(int m, int n) {
    if (m + n != 0) return Rational(0);
    Rational v(static_cast<long>(m) * m * m - m, 12);
    v.canonicalize();
    return v;
}

VirasoroElement vir_bracket(const VirasoroElement& x, const VirasoroElement& y) {
    require_same_backend(x.backend(), y.backend());
    require_same_backend(x.central.backend(), y.central.backend());
    const Backend b = x.backend();
    const VectorField field = bracket(x.field, y.field);
    const auto xs = to_L_basis(x.field);
    const auto ys = to_L_basis(y.field);
    Coefficient central = Coefficient::zero(b);
    for (const auto& [m, xm] : xs) {
        if (m == 0) continue;
        const auto it = ys.find(-m);
        if (it == ys.end()) continue;
        const Rational w = cocycle(m, -m);
        if (w == 0) continue;
        central += xm * it->second * Coefficient(w).to_backend(b);
    }
    return {field, central};
}

Coefficient beta0(const MuSignature& mu, double tol) {
    const LaurentPoly p = build_P(mu);
    const LaurentPoly q = build_Q(mu);
    const Coefficient lambda = c_mu(mu);
    const VirasoroElement br = vir_bracket(VirasoroElement(VectorField{p}), VirasoroElement(VectorField{q}));
    const LaurentPoly expected = scale(q, lambda);
    const bool ok = mu.backend() == Backend::Exact
                        ? br.field.poly == expected
                        : distance(br.field.poly, expected) <= tol * std::max(1.0, max_norm(expected));
    if (!ok) {
        throw Error(Errc::VerificationFailed, "field part of [P D, Q D] differs from c Q D");
    }
    return br.central / lambda;
}

std::optional<std::vector<Coefficient>> vir_in_span(const VirasoroElement& x, std::span<const VirasoroElement> basis,
                                                    double tol) {
    Backend backend = x.backend();
    for (const auto& e : basis) {
        if (e.backend() == Backend::Float) backend = Backend::Float;
    }
    std::set<int> exponents;
    for (const auto& [e, c] : x.field.poly.terms()) exponents.insert(e);
    for (const auto& v : basis) {
        for (const auto& [e, c] : v.field.poly.terms()) exponents.insert(e);
    }
    CoeffMatrix a;
    std::vector<Coefficient> rhs;
    auto conv = [&](const Coefficient& c) { return c.to_backend(backend); };
    for (int e : exponents) {
        std::vector<Coefficient> row;
        for (const auto& v : basis) row.push_back(conv(v.field.poly.coefficient(e)));
        a.push_back(std::move(row));
        rhs.push_back(conv(x.field.poly.coefficient(e)));
    }
    std::vector<Coefficient> krow;
    for (const auto& v : basis) krow.push_back(conv(v.central));
    a.push_back(std::move(krow));
    rhs.push_back(conv(x.central));
    if (basis.empty()) {
        return x.is_zero() ? std::optional<std::vector<Coefficient>>(std::vector<Coefficient>{}) : std::nullopt;
    }
    auto sol = solve_linear(a, rhs, backend, tol);
    if (!sol) return std::nullopt;
    return std::move(sol->coords);
}

bool closes(std::span<const VirasoroElement> basis, double tol) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!vir_in_span(vir_bracket(basis[i], basis[j]), basis, tol)) return false;
        }
    }
    return true;
}

Rational Dim3a::beta() const {
    Rational v(static_cast<long>(m) * m - 1, 24);
    v.canonicalize();
    return v;
}

std::string family_name(const FiniteSubalgebraDescriptor& d) {
    static const char* names[] = {"Dim1", "Dim2a", "Dim2b", "Dim2c", "Dim3a", "Dim3b", "Dim3c", "Dim4"};
    return names[d.index()];
}

int dimension(const FiniteSubalgebraDescriptor& d) {
    static const int dims[] = {1, 2, 2, 2, 3, 3, 3, 4};
    return dims[d.index()];
}

std::vector<VirasoroElement> three_dim_basis(int m, const Coefficient& beta) {
    return {lm(-m), lm(0) + beta * central_element(), lm(m)};
}

std::vector<VirasoroElement> basis(const FiniteSubalgebraDescriptor& d) {
    return std::visit(
        Overloaded{
            [](const Dim1& v) { return std::vector<VirasoroElement>{v.x}; },
            [](const Dim2a& v) {
                return std::vector<VirasoroElement>{VirasoroElement(v.x), central_element(v.x.backend())};
            },
            [](const Dim2b& v) {
                const Backend b = v.alpha.backend();
                return std::vector<VirasoroElement>{lm(0, b) + v.alpha * central_element(b), lm(v.m, b)};
            },
            [](const Dim2c& v) {
                const Backend b = v.mu.backend();
                return std::vector<VirasoroElement>{
                    VirasoroElement(VectorField{build_P(v.mu)}, v.alpha.to_backend(b)),
                    VirasoroElement(VectorField{build_Q(v.mu)}, v.beta0.to_backend(b))};
            },
            [](const Dim3a& v) { return three_dim_basis(v.m, Coefficient(v.beta())); },
            [](const Dim3b& v) {
                return std::vector<VirasoroElement>{lm(0), lm(v.m), central_element()};
            },
            [](const Dim3c& v) {
                const Backend b = v.mu.backend();
                return std::vector<VirasoroElement>{VirasoroElement(VectorField{build_P(v.mu)}),
                                                    VirasoroElement(VectorField{build_Q(v.mu)}),
                                                    central_element(b)};
            },
            [](const Dim4& v) {
                return std::vector<VirasoroElement>{lm(0), lm(-v.m), lm(v.m), central_element()};
            },
        },
        d);
}

FiniteSubalgebraDescriptor lift_descriptor(const SubalgebraDescriptor& base, const Coefficient& alpha) {
    if (const auto* z = std::get_if<Zm>(&base)) {
        return Dim2b{z->m, alpha};
    }
    const auto& s = std::get<Smu>(base);
    Coefficient a = alpha;
    if (s.mu.backend() == Backend::Float) a = a.to_backend(Backend::Float);
    return Dim2c{s.mu, a, beta0(s.mu)};
}

FiniteSubalgebraDescriptor lift_3dim(int m) {
    if (m == 0) {
        throw Error(Errc::BadParameter, "lift_3dim needs m != 0");
    }
    Dim3a d{m};
    const auto b = basis(d);
    if (!closes(b)) {
        throw Error(Errc::VerificationFailed, "span{L_-m, L_0 + beta K, L_m} does not close");
    }
    return d;
}

std::vector<FamilyTemplate> catalog(int dim) {
    switch (dim) {
        case 1:
            return {{"Dim1", 1, "C X", {"X"}, [](const FamilyParams& p) -> FiniteSubalgebraDescriptor {
                         if (!p.x || p.x->is_zero()) throw Error(Errc::BadParameter, "X must be nonzero");
                         return Dim1{*p.x};
                     }}};
        case 2:
            return {
                {"Dim2a", 2, "C X + C K", {"X"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor {
                     if (!p.x || p.x->field.is_zero()) throw Error(Errc::BadParameter, "X must be a nonzero field");
                     return Dim2a{p.x->field};
                 }},
                {"Dim2b", 2, "span{L_0 + alpha K, L_m}", {"m", "alpha"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor { return Dim2b{need_m(p), p.alpha}; }},
                {"Dim2c", 2, "span{P_mu D + alpha K, Q_mu D + beta0 K}", {"mu", "alpha"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor {
                     return lift_descriptor(build_subalgebra(need_mu(p)), p.alpha);
                 }},
            };
        case 3:
            return {
                {"Dim3a", 3, "span{L_-m, L_0 + (m^2 - 1)/24 K, L_m}", {"m"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor { return lift_3dim(need_m(p)); }},
                {"Dim3b", 3, "z(m) + C K", {"m"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor { return Dim3b{need_m(p)}; }},
                {"Dim3c", 3, "s(mu) + C K", {"mu"},
                 [](const FamilyParams& p) -> FiniteSubalgebraDescriptor { return Dim3c{need_mu(p)}; }},
            };
        case 4:
            return {{"Dim4", 4, "span{L_0, L_-m, L_m, K}", {"m"},
                     [](const FamilyParams& p) -> FiniteSubalgebraDescriptor { return Dim4{need_m(p)}; }}};
        default:
            throw Error(Errc::BadParameter, "finite-dimensional subalgebras have dimension 1..4");
    }
}

}  // namespace witt

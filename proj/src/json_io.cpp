#include "witt/json_io.hpp"

#include <cmath>

namespace witt {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

Json residual_json(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json coefficient_list(const std::vector<Coefficient>& a) {
    Json out = Json::array();
    for (const auto& v : a) out.push_back(to_json(v));
    return out;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const Coefficient& c) {
    if (c.is_exact()) return c.exact().get_str();
    const Complex z = c.to_complex();
    return Json::array({z.real(), z.imag()});
}

Coefficient coefficient_from_json(const Json& j) {
    if (j.is_string()) return Coefficient::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Coefficient(j.get<long>());
    if (j.is_number()) return Coefficient(Complex(j.get<double>(), 0.0));
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return Coefficient(Complex(j[0].get<double>(), j[1].get<double>()));
    }
    bad("coefficient must be \"p/q\" or [re, im]");
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_json(c)}));
    Json out{{"terms", terms}};
    if (p.is_zero() && p.backend() == Backend::Float) out["backend"] = "float";
    return out;
}

LaurentPoly poly_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("\"terms\" must be an array");
    Backend backend = Backend::Exact;
    if (j.contains("backend")) {
        const auto name = j.at("backend").get<std::string>();
        if (name == "float") {
            backend = Backend::Float;
        } else if (name != "exact") {
            bad("backend must be \"exact\" or \"float\"");
        }
    }
    std::vector<std::pair<int, Coefficient>> parsed;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) bad("each term must be [exponent, coefficient]");
        parsed.emplace_back(as_int(t[0], "exponent"), coefficient_from_json(t[1]));
        if (!parsed.back().second.is_exact()) backend = Backend::Float;
    }
    LaurentPoly::TermMap map;
    for (auto& [e, c] : parsed) {
        Coefficient v = c.to_backend(backend);
        auto [it, inserted] = map.emplace(e, v);
        if (!inserted) it->second += v;
    }
    return LaurentPoly(backend, std::move(map));
}

Json to_json(const VectorField& x) { return {{"poly", to_json(x.poly)}}; }

VectorField field_from_json(const Json& j) {
    if (j.is_object() && j.contains("poly")) return {poly_from_json(j.at("poly"))};
    return {poly_from_json(j)};
}

Json to_L_json(const VectorField& x) {
    Json coords = Json::array();
    for (const auto& [m, c] : to_L_basis(x)) coords.push_back(Json::array({m, to_json(c)}));
    return {{"L", coords}};
}

Json to_json(const RVector& r) { return r.r; }

Json to_json(const MuSignature& mu) {
    return {{"n", mu.n()}, {"k", mu.k()}, {"r", mu.r.r}, {"a", coefficient_list(mu.a)}};
}

MuSignature mu_from_json(const Json& j, double tol) {
    const int n = as_int(field(j, "n"), "n");
    const int k = as_int(field(j, "k"), "k");
    const Json& rj = field(j, "r");
    const Json& aj = field(j, "a");
    if (!rj.is_array() || !aj.is_array()) bad("\"r\" and \"a\" must be arrays");
    std::vector<int> r;
    for (const auto& v : rj) r.push_back(as_int(v, "r entry"));
    std::vector<Coefficient> a;
    for (const auto& v : aj) a.push_back(coefficient_from_json(v));
    if (static_cast<int>(r.size()) != n || static_cast<int>(a.size()) != n) {
        throw Error(Errc::BadParameter, "\"r\" and \"a\" must have n entries");
    }
    return make_mu(n, k, std::move(r), std::move(a), tol);
}

Json to_json(const SubalgebraDescriptor& d) {
    return std::visit(Overloaded{
                          [](const Zm& z) { return Json{{"kind", "Zm"}, {"m", z.m}}; },
                          [](const Smu& s) {
                              return Json{{"kind", "Smu"},
                                          {"mu", to_json(s.mu)},
                                          {"P", to_json(s.P)},
                                          {"Q", to_json(s.Q)},
                                          {"c", to_json(s.c)},
                                          {"bracket_residual", s.bracket_residual}};
                          },
                      },
                      d);
}

SubalgebraDescriptor descriptor_from_json(const Json& j) {
    const Json& kind = field(j, "kind");
    if (kind == "Zm") {
        const int m = as_int(field(j, "m"), "m");
        if (m == 0) throw Error(Errc::BadParameter, "Zm needs m != 0");
        return Zm{m};
    }
    if (kind == "Smu") return build_subalgebra(mu_from_json(field(j, "mu")));
    bad("descriptor kind must be \"Zm\" or \"Smu\"");
}

Json to_json(const ClassificationCertificate& c) {
    Json out{{"eigenvalue", to_json(c.eigenvalue)},
             {"residuals",
              {{"closure", c.closure_residual}, {"factor", c.factor_residual}, {"bracket", c.bracket_residual}}}};
    if (c.recovered) {
        out["recovered"] = {{"n", c.recovered->n}, {"k", c.recovered->k}, {"r", c.recovered->r}};
        out["abs_r_at_least_k"] = c.abs_r_bound;
    }
    return out;
}

Json to_json(const VirasoroElement& x) { return {{"field", to_json(x.field)}, {"K", to_json(x.central)}}; }

VirasoroElement virasoro_from_json(const Json& j) {
    VectorField f = field_from_json(field(j, "field"));
    Coefficient k = j.contains("K") ? coefficient_from_json(j.at("K")) : Coefficient::zero(f.backend());
    if (f.backend() == Backend::Float) k = k.to_backend(Backend::Float);
    if (f.backend() == Backend::Exact && !k.is_exact()) f = {f.poly.to_float()};
    return {f, k};
}

Json to_json(const FiniteSubalgebraDescriptor& d) {
    Json out{{"family", family_name(d)}, {"dim", dimension(d)}};
    std::visit(Overloaded{
                   [&](const Dim1&) {},
                   [&](const Dim2a&) {},
                   [&](const Dim2b& v) {
                       out["m"] = v.m;
                       out["alpha"] = to_json(v.alpha);
                   },
                   [&](const Dim2c& v) {
                       out["mu"] = to_json(v.mu);
                       out["alpha"] = to_json(v.alpha);
                       out["beta0"] = to_json(v.beta0);
                   },
                   [&](const Dim3a& v) {
                       out["m"] = v.m;
                       out["beta"] = v.beta().get_str();
                   },
                   [&](const Dim3b& v) { out["m"] = v.m; },
                   [&](const Dim3c& v) { out["mu"] = to_json(v.mu); },
                   [&](const Dim4& v) { out["m"] = v.m; },
               },
               d);
    Json b = Json::array();
    for (const auto& e : basis(d)) b.push_back(to_json(e));
    out["basis"] = b;
    return out;
}

Json to_json(const FamilyTemplate& t) {
    return {{"family", t.name}, {"dim", t.dim}, {"span", t.span}, {"slots", t.slots}};
}

Json to_json(const SolutionSet& s) {
    Json sols = Json::array();
    for (const auto& p : s.solutions) {
        sols.push_back({{"a", coefficient_list(p.a)}, {"residual", p.residual}, {"jacobian_rank", p.jacobian_rank}});
    }
    return {{"r", s.r.r},
            {"n", s.r.n},
            {"k", s.r.k},
            {"count", s.solutions.size()},
            {"orbits", s.orbit_count},
            {"bound", projective_bound(s.r.n)},
            {"complete", s.complete},
            {"reason", s.reason},
            {"seed", s.seed},
            {"starts_used", s.starts_used},
            {"solutions", sols}};
}

Json to_json(const SweepReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"n", e.r.n},
                           {"k", e.r.k},
                           {"r", e.r.r},
                           {"found", e.found},
                           {"orbits", e.orbits},
                           {"bound", e.bound},
                           {"expected", e.expected ? Json(*e.expected) : Json(nullptr)},
                           {"empty", e.empty},
                           {"best_residual", residual_json(e.best_residual)}});
    }
    return entries;
}

}  // namespace witt

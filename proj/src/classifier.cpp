#include "witt/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "witt/roots.hpp"

namespace witt {

namespace {

constexpr double kRootMatchTolerance = 1e-7;
constexpr double kIntegerSnap = 1e-6;
constexpr double kReconstructionTolerance = 1e-7;
// roundoff level; tol-level chopping would eat genuine small coefficients of Q
constexpr double kNoiseChop = 1e-13;

VectorField cleaned(const VectorField& x, double tol) {
    return x.backend() == Backend::Exact ? x : VectorField{chop(x.poly, tol)};
}

// Removes the t^e term of x using y, then zeroes it explicitly.
VectorField cancel_at(const VectorField& x, const VectorField& y, int e) {
    const Coefficient ratio = x.poly.coefficient(e) / y.poly.coefficient(e);
    auto terms = (x - ratio * y).poly.terms();
    terms.erase(e);
    return {LaurentPoly(x.backend(), std::move(terms))};
}

double relative_distance(const LaurentPoly& p, const LaurentPoly& q) {
    return distance(p, q) / std::max(1.0, max_norm(q));
}

struct Factored {
    std::vector<Coefficient> a;
    std::vector<int> r;
    double residual = 0.0;
};

[[noreturn]] void violation(const std::string& what) { throw Error(Errc::StructureViolation, what); }

int snap_integer(Complex z) {
    const double re = std::round(z.real());
    if (std::abs(z - Complex(re, 0.0)) > kIntegerSnap * std::max(1.0, std::abs(re))) {
        violation("recovered exponent is not an integer");
    }
    return static_cast<int>(re);
}

// Roots of F and their exponents r_i; asserts the root facts of the eigenbasis.
Factored factor_pair(const LaurentPoly& f, const LaurentPoly& g, const Coefficient& c, int abs_r, double tol) {
    const auto froots = roots_with_multiplicity(f, std::max(tol, kDefaultRootTolerance));
    if (froots.zero_order != 0) violation("F vanishes at 0");
    Factored out;
    const bool exact_roots = f.backend() == Backend::Exact &&
                             std::all_of(froots.roots.begin(), froots.roots.end(),
                                         [](const RootMultiplicity& m) { return m.exact.has_value(); });
    for (const auto& root : froots.roots) {
        if (root.multiplicity != 1) violation("F has a multiple root");
        if (exact_roots) {
            out.a.emplace_back(*root.exact);
        } else {
            out.a.emplace_back(root.root);
        }
    }

    if (g.backend() == Backend::Exact) {
        // Multiplicities from the square-free decomposition of G.
        const auto groots = roots_with_multiplicity(g, kDefaultRootTolerance);
        out.r.assign(out.a.size(), -1);
        for (const auto& gr : groots.roots) {
            if (gr.multiplicity == 1) violation("G has a simple nonzero root");
            std::size_t best = out.a.size();
            double best_d = kRootMatchTolerance;
            for (std::size_t i = 0; i < out.a.size(); ++i) {
                const double d = std::abs(out.a[i].to_complex() - gr.root);
                if (d <= best_d) best = i, best_d = d;
            }
            if (best == out.a.size()) violation("G has a root that is not a root of F");
            if (out.r[best] != -1) violation("two roots of G match one root of F");
            out.r[best] = gr.multiplicity - 1;
        }
    } else {
        const LaurentPoly df = derivative(f);
        for (const auto& ai : out.a) {
            const Complex z = ai.to_complex();
            const Complex denom = z * evaluate(df, Coefficient(z)).to_complex();
            const int ri = snap_integer(c.to_complex() / denom);
            if (ri == 0 || ri < -1) violation("G has a simple nonzero root");
            out.r.push_back(ri);
        }
    }

    int sum = 0;
    for (int ri : out.r) sum += ri;
    if (sum != abs_r) violation("exponents do not add up to -deg2(Y)");

    // Rebuild t^{-|r|} prod (t - a_i)^{r_i + 1} and compare with Y.
    LaurentPoly rebuilt = LaurentPoly::monomial(Coefficient::one(out.a.front().backend()), -abs_r);
    for (std::size_t i = 0; i < out.a.size(); ++i) {
        if (out.r[i] >= 1) rebuilt = rebuilt * pow(LaurentPoly::linear(out.a[i]), static_cast<unsigned>(out.r[i] + 1));
    }
    out.residual = relative_distance(rebuilt, g);
    if (out.residual > kReconstructionTolerance) violation("Y does not factor as t^{-|r|} prod (t - a_i)^{r_i + 1}");
    return out;
}

}  // namespace

ClosureCoords closure_check(const SpanInput& input) {
    require_tolerance(input.tol);
    require_same_backend(input.a.backend(), input.b.backend());
    const VectorField a = cleaned(input.a, kNoiseChop);
    const VectorField b = cleaned(input.b, kNoiseChop);
    if (a.is_zero() || b.is_zero()) {
        throw Error(Errc::NotIndependent, "span contains the zero vector field");
    }
    const VectorField one[] = {a};
    if (is_in_span(b, one, input.tol)) {
        throw Error(Errc::NotIndependent, "basis elements are proportional");
    }
    const VectorField br = cleaned(bracket(a, b), kNoiseChop);
    const double scale = max_norm(a.poly) * max_norm(b.poly);
    if (br.is_zero() || (br.backend() == Backend::Float && max_norm(br.poly) <= 1e-9 * scale)) {
        throw Error(Errc::AbelianContradiction, "[A, B] vanishes for independent A, B");
    }
    const VectorField basis[] = {a, b};
    auto coords = is_in_span(br, basis, input.tol);
    if (!coords) {
        throw Error(Errc::NotClosed, "[A, B] is not in span{A, B}");
    }
    return {(*coords)[0], (*coords)[1]};
}

EigenBasis eigen_basis(const SpanInput& input) {
    const auto [alpha, beta] = closure_check(input);
    const VectorField a = cleaned(input.a, kNoiseChop);
    const VectorField b = cleaned(input.b, kNoiseChop);
    const VectorField y0 = alpha * a + beta * b;
    auto [ypoly, ylead] = monic_normalize(y0.poly);
    VectorField y{ypoly};

    // [A, Y0] = beta Y0 and [B, Y0] = -alpha Y0.
    const bool use_a = beta.is_exact() ? !beta.is_zero() : beta.abs() >= alpha.abs();
    VectorField x = use_a ? a : b;
    Coefficient c = use_a ? beta : -alpha;

    const auto yd = deg_bounds(y.poly);
    if (deg_bounds(x.poly).deg2 == yd.deg2) x = cancel_at(x, y, yd.deg2);
    if (!x.is_zero() && yd.deg2 > 0 && deg_bounds(x.poly).deg1 == yd.deg1) x = cancel_at(x, y, yd.deg1);
    x = cleaned(x, input.tol);
    if (x.is_zero()) {
        throw Error(Errc::NotIndependent, "span collapsed while reducing X");
    }
    auto [xpoly, xlead] = monic_normalize(x.poly);
    c /= xlead;
    return {{xpoly}, y, c};
}

Classification classify_with_certificate(const SpanInput& input) {
    const EigenBasis eb = eigen_basis(input);
    Classification out;
    auto& cert = out.certificate;
    cert.eigenvalue = eb.c;
    cert.closure_residual = relative_distance(bracket(eb.x, eb.y).poly, (eb.c * eb.y).poly);

    const auto da = deg_bounds(cleaned(input.a, kNoiseChop).poly);
    const auto db = deg_bounds(cleaned(input.b, kNoiseChop).poly);
    const bool plus = da.deg2 >= 0 && db.deg2 >= 0;
    const bool minus = da.deg1 <= 0 && db.deg1 <= 0;
    const auto xd = deg_bounds(eb.x.poly);
    const auto yd = deg_bounds(eb.y.poly);

    if (plus || minus) {
        if (eb.x.poly.size() != 1 || xd.deg1 != 0 || eb.y.poly.size() != 1 || yd.deg1 == 0) {
            violation("span inside a half algebra is not of the form span{D, t^m D}");
        }
        out.descriptor = Zm{yd.deg1};
        return out;
    }

    if (xd.deg2 != 0) violation("no element with deg2 = 0 after reduction");
    if (xd.deg1 != yd.deg1 || xd.deg1 <= 0) violation("deg1(X) and deg1(Y) differ or are not positive");
    if (yd.deg2 >= 0) violation("deg2(Y) must be negative");
    const int n = xd.deg1;
    const int abs_r = -yd.deg2;

    Factored fac = factor_pair(eb.x.poly, eb.y.poly, eb.c, abs_r, input.tol);
    cert.factor_residual = fac.residual;

    // Positive exponents first.
    std::vector<std::size_t> order(fac.a.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return fac.r[i] >= 1; });
    std::vector<int> r;
    std::vector<Coefficient> a;
    for (std::size_t i : order) {
        r.push_back(fac.r[i]);
        a.push_back(fac.a[i]);
    }
    const int k = static_cast<int>(std::count_if(r.begin(), r.end(), [](int v) { return v >= 1; }));
    cert.abs_r_bound = abs_r >= k;
    if (!cert.abs_r_bound) violation("|r| < k contradicts the reflected degree bound");
    if (static_cast<int>(a.size()) != n) violation("F does not have deg1(X) roots");

    MuSignature mu;
    try {
        mu = make_mu(RVector::make(n, k, r), std::move(a), 1e-8);
    } catch (const Error& e) {
        throw Error(Errc::ValidationFailed, std::string("recovered signature rejected: ") + e.what());
    }
    mu = canonicalize_mu(mu);
    cert.recovered = mu.r;
    Smu s = build_subalgebra(mu, 1e-7);
    cert.bracket_residual = s.bracket_residual;
    out.descriptor = std::move(s);
    return out;
}

SubalgebraDescriptor classify(const SpanInput& input) { return classify_with_certificate(input).descriptor; }

BasisChange random_basis_change(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-5, 5);
    while (true) {
        const int m00 = entry(rng), m01 = entry(rng), m10 = entry(rng), m11 = entry(rng);
        if (m00 * m11 - m01 * m10 != 0) {
            return {{{Coefficient(m00), Coefficient(m01)}, {Coefficient(m10), Coefficient(m11)}}};
        }
    }
}

bool roundtrip_check(const MuSignature& mu, const BasisChange& change, double tol) {
    const Backend backend = mu.backend();
    const Smu expected = build_subalgebra(canonicalize_mu(mu));
    const VectorField p{expected.P}, q{expected.Q};
    auto conv = [&](const Coefficient& c) { return c.to_backend(backend); };
    SpanInput input{conv(change[0][0]) * p + conv(change[0][1]) * q, conv(change[1][0]) * p + conv(change[1][1]) * q};
    try {
        return descriptors_equal(classify(input), expected, tol);
    } catch (const Error&) {
        return false;
    }
}

bool roundtrip_check(const MuSignature& mu, std::uint64_t seed, double tol) {
    return roundtrip_check(mu, random_basis_change(seed), tol);
}

}  // namespace witt

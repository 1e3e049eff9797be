#include "witt/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace witt {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

RatPoly make_monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly q(std::max<std::size_t>(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Rational eval(const RatPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

struct HornerPair {
    Complex value;
    Complex slope;
};

HornerPair horner(std::span<const Complex> c, Complex z) {
    Complex p = c.back();
    Complex dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

std::vector<Complex> poly_from_roots(const std::vector<std::pair<Complex, int>>& roots, Complex leading) {
    std::vector<Complex> c{leading};
    for (const auto& [z, m] : roots) {
        for (int k = 0; k < m; ++k) {
            std::vector<Complex> next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= z * c[i];
            }
            c = std::move(next);
        }
    }
    return c;
}

// Coefficients of p(z + u) in powers of u.
std::vector<Complex> taylor_shift(std::vector<Complex> c, Complex z) {
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = n - 1; i > j; --i) c[i - 1] += z * c[i];
    }
    return c;
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Single-linkage clusters of the computed roots at radius rad * max(1, |z|).
std::vector<std::vector<std::size_t>> cluster(const std::vector<Complex>& roots, double rad) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
            if (std::abs(roots[i] - roots[j]) <= rad * scale) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return groups;
}

// Newton on p^(m-1), which has a simple root at an m-fold root of p.
Complex refine_cluster(const std::vector<Complex>& c, Complex z, int m) {
    if (m < 2) return z;
    for (int it = 0; it < 20; ++it) {
        const auto t = taylor_shift(c, z);
        const auto mm = static_cast<std::size_t>(m);
        if (mm >= t.size() || t[mm] == Complex(0.0)) break;
        const Complex step = t[mm - 1] / (static_cast<double>(m) * t[mm]);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

// A cluster of m computed roots with mean z is an m-fold root when the first
// m Taylor coefficients of p at z are negligible.
bool is_multiple_root(const std::vector<Complex>& c, Complex z, int m, double tol) {
    const auto t = taylor_shift(c, z);
    const int d = static_cast<int>(c.size()) - 1;
    const double az = std::abs(z);
    for (int j = 0; j < m; ++j) {
        double scale = 0.0;
        for (int i = j; i <= d; ++i) scale += std::abs(c[i]) * binomial(i, j) * std::pow(az, i - j);
        if (std::abs(t[j]) > tol * scale) return false;
    }
    return true;
}

}  // namespace

int RootFactorization::degree() const {
    int d = 0;
    for (const auto& r : roots) d += r.multiplicity;
    return d;
}

std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, int max_iter) {
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
    if (c.size() < 2) return {};
    const int d = static_cast<int>(c.size()) - 1;
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;

    std::vector<Complex> z(static_cast<std::size_t>(d));
    if (d == 1) {
        z[0] = -c[0];
        return z;
    }
    double radius = std::abs(c[0]) > 0 ? std::pow(std::abs(c[0]), 1.0 / d) : 1.0;
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
    for (int k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / d + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }

    std::vector<bool> done(static_cast<std::size_t>(d), false);
    const double eps = 4.0 * std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k]) continue;
            const auto [p, dp] = horner(c, z[k]);
            if (p == Complex(0.0)) {
                done[k] = true;
                continue;
            }
            Complex sum = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            }
            Complex ratio = dp == Complex(0.0) ? Complex(1e-3) : p / dp;
            Complex step = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                step = ratio;
            }
            z[k] -= step;
            if (std::abs(step) <= eps * std::max(std::abs(z[k]), 1e-300)) {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
        if (all_done) break;
    }
    return z;
}

std::vector<std::pair<std::vector<Rational>, int>> square_free_decomposition(std::span<const Rational> coeffs) {
    RatPoly f(coeffs.begin(), coeffs.end());
    trim(f);
    std::vector<std::pair<RatPoly, int>> out;
    if (degree(f) < 1) return out;
    f = make_monic(f);
    const RatPoly df = derivative(f);
    const RatPoly a0 = gcd(f, df);
    RatPoly b = exact_div(f, a0);
    RatPoly c = exact_div(df, a0);
    RatPoly d = sub(c, derivative(b));
    for (int i = 1; degree(b) >= 1; ++i) {
        RatPoly a = gcd(b, d);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = sub(c, derivative(b));
        if (degree(a) >= 1) out.emplace_back(std::move(a), i);
    }
    return out;
}

std::optional<Rational> reconstruct_rational(double x, long max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents of x.
    long h_prev = 1, h = static_cast<long>(std::floor(x));
    long k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    std::optional<Rational> best;
    auto consider = [&](long num, long den) {
        if (den <= 0 || den > max_den) return;
        const double approx = static_cast<double>(num) / static_cast<double>(den);
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x)) && !best) {
            best = Rational(num, den);
            best->canonicalize();
        }
    };
    consider(h, k);
    for (int step = 0; step < 64 && !best && frac > 1e-300; ++step) {
        const double inv = 1.0 / frac;
        if (!std::isfinite(inv) || inv > 1e15) break;
        const long a = static_cast<long>(std::floor(inv));
        frac = inv - static_cast<double>(a);
        const long h_next = a * h + h_prev;
        const long k_next = a * k + k_prev;
        if (k_next > max_den) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        consider(h, k);
    }
    return best;
}

RootFactorization roots_with_multiplicity(const LaurentPoly& p, double tol) {
    require_tolerance(tol);
    const auto [hi, lo] = deg_bounds(p);
    RootFactorization out;
    out.leading = leading_coefficient(p);
    out.zero_order = lo;

    std::vector<Complex> dense(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e - lo)] = c.to_complex();

    if (p.backend() == Backend::Exact) {
        std::vector<Rational> exact(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (const auto& [e, c] : p.terms()) exact[static_cast<std::size_t>(e - lo)] = c.exact();
        for (const auto& [factor, mult] : square_free_decomposition(exact)) {
            if (factor.size() == 2) {
                Rational root = -factor[0] / factor[1];
                out.roots.push_back({Complex(root.get_d(), 0.0), mult, root});
                continue;
            }
            std::vector<Complex> fc;
            for (const auto& q : factor) fc.emplace_back(q.get_d(), 0.0);
            for (Complex z : aberth_roots(fc)) {
                RootMultiplicity rm{z, mult, std::nullopt};
                if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z))) {
                    if (auto q = reconstruct_rational(z.real(), 1000000, 1e-12); q && sgn(eval(factor, *q)) == 0) {
                        rm.root = Complex(q->get_d(), 0.0);
                        rm.exact = *q;
                    }
                }
                out.roots.push_back(rm);
            }
        }
    } else {
        const std::vector<Complex> raw = aberth_roots(dense);
        std::vector<std::vector<std::size_t>> best;
        for (std::size_t i = 0; i < raw.size(); ++i) best.push_back({i});
        for (double rad : {tol, std::sqrt(tol), std::cbrt(tol), std::sqrt(std::sqrt(tol))}) {
            auto groups = cluster(raw, rad);
            bool ok = true;
            for (const auto& g : groups) {
                if (g.size() < 2) continue;
                Complex mean = 0.0;
                for (auto i : g) mean += raw[i];
                mean /= static_cast<double>(g.size());
                mean = refine_cluster(dense, mean, static_cast<int>(g.size()));
                if (!is_multiple_root(dense, mean, static_cast<int>(g.size()), tol)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            best = std::move(groups);
        }
        for (const auto& g : best) {
            Complex mean = 0.0;
            for (auto i : g) mean += raw[i];
            mean /= static_cast<double>(g.size());
            mean = refine_cluster(dense, mean, static_cast<int>(g.size()));
            out.roots.push_back({mean, static_cast<int>(g.size()), std::nullopt});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return lex_less(a.root, b.root); });

    std::vector<std::pair<Complex, int>> pairs;
    for (const auto& r : out.roots) pairs.emplace_back(r.root, r.multiplicity);
    const auto rebuilt = poly_from_roots(pairs, out.leading.to_complex());
    double diff = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        const Complex got = i < rebuilt.size() ? rebuilt[i] : Complex(0.0);
        diff = std::max(diff, std::abs(got - dense[i]));
        norm = std::max(norm, std::abs(dense[i]));
    }
    out.residual = rebuilt.size() == dense.size() ? diff / norm : std::numeric_limits<double>::infinity();
    if (!(out.residual <= 100.0 * tol)) {
        throw Error(Errc::UncertifiedFactoring,
                    "root reconstruction residual " + std::to_string(out.residual) + " exceeds 100*tol");
    }
    return out;
}

}  // namespace witt

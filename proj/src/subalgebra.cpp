#include "witt/subalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "witt/witt_algebra.hpp"

namespace witt {

namespace {

void require_length(const RVector& r, std::span<const Coefficient> a) {
    if (static_cast<int>(a.size()) != r.n) {
        throw Error(Errc::BadParameter, "point has " + std::to_string(a.size()) + " coordinates, expected " +
                                            std::to_string(r.n));
    }
}

double max_abs(std::span<const Coefficient> a) {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, v.abs());
    return m;
}

std::vector<Coefficient> on_backend(std::span<const Coefficient> a, Backend b) {
    std::vector<Coefficient> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(v.to_backend(b));
    return out;
}

// Tolerant (Re, Im) ordering; ties in the real part within tie_tol fall
// through to the imaginary part.
bool coordinate_less(const Coefficient& x, const Coefficient& y, double tie_tol) {
    if (x.is_exact() && y.is_exact()) return x.exact() < y.exact();
    const Complex a = x.to_complex(), b = y.to_complex();
    if (std::abs(a.real() - b.real()) > tie_tol) return a.real() < b.real();
    if (std::abs(a.imag() - b.imag()) > tie_tol) return a.imag() < b.imag();
    return false;
}

}  // namespace

bool gamma_contains(int n, int k, std::span<const int> r) {
    if (n < 1 || k < 1 || k > n || static_cast<int>(r.size()) != n) return false;
    long sum = 0;
    for (int i = 0; i < n; ++i) {
        if (i < k && r[static_cast<std::size_t>(i)] < 1) return false;
        if (i >= k && r[static_cast<std::size_t>(i)] != -1) return false;
        sum += r[static_cast<std::size_t>(i)];
    }
    return sum >= k;
}

RVector RVector::make(int n, int k, std::vector<int> r) {
    if (!gamma_contains(n, k, r)) {
        throw Error(Errc::NotInGamma, "r must have k positive entries, then n-k entries -1, and |r| >= k");
    }
    const int abs_r = std::accumulate(r.begin(), r.end(), 0);
    return RVector{n, k, std::move(r), abs_r};
}

RVector RVector::from_entries(std::vector<int> r) {
    const int n = static_cast<int>(r.size());
    int k = 0;
    while (k < n && r[static_cast<std::size_t>(k)] >= 1) ++k;
    return make(n, k, std::move(r));
}

Backend common_backend(std::span<const Coefficient> a) noexcept {
    for (const auto& v : a) {
        if (!v.is_exact()) return Backend::Float;
    }
    return Backend::Exact;
}

double power_sum_residual(std::span<const int> r, std::span<const Coefficient> a) {
    const double m = max_abs(a);
    if (m == 0.0) return 0.0;
    double weight = 0.0;
    for (int v : r) weight += std::abs(v);
    std::vector<Complex> z;
    for (const auto& v : a) z.push_back(v.to_complex() / m);
    std::vector<Complex> powers(z.size(), Complex(1.0));
    double res = 0.0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            powers[j] *= z[j];
            s += static_cast<double>(r[j]) * powers[j];
        }
        res = std::max(res, std::abs(s) / weight);
    }
    return res;
}

bool vr_contains(const RVector& r, std::span<const Coefficient> a, double tol) {
    require_tolerance(tol);
    require_length(r, a);
    if (common_backend(a) == Backend::Exact) {
        std::vector<Rational> powers(a.size(), Rational(1));
        for (int i = 1; i < r.n; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < a.size(); ++j) {
                powers[j] *= a[j].exact();
                s += r.r[j] * powers[j];
            }
            if (sgn(s) != 0) return false;
        }
        return true;
    }
    return power_sum_residual(r.r, a) <= tol;
}

bool vr_cross_contains(const RVector& r, std::span<const Coefficient> a, double tol) {
    if (!vr_contains(r, a, tol)) return false;
    if (common_backend(a) == Backend::Exact) {
        return std::none_of(a.begin(), a.end(), [](const Coefficient& v) { return v.is_zero(); });
    }
    const double m = max_abs(a);
    return std::all_of(a.begin(), a.end(), [&](const Coefficient& v) { return v.abs() > tol * m; });
}

bool check_product_condition(const RVector& r, std::span<const Coefficient> a, double tol) {
    require_tolerance(tol);
    require_length(r, a);
    const Backend backend = common_backend(a);
    const auto pts = on_backend(a, backend);
    const double m = max_abs(a);
    for (const auto& v : pts) {
        if (v.is_zero() || (backend == Backend::Float && v.abs() <= tol * m)) {
            throw Error(Errc::RequiresNonzero, "product condition needs nonzero coordinates");
        }
    }
    const Coefficient abs_r = Coefficient::integer(r.abs_r, backend);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Coefficient lhs = Coefficient::integer(r.r[i], backend);
        Coefficient rhs = abs_r;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            lhs *= pts[j] - pts[i];
            rhs *= pts[j];
        }
        if (backend == Backend::Exact) {
            if (!(lhs == rhs)) return false;
        } else {
            const double scale = std::max(std::abs(r.r[i]), std::abs(r.abs_r)) *
                                 std::pow(2.0 * m, static_cast<double>(r.n - 1));
            if ((lhs - rhs).abs() > tol * scale) return false;
        }
    }
    return true;
}

MuSignature make_mu(const RVector& r, std::vector<Coefficient> a, double tol) {
    require_length(r, a);
    const Backend backend = common_backend(a);
    a = on_backend(a, backend);
    if (!vr_cross_contains(r, a, tol)) {
        throw Error(Errc::NotInVCross, "a must satisfy the power-sum equations with all coordinates nonzero");
    }
    const double m = max_abs(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const bool same = backend == Backend::Exact ? a[i] == a[j] : (a[i] - a[j]).abs() <= tol * m;
            if (same) {
                throw Error(Errc::RepeatedCoordinate, "coordinates of a must be pairwise distinct");
            }
        }
    }
    return MuSignature{r, std::move(a)};
}

MuSignature make_mu(int n, int k, std::vector<int> r, std::vector<Coefficient> a, double tol) {
    return make_mu(RVector::make(n, k, std::move(r)), std::move(a), tol);
}

LaurentPoly build_P(const MuSignature& mu) {
    const Backend b = mu.backend();
    LaurentPoly p = LaurentPoly::constant(Coefficient::one(b));
    for (const auto& a : mu.a) p = p * LaurentPoly::linear(a);
    return p;
}

LaurentPoly build_Q(const MuSignature& mu) {
    const Backend b = mu.backend();
    LaurentPoly q = LaurentPoly::constant(Coefficient::one(b));
    for (int i = 0; i < mu.n(); ++i) {
        const int ri = mu.r.r[static_cast<std::size_t>(i)];
        if (ri > 0) q = q * pow(LaurentPoly::linear(mu.a[static_cast<std::size_t>(i)]), static_cast<unsigned>(ri + 1));
    }
    q = shift(q, -mu.r.abs_r);
    const auto bounds = deg_bounds(q);
    if (bounds.deg1 != mu.n() || bounds.deg2 != -mu.r.abs_r) {
        throw Error(Errc::VerificationFailed, "Q has unexpected degree bounds");
    }
    return q;
}

Coefficient c_mu(const MuSignature& mu) {
    const Backend b = mu.backend();
    Coefficient c = Coefficient::integer(mu.n() % 2 == 1 ? mu.r.abs_r : -mu.r.abs_r, b);
    for (const auto& a : mu.a) c *= a;
    return c;
}

Smu build_subalgebra(const MuSignature& mu, double tol) {
    require_tolerance(tol);
    Smu s{mu, build_P(mu), build_Q(mu), c_mu(mu), 0.0};
    const VectorField lhs = bracket({s.P}, {s.Q});
    const LaurentPoly rhs = scale(s.Q, s.c);
    if (mu.backend() == Backend::Exact) {
        if (!(lhs.poly == rhs)) {
            throw Error(Errc::VerificationFailed, "[P D, Q D] differs from c Q D");
        }
    } else {
        s.bracket_residual = distance(lhs.poly, rhs) / max_norm(s.Q);
        if (!(s.bracket_residual <= tol)) {
            throw Error(Errc::VerificationFailed,
                        "bracket residual " + std::to_string(s.bracket_residual) + " exceeds tolerance");
        }
    }
    return s;
}

MuSignature canonicalize_mu(const MuSignature& mu) {
    const double tie = 1e-9 * std::max(1.0, max_abs(mu.a));
    std::vector<std::pair<int, Coefficient>> pairs;
    for (int i = 0; i < mu.n(); ++i) pairs.emplace_back(mu.r.r[static_cast<std::size_t>(i)], mu.a[static_cast<std::size_t>(i)]);
    auto less = [&](const std::pair<int, Coefficient>& x, const std::pair<int, Coefficient>& y) {
        if (x.first != y.first) return x.first > y.first;
        return coordinate_less(x.second, y.second, tie);
    };
    // Insertion sort: the tolerant comparator is not a strict weak order.
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        for (std::size_t j = i; j > 0 && less(pairs[j], pairs[j - 1]); --j) std::swap(pairs[j], pairs[j - 1]);
    }
    MuSignature out = mu;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.r.r[i] = pairs[i].first;
        out.a[i] = pairs[i].second;
    }
    return out;
}

bool descriptors_equal(const SubalgebraDescriptor& lhs, const SubalgebraDescriptor& rhs, double tol) {
    if (lhs.index() != rhs.index()) return false;
    if (const auto* z = std::get_if<Zm>(&lhs)) {
        return z->m == std::get<Zm>(rhs).m;
    }
    const auto a = canonicalize_mu(std::get<Smu>(lhs).mu);
    const auto b = canonicalize_mu(std::get<Smu>(rhs).mu);
    if (a.r != b.r) return false;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
        const Complex x = a.a[i].to_complex(), y = b.a[i].to_complex();
        if (std::abs(x - y) > tol * std::max(1.0, std::abs(x))) return false;
    }
    return true;
}

}  // namespace witt

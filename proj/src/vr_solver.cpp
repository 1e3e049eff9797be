#include "witt/vr_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "witt/linear.hpp"
#include "witt/roots.hpp"

namespace witt {

namespace {

constexpr std::size_t kBatchSize = 64;
constexpr double kContractionTolerance = 1e-11;

std::vector<Coefficient> normalize_last(std::vector<Coefficient> a) {
    const Coefficient last = a.back();
    for (auto& v : a) v /= last;
    return a;
}

Coefficient snap(const Coefficient& c) {
    if (c.is_exact()) return c;
    Complex z = c.to_complex();
    const double eps = 1e-13 * std::max(1.0, std::abs(z));
    if (std::abs(z.real()) <= eps) z.real(0.0);
    if (std::abs(z.imag()) <= eps) z.imag(0.0);
    return Coefficient(z);
}

ProjectiveSolution certify(const RVector& r, std::vector<Coefficient> a) {
    ProjectiveSolution s;
    s.a = normalize_last(std::move(a));
    for (auto& v : s.a) v = snap(v);
    s.residual = power_sum_residual(r.r, s.a);
    s.jacobian_rank = jacobian_rank(r, s.a);
    return s;
}

// Lexicographic on (Re, Im) with ties below 1e-9.
bool lex_less(const ProjectiveSolution& x, const ProjectiveSolution& y) {
    auto differ = [](double u, double v) { return std::abs(u - v) > 1e-9 * std::max({1.0, std::abs(u), std::abs(v)}); };
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        const Complex a = x.a[i].to_complex(), b = y.a[i].to_complex();
        if (differ(a.real(), b.real())) return a.real() < b.real();
        if (differ(a.imag(), b.imag())) return a.imag() < b.imag();
    }
    return false;
}


// Index groups of equal r entries with at least two members.
std::vector<std::vector<std::size_t>> equal_groups(const RVector& r) {
    std::map<int, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < r.r.size(); ++i) by_value[r.r[i]].push_back(i);
    std::vector<std::vector<std::size_t>> groups;
    for (auto& [v, idx] : by_value) {
        if (idx.size() > 1) groups.push_back(std::move(idx));
    }
    return groups;
}

// Every rearrangement of a within the groups of equal r entries.
template <class Visit>
void for_each_orbit_member(const std::vector<std::vector<std::size_t>>& groups, const std::vector<Coefficient>& a,
                           Visit&& visit) {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& g : groups) {
        std::vector<std::size_t> p(g.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
        perms.push_back(std::move(p));
    }
    while (true) {
        std::vector<Coefficient> b = a;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            for (std::size_t t = 0; t < groups[g].size(); ++t) b[groups[g][t]] = a[groups[g][perms[g][t]]];
        }
        visit(std::move(b));
        std::size_t g = 0;
        while (g < perms.size() && !std::next_permutation(perms[g].begin(), perms[g].end())) ++g;
        if (g == perms.size()) return;
    }
}

// Projective points keyed by Re(a_1) for range lookups.
class PointSet {
public:
    explicit PointSet(double tol) : tol_(tol) {}

    bool contains(const std::vector<Coefficient>& a) const {
        const double key = a.front().to_complex().real();
        const double width = tol_ * std::max(1.0, std::abs(a.front().to_complex()));
        for (auto it = index_.lower_bound(key - width); it != index_.end() && it->first <= key + width; ++it) {
            if (projective_distance(points_[it->second], a) <= tol_) return true;
        }
        return false;
    }

    bool insert(std::vector<Coefficient> a) {
        if (contains(a)) return false;
        index_.emplace(a.front().to_complex().real(), points_.size());
        points_.push_back(std::move(a));
        return true;
    }

    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<Coefficient>>& points() const { return points_; }

private:
    double tol_;
    std::multimap<double, std::size_t> index_;
    std::vector<std::vector<Coefficient>> points_;
};

std::size_t count_orbits(const RVector& r, const std::vector<ProjectiveSolution>& sols, double tol) {
    const auto groups = equal_groups(r);
    std::vector<bool> seen(sols.size(), false);
    std::size_t orbits = 0;
    for (std::size_t i = 0; i < sols.size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        for_each_orbit_member(groups, sols[i].a, [&](std::vector<Coefficient> b) {
            b = normalize_last(std::move(b));
            for (std::size_t j = i; j < sols.size(); ++j) {
                if (!seen[j] && projective_distance(sols[j].a, b) <= tol) seen[j] = true;
            }
        });
    }
    return orbits;
}

std::optional<std::vector<Coefficient>> exact_point(const RVector& r, const std::vector<Coefficient>& a) {
    std::vector<Coefficient> out;
    for (const auto& v : a) {
        const Complex z = v.to_complex();
        if (std::abs(z.imag()) > 1e-10) return std::nullopt;
        auto q = reconstruct_rational(z.real(), 64, 1e-10);
        if (!q) return std::nullopt;
        out.emplace_back(*q);
    }
    if (!vr_cross_contains(r, out)) return std::nullopt;
    return out;
}

struct NewtonOutcome {
    std::optional<std::vector<Complex>> point;
    double best_residual = std::numeric_limits<double>::infinity();
};

double scaled_residual(const RVector& r, const Eigen::VectorXcd& x) {
    std::vector<Coefficient> a;
    for (Eigen::Index i = 0; i < x.size(); ++i) a.emplace_back(Complex(x(i)));
    a.emplace_back(Complex(1.0));
    return power_sum_residual(r.r, a);
}

void evaluate_system(const RVector& r, const Eigen::VectorXcd& x, Eigen::VectorXcd& f, Eigen::MatrixXcd* jac) {
    const Eigen::Index m = x.size();
    f.setZero(m);
    if (jac) jac->setZero(m, m);
    for (Eigen::Index j = 0; j <= m; ++j) {
        const Complex aj = j < m ? x(j) : Complex(1.0);
        const double rj = r.r[static_cast<std::size_t>(j)];
        Complex pw = 1.0;  // a_j^{i-1}
        for (Eigen::Index i = 1; i <= m; ++i) {
            if (jac && j < m) (*jac)(i - 1, j) = static_cast<double>(i) * rj * pw;
            pw *= aj;
            f(i - 1) += rj * pw;
        }
    }
}

NewtonOutcome newton(const RVector& r, Eigen::VectorXcd x, const SolverOptions& opts) {
    NewtonOutcome out;
    const Eigen::Index m = x.size();
    Eigen::VectorXcd f(m);
    Eigen::MatrixXcd jac(m, m);
    evaluate_system(r, x, f, &jac);
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        const double res = scaled_residual(r, x);
        out.best_residual = std::min(out.best_residual, res);
        if (res <= opts.newton_tol) {
            // Simple roots keep contracting quadratically; points drifting
            // towards the boundary of the torus stall instead.
            for (int k = 0; k < 8; ++k) {
                const Eigen::VectorXcd step = jac.partialPivLu().solve(f);
                if (!step.allFinite()) return out;
                const double rel = step.norm() / std::max(1.0, x.norm());
                x -= step;
                evaluate_system(r, x, f, &jac);
                if (rel <= kContractionTolerance) {
                    const double final_res = scaled_residual(r, x);
                    out.best_residual = std::min(out.best_residual, final_res);
                    if (final_res <= opts.newton_tol) out.point = std::vector<Complex>(x.data(), x.data() + x.size());
                    return out;
                }
            }
            return out;
        }
        const Eigen::VectorXcd step = jac.partialPivLu().solve(f);
        if (!step.allFinite()) return out;
        const double merit = f.norm();
        double lambda = 1.0;
        bool accepted = false;
        Eigen::VectorXcd trial_f(m);
        for (int halving = 0; halving < 12; ++halving, lambda *= 0.5) {
            const Eigen::VectorXcd trial = x - lambda * step;
            if (!trial.allFinite()) continue;
            evaluate_system(r, trial, trial_f, nullptr);
            if (trial_f.norm() < merit) {
                x = trial;
                accepted = true;
                break;
            }
        }
        if (!accepted) return out;
        if (x.cwiseAbs().maxCoeff() > 1e8) return out;
        evaluate_system(r, x, f, &jac);
    }
    return out;
}

std::vector<Eigen::VectorXcd> draw_starts(int n, long count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> area(0.2 * 0.2, 5.0 * 5.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Eigen::VectorXcd> starts;
    starts.reserve(static_cast<std::size_t>(count));
    for (long s = 0; s < count; ++s) {
        Eigen::VectorXcd x(n - 1);
        for (int i = 0; i < n - 1; ++i) {
            const double radius = std::sqrt(area(rng));
            x(i) = std::polar(radius, angle(rng));
        }
        starts.push_back(std::move(x));
    }
    return starts;
}

bool acceptable(const RVector& r, const std::vector<Coefficient>& a, const SolverOptions& opts) {
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, v.abs());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].abs() <= opts.dedup_tol * m) return false;
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if ((a[i] - a[j]).abs() <= opts.dedup_tol * m) return false;
        }
    }
    return power_sum_residual(r.r, a) <= opts.newton_tol && jacobian_rank(r, a, 1e-8) == r.n - 1;
}

}  // namespace

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long projective_bound(int n) { return factorial(n - 1); }

long default_starts(int n) { return std::max(200L, 50L * factorial(n - 1)); }

double projective_distance(std::span<const Coefficient> a, std::span<const Coefficient> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Complex x = a[i].to_complex(), y = b[i].to_complex();
        d = std::max(d, std::abs(x - y) / std::max(1.0, std::abs(x)));
    }
    return d;
}

std::optional<long> expected_exact_count(const RVector& r) {
    for (int i = 0; i < r.k; ++i) {
        if (r.r[static_cast<std::size_t>(i)] < r.n - r.k + 1) return std::nullopt;
    }
    return projective_bound(r.n);
}

int jacobian_rank(const RVector& r, std::span<const Coefficient> a, double tol) {
    require_tolerance(tol);
    if (static_cast<int>(a.size()) != r.n) {
        throw Error(Errc::BadParameter, "point length differs from n");
    }
    const Backend backend = common_backend(a);
    double m = 0.0;
    for (const auto& v : a) m = std::max(m, v.abs());
    CoeffMatrix jac;
    for (int i = 1; i < r.n; ++i) {
        std::vector<Coefficient> row;
        for (int j = 0; j < r.n; ++j) {
            const auto& aj = a[static_cast<std::size_t>(j)];
            const long w = static_cast<long>(i) * r.r[static_cast<std::size_t>(j)];
            if (backend == Backend::Exact) {
                row.push_back(Coefficient::integer(w, Backend::Exact) * power(aj, i - 1));
            } else {
                // Scaling a by 1/m rescales rows only, so the rank is unchanged.
                const Complex z = m > 0 ? aj.to_complex() / m : Complex(0.0);
                row.emplace_back(static_cast<double>(w) * std::pow(z, i - 1));
            }
        }
        jac.push_back(std::move(row));
    }
    return matrix_rank(jac, backend, tol);
}

SolutionSet closed_form(const RVector& r) {
    if (r.n > 3) {
        throw Error(Errc::UseNumeric, "closed forms exist only for n <= 3");
    }
    SolutionSet set;
    set.r = r;
    set.complete = true;
    set.reason = "closed form";
    std::vector<std::vector<Coefficient>> points;
    if (r.n == 1) {
        points.push_back({Coefficient(1)});
    } else if (r.n == 2) {
        points.push_back({Coefficient(r.r[1]), Coefficient(-r.r[0])});
    } else {
        std::vector<std::size_t> idx{0, 1, 2};
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return r.r[x] > r.r[y]; });
        const long r1 = r.r[idx[0]], r2 = r.r[idx[1]], r3 = r.r[idx[2]];
        std::vector<std::vector<Coefficient>> sorted_points;
        if (r2 == 1 && r3 == -1) {
            sorted_points.push_back({Coefficient(2), Coefficient(1 - r1), Coefficient(r1 + 1)});
        } else {
            const long radicand = -r1 * r2 * r3 * r.abs_r;
            const long root = radicand >= 0 ? std::lround(std::sqrt(static_cast<double>(radicand))) : -1;
            if (root >= 0 && root * root == radicand) {
                for (int sign : {1, -1}) {
                    const Rational s(sign * root);
                    sorted_points.push_back({Coefficient(Rational(-r3 + s / r1)), Coefficient(Rational(-r3 - s / r2)),
                                             Coefficient(r1 + r2)});
                    if (root == 0) break;
                }
            } else {
                const Complex s = std::sqrt(Complex(static_cast<double>(radicand), 0.0));
                for (double sign : {1.0, -1.0}) {
                    sorted_points.push_back({Coefficient(Complex(-static_cast<double>(r3) + sign * s / static_cast<double>(r1))),
                                             Coefficient(Complex(-static_cast<double>(r3) - sign * s / static_cast<double>(r2))),
                                             Coefficient(Complex(static_cast<double>(r1 + r2), 0.0))});
                }
            }
        }
        for (auto& sp : sorted_points) {
            std::vector<Coefficient> p(3);
            for (std::size_t i = 0; i < 3; ++i) p[idx[i]] = sp[i];
            points.push_back(std::move(p));
        }
    }
    for (auto& p : points) {
        if (std::any_of(p.begin(), p.end(), [](const Coefficient& v) { return v.is_zero(); })) continue;
        set.solutions.push_back(certify(r, std::move(p)));
    }
    std::sort(set.solutions.begin(), set.solutions.end(), lex_less);
    set.orbit_count = count_orbits(r, set.solutions, 1e-9);
    for (const auto& s : set.solutions) set.best_residual = std::max(set.best_residual, s.residual);
    return set;
}

MuSignature roots_of_unity_solution(int n, int r_value) {
    if (n < 1 || r_value < 1) {
        throw Error(Errc::BadParameter, "roots-of-unity family needs n >= 1 and r >= 1");
    }
    std::vector<Coefficient> a;
    if (n <= 2) {
        if (n == 2) a.emplace_back(-1);
        a.emplace_back(1);
    } else {
        for (int j = 1; j <= n; ++j) {
            Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
            if (std::abs(z.real()) < 1e-15) z.real(0.0);
            if (std::abs(z.imag()) < 1e-15) z.imag(0.0);
            a.emplace_back(z);
        }
    }
    return make_mu(RVector::make(n, n, std::vector<int>(static_cast<std::size_t>(n), r_value)), std::move(a));
}

MuSignature inflate(const MuSignature& mu, int s) {
    if (s < 1) {
        throw Error(Errc::BadParameter, "inflation factor must be >= 1");
    }
    if (s == 1) return mu;
    std::vector<int> r;
    for (int v : mu.r.r) r.insert(r.end(), static_cast<std::size_t>(s), v);

    std::vector<Coefficient> exact;
    if (s == 2 && mu.backend() == Backend::Exact) {
        for (const auto& v : mu.a) {
            const Rational& q = v.exact();
            if (sgn(q) <= 0 || !mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
                exact.clear();
                break;
            }
            Rational w(sqrt(mpz_class(q.get_num())), sqrt(mpz_class(q.get_den())));
            w.canonicalize();
            exact.emplace_back(w);
            exact.emplace_back(Rational(-w));
        }
    }
    std::vector<Coefficient> a = std::move(exact);
    if (a.empty()) {
        for (const auto& v : mu.a) {
            const Complex w = std::pow(v.to_complex(), 1.0 / s);
            for (int j = 0; j < s; ++j) a.emplace_back(w * std::polar(1.0, 2.0 * std::numbers::pi * j / s));
        }
    }
    return make_mu(RVector::make(s * mu.n(), s * mu.k(), std::move(r)), std::move(a));
}

SolutionSet solve_numeric(const RVector& r, const SolverOptions& opts) {
    require_tolerance(opts.newton_tol);
    require_tolerance(opts.dedup_tol);
    SolutionSet set;
    set.r = r;
    set.seed = opts.seed;
    const long bound = projective_bound(r.n);
    const auto expected = expected_exact_count(r);
    if (r.n == 1) {
        set.solutions.push_back(certify(r, {Coefficient(1)}));
        set.orbit_count = 1;
        set.complete = true;
        set.reason = "n = 1: V(r)^x is a single projective point";
        return set;
    }

    const long count = opts.starts.value_or(default_starts(r.n));
    const auto starts = draw_starts(r.n, count, opts.seed);
    const auto groups = equal_groups(r);
    PointSet found(opts.dedup_tol);
    set.best_residual = std::numeric_limits<double>::infinity();

    const unsigned threads = std::max(1u, opts.threads);
    std::vector<NewtonOutcome> outcomes;
    for (std::size_t begin = 0; begin < starts.size() && static_cast<long>(found.size()) < bound;
         begin += kBatchSize) {
        const std::size_t end = std::min(starts.size(), begin + kBatchSize);
        outcomes.assign(end - begin, {});
        auto work = [&](std::size_t offset) {
            for (std::size_t i = begin + offset; i < end; i += threads) outcomes[i - begin] = newton(r, starts[i], opts);
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        // Merge in start order so the result does not depend on scheduling.
        for (auto& out : outcomes) {
            ++set.starts_used;
            set.best_residual = std::min(set.best_residual, out.best_residual);
            if (!out.point) continue;
            std::vector<Coefficient> a;
            for (const auto& z : *out.point) a.emplace_back(z);
            a.emplace_back(Complex(1.0));
            if (!acceptable(r, a, opts) || found.contains(a)) continue;
            for_each_orbit_member(groups, a, [&](std::vector<Coefficient> b) { found.insert(normalize_last(std::move(b))); });
            if (static_cast<long>(found.size()) >= bound) break;
        }
    }

    for (const auto& p : found.points()) {
        if (auto q = exact_point(r, p)) {
            set.solutions.push_back(certify(r, std::move(*q)));
        } else {
            set.solutions.push_back(certify(r, p));
        }
    }
    std::sort(set.solutions.begin(), set.solutions.end(), lex_less);
    set.orbit_count = count_orbits(r, set.solutions, opts.dedup_tol);

    const long n_found = static_cast<long>(set.solutions.size());
    if (expected && n_found == *expected) {
        set.complete = true;
        set.reason = "certified: found exactly (n-1)! = " + std::to_string(*expected) +
                     " points and r_i >= n-k+1 forces that count";
    } else if (n_found == 0) {
        set.reason = "no convergence: no point of V(r)^x found after " + std::to_string(set.starts_used) + " starts";
    } else if (expected) {
        set.reason = "incomplete: found " + std::to_string(n_found) + " of " + std::to_string(*expected) + " points";
    } else {
        set.reason = "heuristic: found " + std::to_string(n_found) + " points, upper bound " + std::to_string(bound);
    }
    return set;
}

std::vector<RVector> sweep_tuples(int n) {
    std::vector<RVector> out;
    for (int k = 1; k <= n; ++k) {
        const int top = n - k;
        if (top < 1) continue;
        std::vector<int> seq(static_cast<std::size_t>(k), top);
        while (true) {
            std::vector<int> r = seq;
            r.insert(r.end(), static_cast<std::size_t>(n - k), -1);
            if (gamma_contains(n, k, r)) out.push_back(RVector::make(n, k, std::move(r)));
            // Next non-increasing sequence in reverse lexicographic order.
            int pos = k - 1;
            while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == 1) --pos;
            if (pos < 0) break;
            const int v = --seq[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) seq[static_cast<std::size_t>(i)] = v;
        }
    }
    return out;
}

SweepReport sweep_conjecture(int n_lo, int n_hi, const SolverOptions& opts) {
    if (n_lo < 4 || n_hi < n_lo) {
        throw Error(Errc::BadParameter, "sweep range must satisfy 4 <= n_lo <= n_hi");
    }
    SweepReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.seed = opts.seed;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& r : sweep_tuples(n)) {
            const SolutionSet set = solve_numeric(r, opts);
            SweepEntry e;
            e.r = r;
            e.found = set.solutions.size();
            e.orbits = set.orbit_count;
            e.bound = projective_bound(n);
            e.expected = expected_exact_count(r);
            e.empty = set.solutions.empty();
            e.best_residual = set.best_residual;
            if (e.empty) ++report.empty_count;
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

}  // namespace witt

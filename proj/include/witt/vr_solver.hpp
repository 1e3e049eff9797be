#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "witt/subalgebra.hpp"

namespace witt {

/// A point of V(r)^x up to overall scaling, normalized so the last
/// coordinate is 1. Coordinates are exact when they reconstruct to small
/// rationals that verify exactly.
struct ProjectiveSolution {
    std::vector<Coefficient> a;
    double residual = 0.0;
    int jacobian_rank = 0;
};

struct SolutionSet {
    RVector r;
    std::vector<ProjectiveSolution> solutions;
    /// Number of orbits under permutations of equal r entries.
    std::size_t orbit_count = 0;
    bool complete = false;
    std::string reason;
    std::uint64_t seed = 0;
    long starts_used = 0;
    /// Smallest power-sum residual seen over all starts (diagnostic).
    double best_residual = 0.0;
};

struct SolverOptions {
    std::optional<long> starts;  // default max(200, 50 (n-1)!)
    std::uint64_t seed = 42;
    double newton_tol = 1e-10;
    double dedup_tol = 1e-6;
    int max_iter = 200;
    unsigned threads = 1;
};

long factorial(int n);

/// Upper bound (n-1)! on the number of projective points of V(r)^x.
long projective_bound(int n);

long default_starts(int n);

/// All projective points for n <= 3 from the explicit parametrizations.
/// Throws UseNumeric for n > 3.
SolutionSet closed_form(const RVector& r);

/// mu = (n, n, (r, ..., r), (zeta, zeta^2, ..., zeta^n)) with zeta = exp(2 pi i / n).
MuSignature roots_of_unity_solution(int n, int r_value);

/// Replaces every a_i by the s roots of t^s = a_i and repeats r_i s times.
MuSignature inflate(const MuSignature& mu, int s);

/// Rank of the (n-1) x n matrix (i r_j a_j^{i-1}). Exact for exact points,
/// otherwise singular values above tol * largest.
int jacobian_rank(const RVector& r, std::span<const Coefficient> a, double tol = 1e-9);

/// (n-1)! when r_i >= n - k + 1 for every positive entry.
std::optional<long> expected_exact_count(const RVector& r);

/// Multistart damped Newton on the power-sum system in the chart a_n = 1.
SolutionSet solve_numeric(const RVector& r, const SolverOptions& opts = {});

/// Projective distance between two points normalized to a_n = 1.
double projective_distance(std::span<const Coefficient> a, std::span<const Coefficient> b);

struct SweepEntry {
    RVector r;
    std::size_t found = 0;
    std::size_t orbits = 0;
    long bound = 0;
    std::optional<long> expected;
    bool empty = true;
    double best_residual = 0.0;
};

struct SweepReport {
    int n_lo = 0;
    int n_hi = 0;
    std::uint64_t seed = 0;
    std::vector<SweepEntry> entries;
    std::size_t empty_count = 0;
};

/// Tuples (n, k, r) with r non-increasing, 1 <= r_i <= n - k and r in Gamma(n, k).
std::vector<RVector> sweep_tuples(int n);

/// Runs solve_numeric over sweep_tuples(n) for n in [n_lo, n_hi]; needs 4 <= n_lo <= n_hi.
SweepReport sweep_conjecture(int n_lo, int n_hi, const SolverOptions& opts = {});

}  // namespace witt

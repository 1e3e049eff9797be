#pragma once

#include <span>
#include <variant>
#include <vector>

#include "witt/laurent.hpp"

namespace witt {

inline constexpr double kDefaultMembershipTolerance = 1e-9;
inline constexpr double kDefaultBracketTolerance = 1e-8;
inline constexpr double kDefaultDescriptorTolerance = 1e-7;

/// True iff r lies in N^k x {-1}^{n-k} and sums to at least k.
bool gamma_contains(int n, int k, std::span<const int> r);

/// An exponent vector r in Gamma(n, k): k positive entries followed by n - k
/// entries equal to -1, with |r| = sum r_i >= k.
struct RVector {
    int n = 0;
    int k = 0;
    std::vector<int> r;
    int abs_r = 0;

    /// Throws NotInGamma.
    static RVector make(int n, int k, std::vector<int> r);
    /// Infers n and k from the entries (k = number of leading positive entries).
    static RVector from_entries(std::vector<int> r);

    friend bool operator==(const RVector&, const RVector&) = default;
};

/// max_i |sum_j r_j a_j^i| / (sum_j |r_j| * max_j |a_j|^i) over i = 1..n-1.
double power_sum_residual(std::span<const int> r, std::span<const Coefficient> a);

/// Backend shared by every entry, Float if any entry is float.
Backend common_backend(std::span<const Coefficient> a) noexcept;

/// a in V(r): all weighted power sums of order 1..n-1 vanish (exactly on the
/// exact backend, within the scaled residual tol otherwise).
bool vr_contains(const RVector& r, std::span<const Coefficient> a, double tol = kDefaultMembershipTolerance);
/// a in V(r) with every coordinate nonzero.
bool vr_cross_contains(const RVector& r, std::span<const Coefficient> a, double tol = kDefaultMembershipTolerance);
/// r_i prod_{j!=i} (a_j - a_i) = |r| prod_{j!=i} a_j for every i.
/// Throws RequiresNonzero when a coordinate vanishes.
bool check_product_condition(const RVector& r, std::span<const Coefficient> a,
                             double tol = kDefaultMembershipTolerance);

/// A validated quadruple (n, k, r, a) with a in V(r)^x.
struct MuSignature {
    RVector r;
    std::vector<Coefficient> a;

    int n() const noexcept { return r.n; }
    int k() const noexcept { return r.k; }
    Backend backend() const noexcept { return common_backend(a); }
};

/// Throws NotInGamma, NotInVCross or RepeatedCoordinate.
MuSignature make_mu(const RVector& r, std::vector<Coefficient> a, double tol = kDefaultMembershipTolerance);
MuSignature make_mu(int n, int k, std::vector<int> r, std::vector<Coefficient> a,
                    double tol = kDefaultMembershipTolerance);

/// (t - a_1) ... (t - a_n)
LaurentPoly build_P(const MuSignature& mu);
/// t^{-|r|} (t - a_1)^{r_1 + 1} ... (t - a_k)^{r_k + 1}
LaurentPoly build_Q(const MuSignature& mu);
/// (-1)^{n+1} |r| a_1 ... a_n
Coefficient c_mu(const MuSignature& mu);

/// span{D, t^m D}
struct Zm {
    int m = 0;
};

/// span{P D, Q D} with [P D, Q D] = c Q D.
struct Smu {
    MuSignature mu;
    LaurentPoly P;
    LaurentPoly Q;
    Coefficient c;
    double bracket_residual = 0.0;
};

using SubalgebraDescriptor = std::variant<Zm, Smu>;

/// Builds s(mu) and checks its bracket relation; throws VerificationFailed.
Smu build_subalgebra(const MuSignature& mu, double tol = kDefaultBracketTolerance);

/// Orders the pairs (r_i, a_i) by r descending, then a by (Re, Im).
MuSignature canonicalize_mu(const MuSignature& mu);

bool descriptors_equal(const SubalgebraDescriptor& lhs, const SubalgebraDescriptor& rhs,
                       double tol = kDefaultDescriptorTolerance);

}  // namespace witt

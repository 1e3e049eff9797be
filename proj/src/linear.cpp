#include "witt/linear.hpp"

#include <algorithm>

#include <Eigen/Dense>

namespace witt {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Eigen::MatrixXcd to_eigen(const CoeffMatrix& a, std::size_t cols) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j].to_complex();
    }
    return m;
}

}  // namespace

std::optional<SpanSolution> solve_linear(const CoeffMatrix& a, const std::vector<Coefficient>& b, Backend backend,
                                         double tol) {
    require_tolerance(tol);
    if (a.size() != b.size()) {
        throw Error(Errc::BadParameter, "matrix and right-hand side sizes differ");
    }
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    if (cols == 0) {
        for (const auto& v : b) {
            if (!v.is_zero()) return std::nullopt;
        }
        return SpanSolution{};
    }
    if (backend == Backend::Exact) {
        RatMatrix m(a.size(), std::vector<Rational>(cols + 1));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].exact();
            m[i][cols] = b[i].exact();
        }
        const auto pivots = rref(m, cols + 1);
        if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
        SpanSolution out;
        out.coords.assign(cols, Coefficient::zero(Backend::Exact));
        for (std::size_t r = 0; r < pivots.size(); ++r) out.coords[pivots[r]] = Coefficient(m[r][cols]);
        return out;
    }
    const Eigen::MatrixXcd m = to_eigen(a, cols);
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(b.size()));
    double bnorm = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        rhs(static_cast<Eigen::Index>(i)) = b[i].to_complex();
        bnorm = std::max(bnorm, std::abs(b[i].to_complex()));
    }
    const Eigen::VectorXcd x = m.colPivHouseholderQr().solve(rhs);
    const double residual = (m * x - rhs).cwiseAbs().maxCoeff();
    if (!(residual <= tol * std::max(1.0, bnorm))) return std::nullopt;
    SpanSolution out;
    out.residual = residual;
    for (Eigen::Index j = 0; j < x.size(); ++j) out.coords.emplace_back(Complex(x(j)));
    return out;
}

int matrix_rank(const CoeffMatrix& a, Backend backend, double rel_tol) {
    require_tolerance(rel_tol);
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    if (a.empty() || cols == 0) return 0;
    if (backend == Backend::Exact) {
        RatMatrix m(a.size(), std::vector<Rational>(cols));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].exact();
        }
        return static_cast<int>(rref(m, cols).size());
    }
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a, cols));
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > rel_tol * s(0)) ++rank;
    }
    return rank;
}

}  // namespace witt

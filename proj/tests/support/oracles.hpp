#pragma once
// Reference computations that avoid the library's own arithmetic paths.

#include <gmpxx.h>

#include <complex>
#include <map>
#include <vector>

#include "witt/laurent.hpp"

namespace oracle {

using RMap = std::map<int, mpq_class>;

inline RMap to_rmap(const witt::LaurentPoly& p) {
    RMap out;
    for (const auto& [e, c] : p.terms()) out[e] = c.exact();
    return out;
}

inline void drop_zeros(RMap& m) {
    for (auto it = m.begin(); it != m.end();) it = (it->second == 0) ? m.erase(it) : std::next(it);
}

// Schoolbook product over every pair of terms.
inline RMap naive_mul(const RMap& p, const RMap& q) {
    RMap out;
    for (const auto& [a, x] : p) {
        for (const auto& [b, y] : q) out[a + b] += x * y;
    }
    drop_zeros(out);
    return out;
}

// Bracket through L-basis structure constants [L_m, L_n] = (m - n) L_{m+n},
// with x = sum x_m L_m and x_m = -(coefficient of t^m).
inline RMap bracket_by_structure_constants(const RMap& f, const RMap& g) {
    RMap lcoords;
    for (const auto& [m, fm] : f) {
        for (const auto& [n, gn] : g) lcoords[m + n] += (-fm) * (-gn) * (m - n);
    }
    RMap out;
    for (const auto& [e, c] : lcoords) out[e] = -c;
    drop_zeros(out);
    return out;
}

inline mpq_class cocycle(int m, int n) {
    if (m + n != 0) return 0;
    mpq_class v(m * m * m - m, 12);
    v.canonicalize();
    return v;
}

// Central part of [x, y] in the Virasoro algebra from L-coordinates.
inline mpq_class central_term(const RMap& f, const RMap& g) {
    mpq_class k = 0;
    for (const auto& [m, fm] : f) {
        const auto it = g.find(-m);
        if (it != g.end()) k += (-fm) * (-it->second) * cocycle(m, -m);
    }
    return k;
}

inline bool power_sums_vanish(const std::vector<int>& r, const std::vector<mpq_class>& a) {
    const std::size_t n = r.size();
    for (std::size_t i = 1; i < n; ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class p = 1;
            for (std::size_t e = 0; e < i; ++e) p *= a[j];
            s += r[j] * p;
        }
        if (s != 0) return false;
    }
    return true;
}

inline double power_sum_max(const std::vector<int>& r, const std::vector<std::complex<double>>& a) {
    double worst = 0.0, m = 0.0;
    for (const auto& v : a) m = std::max(m, std::abs(v));
    double norm = 0.0;
    for (int v : r) norm += std::abs(v);
    for (std::size_t i = 1; i < r.size(); ++i) {
        std::complex<double> s = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) s += static_cast<double>(r[j]) * std::pow(a[j] / m, static_cast<int>(i));
        worst = std::max(worst, std::abs(s) / norm);
    }
    return worst;
}

// Exact rank by Gaussian elimination on rationals.
inline int exact_rank(std::vector<std::vector<mpq_class>> m) {
    int rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Rank of the coefficient vectors of the given polynomials.
inline int span_rank(const std::vector<RMap>& polys) {
    std::map<int, std::size_t> row;
    for (const auto& p : polys) {
        for (const auto& [e, c] : p) row.emplace(e, 0);
    }
    std::size_t i = 0;
    for (auto& [e, idx] : row) idx = i++;
    std::vector<std::vector<mpq_class>> m(row.size(), std::vector<mpq_class>(polys.size(), 0));
    for (std::size_t j = 0; j < polys.size(); ++j) {
        for (const auto& [e, c] : polys[j]) m[row[e]][j] = c;
    }
    return exact_rank(m);
}

}  // namespace oracle

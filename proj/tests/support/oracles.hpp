#pragma once

// Slow, independent reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "toricsym/linalg.hpp"
#include "toricsym/poly.hpp"
#include "toricsym/toric_matrix.hpp"

namespace oracle {

using toricsym::ExponentVector;
using toricsym::Integer;
using toricsym::IntegerVector;
using toricsym::Multidegree;
using toricsym::Rational;
using toricsym::RationalVector;
using toricsym::ToricMatrix;

// Every beta in the box [0, max sigma]^n, filtered by A beta = sigma.
inline std::vector<ExponentVector> brute_fiber(const ToricMatrix& a, const Multidegree& sigma) {
    const std::int64_t cap = sigma.empty() ? 0 : *std::max_element(sigma.begin(), sigma.end());
    std::vector<ExponentVector> out;
    std::vector<std::int64_t> beta(a.cols(), 0);
    while (true) {
        if (a.multidegree(ExponentVector(beta)) == sigma) out.emplace_back(beta);
        std::size_t j = 0;
        while (j < beta.size() && beta[j] == cap) beta[j++] = 0;
        if (j == beta.size()) break;
        ++beta[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Plain Gauss-Jordan over Q with partial search for a nonzero pivot.
inline std::size_t gauss_rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

inline std::vector<RationalVector> as_rational(const std::vector<IntegerVector>& vs) {
    std::vector<RationalVector> out;
    for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
    return out;
}

inline std::size_t gauss_rank(const std::vector<IntegerVector>& rows) { return gauss_rank(as_rational(rows)); }

inline std::vector<IntegerVector> matrix_rows(const toricsym::IntegerMatrix& m) {
    std::vector<IntegerVector> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

// Equal row spaces over Q.
inline bool same_span(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b) {
    std::vector<IntegerVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto ra = gauss_rank(a);
    return ra == gauss_rank(b) && ra == gauss_rank(both);
}

inline bool dot_zero(const IntegerVector& row, const IntegerVector& v) {
    Integer s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += row[i] * v[i];
    return s == 0;
}

// Random non-negative matrix with no zero column.
inline ToricMatrix random_toric_matrix(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols,
                                       std::int64_t max_entry) {
    std::uniform_int_distribution<std::size_t> rows_d(1, max_rows);
    std::uniform_int_distribution<std::size_t> cols_d(1, max_cols);
    std::uniform_int_distribution<std::int64_t> entry_d(0, max_entry);
    const std::size_t m = rows_d(rng);
    const std::size_t n = cols_d(rng);
    std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) nonzero |= (rows[i][j] = entry_d(rng)) != 0;
        if (!nonzero) rows[std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)][j] = 1 + entry_d(rng) % max_entry;
    }
    return ToricMatrix(rows);
}

// sigma = A beta for a random beta, so the fiber is nonempty. Rejects sigma = 0
// and entries above max_entry.
inline Multidegree random_sigma(std::mt19937_64& rng, const ToricMatrix& a, std::int64_t max_entry) {
    std::uniform_int_distribution<std::int64_t> d(0, 3);
    while (true) {
        std::vector<std::int64_t> beta(a.cols());
        for (auto& x : beta) x = d(rng);
        const Multidegree sigma = a.multidegree(ExponentVector(beta));
        const bool zero = std::all_of(sigma.begin(), sigma.end(), [](auto s) { return s == 0; });
        if (!zero && std::all_of(sigma.begin(), sigma.end(), [&](auto s) { return s <= max_entry; })) return sigma;
    }
}

// Lattice vector in ker(A) built as a random integer combination of a kernel basis.
inline toricsym::LatticeVector random_kernel_vector(std::mt19937_64& rng, const std::vector<IntegerVector>& basis,
                                                    std::int64_t coeff) {
    std::uniform_int_distribution<std::int64_t> d(-coeff, coeff);
    toricsym::LatticeVector u(basis.front().size(), 0);
    for (const auto& b : basis) {
        const auto c = d(rng);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += c * toricsym::to_int64(b[i]);
    }
    return u;
}

}  // namespace oracle

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toricsym/numeric.hpp"

namespace toricsym {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    using Scalar = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix * vector: dimension mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Entry of a sparse integer vector; vectors keep entries sorted by index with no zeros.
struct SparseEntry {
    std::size_t index;
    Integer value;
    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(const IntegerVector& v);
/// Scales by the lcm of denominators; the result spans the same line.
SparseVector to_sparse(const RationalVector& v);
IntegerVector to_dense(const SparseVector& v, std::size_t dim);

/// Incrementally maintained echelon basis of a subspace of Q^dim.
///
/// Rows are kept primitive and keyed by their leading index. Vectors are reduced
/// fraction-free, so no rational arithmetic happens here.
class SpanEchelon {
public:
    explicit SpanEchelon(std::size_t dim) : dim_(dim) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds v to the span; returns true if it increased the rank.
    bool insert(SparseVector v);
    bool insert(const IntegerVector& v) { return insert(to_sparse(v)); }

    bool contains(SparseVector v) const;
    bool contains(const IntegerVector& v) const { return contains(to_sparse(v)); }
    bool contains(const RationalVector& v) const { return contains(to_sparse(v)); }

private:
    void check_dim(const SparseVector& v) const;
    void reduce(SparseVector& v) const;

    std::size_t dim_;
    std::map<std::size_t, SparseVector> rows_;
};

/// Row echelon data produced by fraction-free elimination.
struct EchelonForm {
    IntegerMatrix reduced;                 // echelon form (Bareiss scaled)
    std::vector<std::size_t> pivot_cols;   // one per nonzero row, increasing
};

/// Bareiss fraction-free forward elimination. Pivot: first nonzero entry in
/// the current column scanning rows top-down.
EchelonForm bareiss_echelon(IntegerMatrix m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Right null space basis. One vector per free column (ascending), each
/// primitive with first nonzero entry positive. The basis is the one read off
/// the reduced row echelon form, hence independent of elimination order.
std::vector<IntegerVector> kernel_basis(const IntegerMatrix& m);
std::vector<IntegerVector> kernel_basis(const RationalMatrix& m);

/// True iff v lies in the rational span of vectors. Throws on dimension mismatch.
bool in_span(const RationalVector& v, const std::vector<RationalVector>& vectors);
bool in_span(const IntegerVector& v, const std::vector<IntegerVector>& vectors);

/// Subspace equality of the spans of two families in Q^dim.
bool spans_equal(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b,
                 std::size_t dim);

struct HermiteForm {
    IntegerMatrix h;          // row Hermite normal form of the input
    IntegerMatrix transform;  // unimodular, transform * input == h
    std::size_t rank = 0;     // rows [0, rank) of h are nonzero
};

/// Row-style Hermite normal form with accumulated unimodular transform.
/// Pivots are positive and entries above each pivot are reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// Z-basis of {u in Z^n : A u = 0}, read off the HNF transform of A^T and then
/// LLL-reduced. Each vector has its first nonzero entry positive.
std::vector<IntegerVector> lattice_kernel(const IntegerMatrix& a);

/// LLL reduction (delta = 3/4) of a linearly independent family; the returned
/// vectors span the same lattice.
std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> basis);

/// Integer lambda with B * lambda == target, or nullopt if none exists.
/// Throws std::invalid_argument when target.size() != B.rows().
std::optional<IntegerVector> integer_solve(const IntegerMatrix& b, const IntegerVector& target);

}  // namespace toricsym

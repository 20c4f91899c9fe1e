#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "toricsym/linalg.hpp"

namespace toricsym {

/// Non-negative exponent vector. Doubles as a monomial e^alpha.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
    explicit ExponentVector(std::vector<std::int64_t> entries);
    ExponentVector(std::initializer_list<std::int64_t> entries)
        : ExponentVector(std::vector<std::int64_t>(entries)) {}

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t degree() const;
    bool is_zero() const;

    const std::vector<std::int64_t>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; throws if any entry would become negative.
    ExponentVector operator-(const ExponentVector& other) const;
    ExponentVector scaled(std::int64_t k) const;
    /// True iff every entry is >= the matching entry of other.
    bool divisible_by(const ExponentVector& other) const;

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> entries_;
};

using Multidegree = std::vector<std::int64_t>;

/// The m x n non-negative integer matrix A whose columns are the exponents of
/// the images of the variables. Zero rows are allowed; zero columns are not.
class ToricMatrix {
public:
    /// Throws std::invalid_argument on ragged rows, negative entries, a zero
    /// column, or an empty column set.
    explicit ToricMatrix(std::vector<std::vector<std::int64_t>> rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<std::int64_t>>& row_data() const { return rows_; }

    Multidegree column(std::size_t j) const;
    /// A * beta.
    Multidegree multidegree(const ExponentVector& beta) const;
    /// A applied to the all-ones vector: the multidegree of e_1 * ... * e_n.
    Multidegree all_ones_image() const;
    std::int64_t max_column_sum() const;

    IntegerMatrix to_integer_matrix() const;

    friend bool operator==(const ToricMatrix&, const ToricMatrix&) = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;
    std::size_t cols_ = 0;
};

}  // namespace toricsym

#include "toricsym/toric_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace toricsym {

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (auto x : entries_)
        if (x < 0) throw std::invalid_argument("ExponentVector: negative entry");
}

std::int64_t ExponentVector::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](auto x) { return x == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (other.size() != size()) throw std::invalid_argument("ExponentVector: length mismatch");
    ExponentVector out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    if (other.size() != size()) throw std::invalid_argument("ExponentVector: length mismatch");
    ExponentVector out(*this);
    for (std::size_t i = 0; i < size(); ++i) {
        out.entries_[i] -= other.entries_[i];
        if (out.entries_[i] < 0) throw std::invalid_argument("ExponentVector: negative difference");
    }
    return out;
}

ExponentVector ExponentVector::scaled(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("ExponentVector: negative scale");
    ExponentVector out(*this);
    for (auto& x : out.entries_) x *= k;
    return out;
}

bool ExponentVector::divisible_by(const ExponentVector& other) const {
    if (other.size() != size()) throw std::invalid_argument("ExponentVector: length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] < other.entries_[i]) return false;
    return true;
}

ToricMatrix::ToricMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("ToricMatrix: no rows");
    cols_ = rows_.front().size();
    if (cols_ == 0) throw std::invalid_argument("ToricMatrix: no columns");
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("ToricMatrix: ragged rows");
        for (auto x : r)
            if (x < 0) throw std::invalid_argument("ToricMatrix: negative entry");
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        bool nonzero = false;
        for (const auto& r : rows_) nonzero = nonzero || r[j] != 0;
        if (!nonzero) throw std::invalid_argument("ToricMatrix: zero column " + std::to_string(j + 1));
    }
}

Multidegree ToricMatrix::column(std::size_t j) const {
    Multidegree c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i][j];
    return c;
}

Multidegree ToricMatrix::multidegree(const ExponentVector& beta) const {
    if (beta.size() != cols_) throw std::invalid_argument("multidegree: exponent length mismatch");
    Multidegree s(rows(), 0);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) s[i] += rows_[i][j] * beta[j];
    return s;
}

Multidegree ToricMatrix::all_ones_image() const {
    Multidegree s(rows(), 0);
    for (std::size_t i = 0; i < rows(); ++i)
        s[i] = std::accumulate(rows_[i].begin(), rows_[i].end(), std::int64_t{0});
    return s;
}

std::int64_t ToricMatrix::max_column_sum() const {
    std::int64_t best = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        std::int64_t s = 0;
        for (const auto& r : rows_) s += r[j];
        best = std::max(best, s);
    }
    return best;
}

IntegerMatrix ToricMatrix::to_integer_matrix() const {
    IntegerMatrix m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rows_[i][j];
    return m;
}

}  // namespace toricsym

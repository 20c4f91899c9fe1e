#include "toricsym/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toricsym {

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

SparseVector to_sparse(const IntegerVector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.push_back({i, v[i]});
    return out;
}

SparseVector to_sparse(const RationalVector& v) {
    Integer den = 1;
    for (const auto& q : v) den = lcm(den, denominator_of(q));
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out.push_back({i, numerator_of(v[i]) * (den / denominator_of(v[i]))});
    return out;
}

IntegerVector to_dense(const SparseVector& v, std::size_t dim) {
    IntegerVector out(dim);
    for (const auto& e : v) {
        if (e.index >= dim) throw std::invalid_argument("to_dense: index out of range");
        out[e.index] = e.value;
    }
    return out;
}

// ---------------------------------------------------------------------------
// SpanEchelon

namespace {

void divide_content(SparseVector& v) {
    Integer g = 0;
    for (const auto& e : v) {
        g = gcd(g, e.value);
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : v) e.value /= g;
}

// a * v - b * w, entries merged by index.
SparseVector combine(const Integer& a, const SparseVector& v, const Integer& b, const SparseVector& w) {
    SparseVector out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].index < w[j].index)) {
            out.push_back({v[i].index, a * v[i].value});
            ++i;
        } else if (i == v.size() || w[j].index < v[i].index) {
            out.push_back({w[j].index, -b * w[j].value});
            ++j;
        } else {
            Integer x = a * v[i].value - b * w[j].value;
            if (x != 0) out.push_back({v[i].index, std::move(x)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

void SpanEchelon::check_dim(const SparseVector& v) const {
    if (!v.empty() && v.back().index >= dim_)
        throw std::invalid_argument("SpanEchelon: vector index exceeds dimension");
}

void SpanEchelon::reduce(SparseVector& v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().index);
        if (it == rows_.end()) return;
        const SparseVector& row = it->second;
        const Integer g = gcd(row.front().value, v.front().value);
        v = combine(row.front().value / g, v, v.front().value / g, row);
        divide_content(v);
    }
}

bool SpanEchelon::insert(SparseVector v) {
    check_dim(v);
    reduce(v);
    if (v.empty()) return false;
    divide_content(v);
    const std::size_t lead = v.front().index;
    rows_.emplace(lead, std::move(v));
    return true;
}

bool SpanEchelon::contains(SparseVector v) const {
    check_dim(v);
    reduce(v);
    return v.empty();
}

// ---------------------------------------------------------------------------
// Bareiss elimination and kernels

EchelonForm bareiss_echelon(IntegerMatrix m) {
    EchelonForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Integer pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer x = pivot * m(i, j) - lead * m(r, j);
                Integer q;
                Integer rem;
                boost::multiprecision::divide_qr(x, prev, q, rem);
                if (rem != 0) throw std::logic_error("bareiss_echelon: inexact division");
                m(i, j) = std::move(q);
            }
            m(i, c) = 0;
        }
        prev = pivot;
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const IntegerMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

namespace {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, denominator_of(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = numerator_of(m(i, j)) * (den / denominator_of(m(i, j)));
    }
    return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return rank(clear_denominators(m)); }

std::vector<IntegerVector> kernel_basis(const IntegerMatrix& m) {
    const EchelonForm e = bareiss_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<IntegerVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols);
        x[f] = 1;
        for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (e.reduced(k, j) != 0 && x[j] != 0) acc += Rational(e.reduced(k, j)) * x[j];
            x[pc] = -acc / Rational(e.reduced(k, pc));
        }
        basis.push_back(primitive_integer_multiple(x));
    }
    return basis;
}

std::vector<IntegerVector> kernel_basis(const RationalMatrix& m) {
    return kernel_basis(clear_denominators(m));
}

bool in_span(const RationalVector& v, const std::vector<RationalVector>& vectors) {
    SpanEchelon span(v.size());
    for (const auto& s : vectors) {
        if (s.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
        span.insert(to_sparse(s));
    }
    return span.contains(v);
}

bool in_span(const IntegerVector& v, const std::vector<IntegerVector>& vectors) {
    SpanEchelon span(v.size());
    for (const auto& s : vectors) {
        if (s.size() != v.size()) throw std::invalid_argument("in_span: dimension mismatch");
        span.insert(to_sparse(s));
    }
    return span.contains(v);
}

bool spans_equal(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b,
                 std::size_t dim) {
    SpanEchelon sa(dim);
    SpanEchelon sb(dim);
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    if (sa.rank() != sb.rank()) return false;
    return std::all_of(a.begin(), a.end(), [&](const IntegerVector& v) { return sb.contains(v); });
}

// ---------------------------------------------------------------------------
// Hermite normal form and lattices

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row[dst] -= q * row[src]
void subtract_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
    HermiteForm out;
    out.h = m;
    out.transform = IntegerMatrix::identity(m.rows());
    IntegerMatrix& h = out.h;
    IntegerMatrix& u = out.transform;
    const std::size_t rows = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
            }
            if (best == rows) break;
            swap_rows(h, r, best);
            swap_rows(u, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                const Integer q = h(i, c) / h(r, c);
                subtract_row(h, i, r, q);
                subtract_row(u, i, r, q);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(h(i, c), h(r, c));
            subtract_row(h, i, r, q);
            subtract_row(u, i, r, q);
        }
        ++r;
    }
    out.rank = r;
    return out;
}

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

struct GramSchmidt {
    std::vector<RationalVector> mu;
    RationalVector norms;
};

GramSchmidt gram_schmidt(const std::vector<IntegerVector>& b) {
    const std::size_t k = b.size();
    GramSchmidt gs;
    gs.mu.assign(k, RationalVector(k));
    gs.norms.assign(k, 0);
    std::vector<RationalVector> star(k);
    for (std::size_t i = 0; i < k; ++i) {
        RationalVector bi(b[i].begin(), b[i].end());
        star[i] = bi;
        for (std::size_t j = 0; j < i; ++j) {
            gs.mu[i][j] = dot(bi, star[j]) / gs.norms[j];
            for (std::size_t x = 0; x < bi.size(); ++x) star[i][x] -= gs.mu[i][j] * star[j][x];
        }
        gs.norms[i] = dot(star[i], star[i]);
        if (gs.norms[i] == 0) throw std::invalid_argument("lll_reduce: dependent vectors");
    }
    return gs;
}

Integer round_nearest(const Rational& q) {
    const Rational shifted = q + Rational(1, 2);
    return floor_div(numerator_of(shifted), denominator_of(shifted));
}

}  // namespace

std::vector<IntegerVector> lll_reduce(std::vector<IntegerVector> b) {
    const std::size_t k = b.size();
    if (k < 2) return b;
    const Rational delta(3, 4);
    GramSchmidt gs = gram_schmidt(b);
    std::size_t i = 1;
    while (i < k) {
        for (std::size_t j = i; j-- > 0;) {
            if (abs(gs.mu[i][j]) * 2 > 1) {
                const Integer q = round_nearest(gs.mu[i][j]);
                for (std::size_t x = 0; x < b[i].size(); ++x) b[i][x] -= q * b[j][x];
                gs = gram_schmidt(b);
            }
        }
        const Rational m = gs.mu[i][i - 1];
        if (gs.norms[i] >= (delta - m * m) * gs.norms[i - 1]) {
            ++i;
        } else {
            std::swap(b[i], b[i - 1]);
            gs = gram_schmidt(b);
            i = std::max<std::size_t>(i - 1, 1);
        }
    }
    return b;
}

std::vector<IntegerVector> lattice_kernel(const IntegerMatrix& a) {
    const HermiteForm hf = hermite_normal_form(a.transpose());
    std::vector<IntegerVector> basis;
    for (std::size_t i = hf.rank; i < hf.transform.rows(); ++i) basis.push_back(hf.transform.row(i));
    basis = lll_reduce(std::move(basis));
    for (auto& v : basis) make_primitive(v);
    return basis;
}

std::optional<IntegerVector> integer_solve(const IntegerMatrix& b, const IntegerVector& target) {
    if (target.size() != b.rows())
        throw std::invalid_argument("integer_solve: target has length " + std::to_string(target.size()) +
                                    ", expected " + std::to_string(b.rows()));
    const std::size_t k = b.cols();
    if (k == 0) {
        if (is_zero(target)) return IntegerVector{};
        return std::nullopt;
    }
    const HermiteForm hf = hermite_normal_form(b.transpose());
    IntegerVector residual = target;
    IntegerVector mu(hf.rank);
    std::size_t scan = 0;
    for (std::size_t i = 0; i < hf.rank; ++i) {
        std::size_t pc = 0;
        while (hf.h(i, pc) == 0) ++pc;
        for (; scan < pc; ++scan)
            if (residual[scan] != 0) return std::nullopt;
        Integer q;
        Integer rem;
        boost::multiprecision::divide_qr(residual[pc], hf.h(i, pc), q, rem);
        if (rem != 0) return std::nullopt;
        mu[i] = q;
        for (std::size_t j = pc; j < residual.size(); ++j)
            if (hf.h(i, j) != 0) residual[j] -= q * hf.h(i, j);
        scan = pc + 1;
    }
    if (!is_zero(residual)) return std::nullopt;
    IntegerVector lambda(k);
    for (std::size_t i = 0; i < hf.rank; ++i) {
        if (mu[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (hf.transform(i, j) != 0) lambda[j] += mu[i] * hf.transform(i, j);
    }
    return lambda;
}

}  // namespace toricsym

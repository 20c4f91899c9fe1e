#include "toricsym/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toricsym/symbolic.hpp"

namespace toricsym {

std::optional<std::size_t> Fiber::index_of(const ExponentVector& beta) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), beta);
    if (it == monomials.end() || *it != beta) return std::nullopt;
    return static_cast<std::size_t>(it - monomials.begin());
}

namespace {

class FiberWalker {
public:
    FiberWalker(const ToricMatrix& a, Multidegree residual)
        : a_(a), residual_(std::move(residual)), current_(a.cols(), 0), last_support_(a.rows(), -1) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (a(i, j) > 0) last_support_[i] = static_cast<std::ptrdiff_t>(j);
    }

    std::vector<ExponentVector> run() {
        walk(0);
        return std::move(found_);
    }

private:
    bool dead_end(std::size_t j) const {
        for (std::size_t i = 0; i < residual_.size(); ++i)
            if (residual_[i] > 0 && last_support_[i] < static_cast<std::ptrdiff_t>(j)) return true;
        return false;
    }

    void walk(std::size_t j) {
        if (dead_end(j)) return;
        if (j == a_.cols()) {
            found_.emplace_back(current_);
            return;
        }
        std::int64_t bound = -1;
        for (std::size_t i = 0; i < a_.rows(); ++i) {
            if (a_(i, j) == 0) continue;
            const std::int64_t q = residual_[i] / a_(i, j);
            bound = bound < 0 ? q : std::min(bound, q);
        }
        for (std::int64_t c = 0; c <= bound; ++c) {
            current_[j] = c;
            walk(j + 1);
            for (std::size_t i = 0; i < a_.rows(); ++i) residual_[i] -= a_(i, j);
        }
        for (std::size_t i = 0; i < a_.rows(); ++i) residual_[i] += (bound + 1) * a_(i, j);
        current_[j] = 0;
    }

    const ToricMatrix& a_;
    Multidegree residual_;
    std::vector<std::int64_t> current_;
    std::vector<std::ptrdiff_t> last_support_;
    std::vector<ExponentVector> found_;
};

void compositions(std::size_t n, std::size_t degree, std::vector<std::int64_t>& current, std::size_t j,
                  std::vector<ExponentVector>& out) {
    if (j + 1 == n) {
        current[j] = static_cast<std::int64_t>(degree);
        out.emplace_back(current);
        current[j] = 0;
        return;
    }
    for (std::size_t c = 0; c <= degree; ++c) {
        current[j] = static_cast<std::int64_t>(c);
        compositions(n, degree - c, current, j + 1, out);
    }
    current[j] = 0;
}

}  // namespace

Fiber enumerate_fiber(const ToricMatrix& a, const Multidegree& sigma) {
    if (sigma.size() != a.rows())
        throw std::invalid_argument("enumerate_fiber: sigma has length " + std::to_string(sigma.size()) +
                                    ", expected " + std::to_string(a.rows()));
    for (auto x : sigma)
        if (x < 0) throw std::invalid_argument("enumerate_fiber: negative multidegree entry");
    return Fiber{sigma, FiberWalker(a, sigma).run(), a.cols()};
}

std::vector<Fiber> fibers_of_total_degree(const ToricMatrix& a, std::size_t degree) {
    std::vector<ExponentVector> monomials;
    std::vector<std::int64_t> scratch(a.cols(), 0);
    compositions(a.cols(), degree, scratch, 0, monomials);
    std::set<Multidegree> sigmas;
    for (const auto& beta : monomials) sigmas.insert(a.multidegree(beta));
    std::vector<Fiber> out;
    out.reserve(sigmas.size());
    for (const auto& sigma : sigmas) out.push_back(enumerate_fiber(a, sigma));
    return out;
}

RationalVector fiber_coordinates(const Polynomial& p, const Fiber& fiber) {
    RationalVector out(fiber.size());
    for (const auto& [e, c] : p.terms()) {
        auto idx = fiber.index_of(e);
        if (!idx) throw std::invalid_argument("fiber_coordinates: term " + monomial_to_string(e) + " outside fiber");
        out[*idx] = c;
    }
    return out;
}

Polynomial polynomial_from_coordinates(const Fiber& fiber, const IntegerVector& coords) {
    if (coords.size() != fiber.size()) throw std::invalid_argument("polynomial_from_coordinates: length mismatch");
    Polynomial p(fiber.ambient);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) p.add_term(fiber.monomials[i], Rational(coords[i]));
    return p;
}

std::vector<GeneratorRecord> toric_generators(const ToricMatrix& a, std::size_t max_degree) {
    return symbolic_generators(a, 1, max_degree);
}

std::size_t default_degree_bound(const ToricMatrix& a) { return static_cast<std::size_t>(2 * a.max_column_sum()); }

namespace {

bool all_integer_labels(const std::vector<std::string>& labels) {
    return std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
        if (s.empty() || s.size() > 18) return false;
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
}

}  // namespace

std::vector<std::string> incidence_vertex_order(const std::vector<Edge>& edges) {
    std::set<std::string> unique;
    for (const auto& e : edges) {
        unique.insert(e.u);
        unique.insert(e.v);
    }
    std::vector<std::string> labels(unique.begin(), unique.end());
    if (all_integer_labels(labels)) {
        std::sort(labels.begin(), labels.end(), [](const std::string& x, const std::string& y) {
            return std::stoll(x) < std::stoll(y) || (std::stoll(x) == std::stoll(y) && x < y);
        });
    }
    return labels;
}

ToricMatrix incidence_matrix(const std::vector<Edge>& edges) {
    if (edges.empty()) throw std::invalid_argument("incidence_matrix: graph has no edges");
    const auto labels = incidence_vertex_order(edges);
    auto position = [&](const std::string& label) {
        return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("incidence_matrix: self-loop at vertex " + e.u);
        const std::size_t pu = position(e.u);
        const std::size_t pv = position(e.v);
        pairs.emplace_back(std::min(pu, pv), std::max(pu, pv));
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
        throw std::invalid_argument("incidence_matrix: repeated edge");
    return incidence_matrix_ordered(labels.size(), pairs);
}

ToricMatrix incidence_matrix_ordered(std::size_t vertex_count,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (edges.empty()) throw std::invalid_argument("incidence_matrix: graph has no edges");
    std::vector<std::vector<std::int64_t>> rows(vertex_count, std::vector<std::int64_t>(edges.size(), 0));
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto [u, v] = edges[k];
        if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("incidence_matrix: vertex out of range");
        if (u == v) throw std::invalid_argument("incidence_matrix: self-loop");
        rows[u][k] = 1;
        rows[v][k] = 1;
    }
    return ToricMatrix(std::move(rows));
}

}  // namespace toricsym

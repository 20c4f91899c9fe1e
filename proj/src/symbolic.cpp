#include "toricsym/symbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toricsym {

namespace {

void multisets_rec(std::size_t n, std::size_t t, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == t) {
        out.push_back(cur);
        return;
    }
    for (std::size_t j = start; j < n; ++j) {
        cur.push_back(j);
        multisets_rec(n, t, j, cur, out);
        cur.pop_back();
    }
}

Integer moment_entry(const ExponentVector& beta, const std::vector<std::size_t>& label) {
    Integer x = 1;
    for (auto j : label) {
        if (beta[j] == 0) return 0;
        x *= beta[j];
    }
    return x;
}

// x (x-1) ... (x-k+1)
Integer falling_factorial(std::int64_t x, std::int64_t k) {
    Integer out = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (x - i <= 0) return 0;
        out *= (x - i);
    }
    return out;
}

Multidegree subtract(const Multidegree& a, const Multidegree& b) {
    Multidegree out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool nonnegative(const Multidegree& s) {
    return std::all_of(s.begin(), s.end(), [](auto x) { return x >= 0; });
}

struct SparseLess {
    bool operator()(const SparseVector& a, const SparseVector& b) const {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].index != b[i].index) return a[i].index < b[i].index;
            if (a[i].value != b[i].value) return a[i].value < b[i].value;
        }
        return a.size() < b.size();
    }
};

// A homogeneous product of generators with coefficients scaled to primitive integers.
struct ScaledProduct {
    Multidegree tau;
    std::vector<std::pair<ExponentVector, Integer>> terms;
};

ScaledProduct scale_to_integers(const Polynomial& p, const ToricMatrix& a) {
    ScaledProduct out;
    out.tau = a.multidegree(p.terms().begin()->first);
    Integer den = 1;
    for (const auto& [e, c] : p.terms()) den = lcm(den, denominator_of(c));
    Integer g = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer x = numerator_of(c) * (den / denominator_of(c));
        g = gcd(g, x);
        out.terms.emplace_back(e, std::move(x));
    }
    for (auto& term : out.terms) term.second /= g;
    return out;
}

// Products of all size-t multisets of generators, skipping zero products and
// those whose multidegree does not fit under sigma.
void collect_products(const ToricMatrix& a, const std::vector<Polynomial>& gens,
                      const std::vector<Multidegree>& taus, std::size_t t, const Multidegree& sigma,
                      std::size_t start, const Polynomial& prefix, const Multidegree& prefix_tau,
                      std::size_t depth, std::vector<ScaledProduct>& out) {
    if (depth == t) {
        if (!prefix.is_zero()) out.push_back(scale_to_integers(prefix, a));
        return;
    }
    for (std::size_t g = start; g < gens.size(); ++g) {
        Multidegree tau = prefix_tau;
        for (std::size_t i = 0; i < tau.size(); ++i) tau[i] += taus[g][i];
        if (!nonnegative(subtract(sigma, tau))) continue;
        collect_products(a, gens, taus, t, sigma, g, prefix * gens[g], tau, depth + 1, out);
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t t) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    multisets_rec(n, t, 0, cur, out);
    return out;
}

MomentMatrix moment_matrix(const Fiber& fiber, std::size_t order) {
    MomentMatrix mm;
    mm.fiber = fiber;
    mm.order = order;
    mm.row_labels = multisets(fiber.ambient, order);
    mm.matrix = IntegerMatrix(mm.row_labels.size(), fiber.size());
    for (std::size_t r = 0; r < mm.row_labels.size(); ++r)
        for (std::size_t c = 0; c < fiber.size(); ++c) mm.matrix(r, c) = moment_entry(fiber.monomials[c], mm.row_labels[r]);
    return mm;
}

RationalVector moment_image(const Polynomial& p, std::size_t order) {
    const auto labels = multisets(p.ambient(), order);
    RationalVector out(labels.size());
    for (std::size_t r = 0; r < labels.size(); ++r)
        for (const auto& [e, c] : p.terms()) {
            const Integer x = moment_entry(e, labels[r]);
            if (x != 0) out[r] += c * Rational(x);
        }
    return out;
}

SymbolicComponent symbolic_component(const ToricMatrix& a, const Multidegree& sigma, std::size_t t) {
    return symbolic_component(enumerate_fiber(a, sigma), t);
}

SymbolicComponent symbolic_component(const Fiber& fiber, std::size_t t) {
    if (t == 0) throw std::invalid_argument("symbolic_component: t must be >= 1");
    SymbolicComponent comp;
    comp.sigma = fiber.sigma;
    comp.order = t;
    comp.fiber = fiber;
    const bool zero_sigma = std::all_of(fiber.sigma.begin(), fiber.sigma.end(), [](auto x) { return x == 0; });
    if (zero_sigma || fiber.size() < 2) return comp;

    if (t == 1) {
        const std::size_t last = fiber.size() - 1;
        for (std::size_t i = 0; i < last; ++i) {
            IntegerVector v(fiber.size());
            v[i] = 1;
            v[last] = -1;
            comp.coordinates.push_back(std::move(v));
        }
    } else {
        comp.coordinates = kernel_basis(moment_matrix(fiber, t - 1).matrix);
    }
    for (const auto& v : comp.coordinates) comp.basis.push_back(polynomial_from_coordinates(fiber, v));
    return comp;
}

PowerComponentSpan ideal_component_span(const ToricMatrix& a, const std::vector<Polynomial>& generators,
                                        std::size_t t, const Multidegree& sigma) {
    return ideal_component_span(a, generators, t, enumerate_fiber(a, sigma));
}

PowerComponentSpan ideal_component_span(const ToricMatrix& a, const std::vector<Polynomial>& generators,
                                        std::size_t t, const Fiber& fiber) {
    if (t == 0) throw std::invalid_argument("ideal_component_span: t must be >= 1");
    std::vector<Polynomial> gens;
    std::vector<Multidegree> taus;
    for (const auto& g : generators) {
        if (g.ambient() != a.cols()) throw std::invalid_argument("ideal_component_span: generator ambient mismatch");
        if (!is_homogeneous(g, a)) throw std::invalid_argument("ideal_component_span: generator is not phi_A-homogeneous");
        if (g.is_zero()) continue;
        taus.push_back(multidegree_of(g, a));
        gens.push_back(g);
    }

    std::vector<ScaledProduct> products;
    collect_products(a, gens, taus, t, fiber.sigma, 0, Polynomial::constant(a.cols(), 1),
                     Multidegree(a.rows(), 0), 0, products);

    std::map<Multidegree, Fiber> cofactor_fibers;
    std::set<SparseVector, SparseLess> seen;
    PowerComponentSpan out;
    out.fiber = fiber;
    for (const auto& prod : products) {
        const Multidegree rest = subtract(fiber.sigma, prod.tau);
        auto it = cofactor_fibers.find(rest);
        if (it == cofactor_fibers.end()) it = cofactor_fibers.emplace(rest, enumerate_fiber(a, rest)).first;
        for (const auto& gamma : it->second.monomials) {
            SparseVector v;
            v.reserve(prod.terms.size());
            for (const auto& [e, c] : prod.terms) {
                auto idx = fiber.index_of(e + gamma);
                if (!idx) throw std::logic_error("ideal_component_span: product term outside fiber");
                v.push_back({*idx, c});
            }
            std::sort(v.begin(), v.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
            if (seen.insert(v).second) out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

bool in_power(const ToricMatrix& a, const Polynomial& f, const std::vector<Polynomial>& generators, std::size_t t) {
    if (f.is_zero()) return true;
    const auto span = ideal_component_span(a, generators, t, multidegree_of(f, a));
    SpanEchelon echelon(span.fiber.size());
    for (const auto& v : span.vectors) echelon.insert(v);
    return echelon.contains(fiber_coordinates(f, span.fiber));
}

std::vector<GeneratorRecord> symbolic_generators(const ToricMatrix& a, std::size_t t, std::size_t max_degree) {
    if (t == 0) throw std::invalid_argument("symbolic_generators: t must be >= 1");
    std::vector<GeneratorRecord> out;
    std::vector<Polynomial> emitted;
    std::set<Multidegree> visited;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        for (const auto& fiber : fibers_of_total_degree(a, d)) {
            if (!visited.insert(fiber.sigma).second) continue;
            const SymbolicComponent comp = symbolic_component(fiber, t);
            if (comp.coordinates.empty()) continue;
            const auto span = ideal_component_span(a, emitted, 1, fiber);
            SpanEchelon echelon(fiber.size());
            for (const auto& v : span.vectors) echelon.insert(v);
            for (std::size_t k = 0; k < comp.coordinates.size(); ++k) {
                if (!echelon.insert(comp.coordinates[k])) continue;
                out.push_back({fiber.sigma, static_cast<std::int64_t>(d), comp.basis[k]});
                emitted.push_back(comp.basis[k]);
            }
        }
    }
    return out;
}

bool nz_member(const Polynomial& f, const ToricMatrix& a, std::size_t t) {
    if (t == 0) throw std::invalid_argument("nz_member: t must be >= 1");
    // Derivatives d^M f for nondecreasing index sequences M, level by level.
    std::vector<std::pair<std::size_t, Polynomial>> level{{0, f}};
    for (std::size_t k = 0; k < t; ++k) {
        for (const auto& [first, g] : level)
            if (!in_toric_ideal(g, a)) return false;
        if (k + 1 == t) break;
        std::vector<std::pair<std::size_t, Polynomial>> next;
        for (const auto& [first, g] : level) {
            if (g.is_zero()) continue;
            for (std::size_t j = first; j < f.ambient(); ++j) next.emplace_back(j, partial_derivative(g, j));
        }
        level = std::move(next);
    }
    return true;
}

IntegerMatrix derivative_constraint_matrix(const Fiber& fiber, std::size_t t) {
    std::vector<std::vector<std::size_t>> labels;
    for (std::size_t k = 0; k < t; ++k) {
        auto ms = multisets(fiber.ambient, k);
        labels.insert(labels.end(), ms.begin(), ms.end());
    }
    IntegerMatrix m(labels.size(), fiber.size());
    for (std::size_t r = 0; r < labels.size(); ++r) {
        std::vector<std::int64_t> mu(fiber.ambient, 0);
        for (auto j : labels[r]) ++mu[j];
        for (std::size_t c = 0; c < fiber.size(); ++c) {
            Integer x = 1;
            for (std::size_t j = 0; j < fiber.ambient && x != 0; ++j)
                if (mu[j] > 0) x *= falling_factorial(fiber.monomials[c][j], mu[j]);
            m(r, c) = x;
        }
    }
    return m;
}

std::vector<IntegerVector> nz_subspace(const ToricMatrix& a, const Multidegree& sigma, std::size_t t) {
    if (t == 0) throw std::invalid_argument("nz_subspace: t must be >= 1");
    const Fiber fiber = enumerate_fiber(a, sigma);
    if (fiber.size() == 0) return {};
    return kernel_basis(derivative_constraint_matrix(fiber, t));
}

bool kernel_containment_holds(const Fiber& fiber, std::size_t s) {
    if (s == 0) throw std::invalid_argument("kernel_containment_holds: s must be >= 1");
    const IntegerMatrix lower = moment_matrix(fiber, s - 1).matrix;
    for (const auto& v : kernel_basis(moment_matrix(fiber, s).matrix))
        if (!is_zero(lower * v)) return false;
    return true;
}

namespace {

ExponentVector all_ones(std::size_t n) { return ExponentVector(std::vector<std::int64_t>(n, 1)); }

Multidegree shifted_sigma(const ToricMatrix& a, const Multidegree& sigma, std::size_t k) {
    Multidegree out = sigma;
    const Multidegree ones = a.all_ones_image();
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += static_cast<std::int64_t>(k) * ones[i];
    return out;
}

}  // namespace

std::optional<std::size_t> saturation_witness(const ToricMatrix& a, const Polynomial& f,
                                              const std::vector<Polynomial>& generators, std::size_t t,
                                              std::size_t a_max) {
    if (!is_homogeneous(f, a)) throw std::invalid_argument("saturation_witness: f is not phi_A-homogeneous");
    if (f.is_zero()) return 0;
    const Multidegree sigma = multidegree_of(f, a);
    const ExponentVector m = all_ones(a.cols());
    for (std::size_t k = 0; k <= a_max; ++k) {
        const auto span = ideal_component_span(a, generators, t, shifted_sigma(a, sigma, k));
        SpanEchelon echelon(span.fiber.size());
        for (const auto& v : span.vectors) echelon.insert(v);
        if (echelon.contains(fiber_coordinates(f.shifted(m.scaled(static_cast<std::int64_t>(k))), span.fiber)))
            return k;
    }
    return std::nullopt;
}

bool verify_saturation_witness(const ToricMatrix& a, const Polynomial& f, const std::vector<Polynomial>& generators,
                               std::size_t t, std::size_t witness) {
    if (f.is_zero()) return true;
    const Polynomial mf = Polynomial::monomial(all_ones(a.cols())).pow(static_cast<unsigned>(witness)) * f;
    if (!is_homogeneous(mf, a)) return false;
    const Multidegree target = shifted_sigma(a, multidegree_of(f, a), witness);
    if (multidegree_of(mf, a) != target) return false;

    const auto span = ideal_component_span(a, generators, t, target);
    std::vector<RationalVector> spanning;
    spanning.reserve(span.vectors.size());
    for (const auto& v : span.vectors) {
        const IntegerVector dense = to_dense(v, span.fiber.size());
        spanning.emplace_back(dense.begin(), dense.end());
    }
    if (!in_span(fiber_coordinates(mf, span.fiber), spanning)) return false;

    const RationalVector image = moment_image(f, t - 1);
    return std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; });
}

IntegerVector pi_of_binomial_product(const ToricMatrix& a, const std::vector<LatticeVector>& vs,
                                     const ExponentVector& beta) {
    if (vs.empty()) throw std::invalid_argument("pi_of_binomial_product: need at least one vector");
    if (beta.size() != a.cols()) throw std::invalid_argument("pi_of_binomial_product: beta length mismatch");
    for (const auto& v : vs)
        if (!in_lattice_kernel(a, v)) throw std::invalid_argument("pi_of_binomial_product: vector not in ker(A)");
    const std::size_t t = vs.size();
    const auto labels = multisets(a.cols(), t);
    IntegerVector out(labels.size());
    std::vector<std::size_t> perm(t);
    for (std::size_t r = 0; r < labels.size(); ++r) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        Integer total = 0;
        do {
            Integer term = 1;
            for (std::size_t k = 0; k < t && term != 0; ++k) term *= vs[perm[k]][labels[r][k]];
            total += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out[r] = total;
    }
    return out;
}

std::vector<Polynomial> lattice_binomials(const ToricMatrix& a) {
    std::vector<Polynomial> out;
    for (const auto& u : lattice_kernel(a.to_integer_matrix())) out.push_back(binomial(to_lattice_vector(u)));
    return out;
}

std::vector<Polynomial> polynomials_of(const std::vector<GeneratorRecord>& records) {
    std::vector<Polynomial> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.polynomial);
    return out;
}

}  // namespace toricsym

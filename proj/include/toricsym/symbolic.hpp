#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricsym/linalg.hpp"
#include "toricsym/poly.hpp"
#include "toricsym/toric.hpp"

namespace toricsym {

/// Size-t multisets over {0..n-1} as sorted tuples, in lexicographic order.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t t);

/// Matrix of pi^(t) restricted to a fiber. Row u (a size-t multiset) and
/// column beta hold prod_{j in u} beta_j; order 0 is a single all-ones row.
/// Symmetric multiset rows have the same kernel as the full n^t tensor rows.
struct MomentMatrix {
    Fiber fiber;
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> row_labels;
    IntegerMatrix matrix;
};

MomentMatrix moment_matrix(const Fiber& fiber, std::size_t order);

/// pi^(t)(p) in multiset coordinates.
RationalVector moment_image(const Polynomial& p, std::size_t order);

/// Basis of the degree-sigma piece of I_A^(t), i.e. ker pi^(t-1) on V_{A,sigma}.
/// For t = 1 the basis is e^{beta_i} - e^{beta_last}; for t >= 2 it is the
/// normalized kernel basis of the order t-1 moment matrix. sigma = 0 gives an
/// empty basis.
struct SymbolicComponent {
    Multidegree sigma;
    std::size_t order = 0;
    Fiber fiber;
    std::vector<IntegerVector> coordinates;
    std::vector<Polynomial> basis;
};

SymbolicComponent symbolic_component(const ToricMatrix& a, const Multidegree& sigma, std::size_t t);
SymbolicComponent symbolic_component(const Fiber& fiber, std::size_t t);

/// Degree-by-degree sweep over fibers_of_total_degree for d = 1..max_degree.
/// Within each fiber, keeps the component basis elements that are not in the
/// span of monomial multiples of previously emitted generators. Fibers are
/// visited once, at the smallest degree where they first appear.
std::vector<GeneratorRecord> symbolic_generators(const ToricMatrix& a, std::size_t t, std::size_t max_degree);

/// Spanning vectors of (<G>^t)_sigma in fiber coordinates: e^gamma times each
/// product of a size-t multiset of generators, for every gamma in the fiber of
/// sigma - tau. Vectors are primitive and deduplicated.
struct PowerComponentSpan {
    Fiber fiber;
    std::vector<SparseVector> vectors;
};

/// Throws std::invalid_argument if a generator is not phi_A-homogeneous.
PowerComponentSpan ideal_component_span(const ToricMatrix& a, const std::vector<Polynomial>& generators,
                                        std::size_t t, const Multidegree& sigma);
PowerComponentSpan ideal_component_span(const ToricMatrix& a, const std::vector<Polynomial>& generators,
                                        std::size_t t, const Fiber& fiber);

/// f in (<G>^t)_sigma for homogeneous f of multidegree sigma.
bool in_power(const ToricMatrix& a, const Polynomial& f, const std::vector<Polynomial>& generators, std::size_t t);

/// Nagata-Zariski test: every derivative of order < t lies in I_A.
bool nz_member(const Polynomial& f, const ToricMatrix& a, std::size_t t);

/// Rows indexed by multi-indices mu with |mu| < t; the entry for beta is the
/// coefficient prod_j beta_j (beta_j - 1) ... (beta_j - mu_j + 1) of d^mu e^beta.
IntegerMatrix derivative_constraint_matrix(const Fiber& fiber, std::size_t t);
/// {f in V_sigma : nz_member(f, A, t)} as a kernel basis.
std::vector<IntegerVector> nz_subspace(const ToricMatrix& a, const Multidegree& sigma, std::size_t t);

/// ker pi^(s) is contained in ker pi^(s-1) on this fiber. True for every
/// sigma != 0; at sigma = 0 the constant 1 is in ker pi^(s) for s >= 1 but
/// not in ker pi^(0), so this returns false there.
bool kernel_containment_holds(const Fiber& fiber, std::size_t s);

/// Smallest a in 0..a_max with m^a f in (<G>^t)_{sigma + a A 1}, m = e_1...e_n.
/// nullopt means the bound ran out, not that f is outside the saturation.
/// Throws std::invalid_argument if f is not phi_A-homogeneous.
std::optional<std::size_t> saturation_witness(const ToricMatrix& a, const Polynomial& f,
                                              const std::vector<Polynomial>& generators, std::size_t t,
                                              std::size_t a_max);

/// Recomputes m^a f by polynomial multiplication and checks it against the
/// power span again, and that f itself lies in ker pi^(t-1).
bool verify_saturation_witness(const ToricMatrix& a, const Polynomial& f, const std::vector<Polynomial>& generators,
                               std::size_t t, std::size_t witness);

/// Closed form sum_{w in Sym(t)} v_w(1) x ... x v_w(t) in multiset coordinates.
/// beta is accepted for interface symmetry with e^beta f_v1 ... f_vt; the value
/// does not depend on it. Throws if some v is not in ker(A).
IntegerVector pi_of_binomial_product(const ToricMatrix& a, const std::vector<LatticeVector>& vs,
                                     const ExponentVector& beta);

/// f_u for u in lattice_kernel(A).
std::vector<Polynomial> lattice_binomials(const ToricMatrix& a);

std::vector<Polynomial> polynomials_of(const std::vector<GeneratorRecord>& records);

}  // namespace toricsym

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricsym/numeric.hpp"
#include "toricsym/toric_matrix.hpp"

namespace toricsym {

/// Sparse polynomial in e_1..e_n over Q. Terms are kept in ascending
/// lexicographic order of exponents and never carry a zero coefficient.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit Polynomial(std::size_t ambient) : n_(ambient) {}

    static Polynomial monomial(const ExponentVector& e, const Rational& c = 1);
    static Polynomial constant(std::size_t ambient, const Rational& c);
    static Polynomial variable(std::size_t ambient, std::size_t j);

    std::size_t ambient() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ExponentVector& e) const;
    void add_term(const ExponentVector& e, const Rational& c);

    /// Largest total degree of a term. Throws std::domain_error on the zero polynomial.
    std::int64_t degree() const;
    Rational coefficient_sum() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;
    /// Product with the monomial e^shift.
    Polynomial shifted(const ExponentVector& shift) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_ambient(const Polynomial& other) const;

    std::size_t n_;
    TermMap terms_;
};

/// "1", "e1*e3", "e1^2*e3^2" (1-based variable names).
std::string monomial_to_string(const ExponentVector& e);
/// Signed monomial rendering in canonical term order, e.g. "e2*e4 - e1*e3".
std::string to_string(const Polynomial& p);

/// {"n": int, "terms": [{"c": "p/q", "e": [...]}]} with terms in canonical order.
nlohmann::json to_json(const Polynomial& p);
/// Throws std::invalid_argument on schema violations.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Formal partial derivative with respect to e_{j+1} (0-based index j).
/// Throws std::out_of_range if j >= ambient.
Polynomial partial_derivative(const Polynomial& p, std::size_t j);
/// Iterated derivative d^|M| / d e^M.
Polynomial partial_derivative(const Polynomial& p, const ExponentVector& multi_index);

struct FiberComponent {
    Multidegree sigma;
    Polynomial part;
};

/// Splits p by multidegree A*exponent, ordered by sigma. Empty for p = 0.
std::vector<FiberComponent> fiber_components(const Polynomial& p, const ToricMatrix& a);
/// True iff p has at most one fiber component.
bool is_homogeneous(const Polynomial& p, const ToricMatrix& a);
/// Multidegree of a nonzero homogeneous p; throws std::invalid_argument otherwise.
Multidegree multidegree_of(const Polynomial& p, const ToricMatrix& a);
/// Membership in I_A: every fiber component has coefficient sum zero.
bool in_toric_ideal(const Polynomial& p, const ToricMatrix& a);

using LatticeVector = std::vector<std::int64_t>;

LatticeVector to_lattice_vector(const IntegerVector& v);
bool in_lattice_kernel(const ToricMatrix& a, const LatticeVector& u);

/// u = u+ - u- with disjoint supports, and f_u = e^{u+} - e^{u-}.
class LatticeBinomial {
public:
    explicit LatticeBinomial(LatticeVector u);
    /// Also checks A u = 0.
    LatticeBinomial(const ToricMatrix& a, LatticeVector u);

    const LatticeVector& vector() const { return u_; }
    ExponentVector positive_part() const;
    ExponentVector negative_part() const;
    Polynomial polynomial() const;

private:
    LatticeVector u_;
};

ExponentVector positive_part(const LatticeVector& u);
ExponentVector negative_part(const LatticeVector& u);
/// f_u; zero when u = 0.
Polynomial binomial(const LatticeVector& u);

/// g with f_{lambda u} = g * f_u:
///   sgn(lambda) * sum_{i=0}^{|lambda|-1} e^{i u+ + (|lambda|-1-i) u-}.
Polynomial telescoping_cofactor(const LatticeVector& u, std::int64_t lambda);

struct RewriteTerm {
    ExponentVector cofactor;   // beta_i
    std::size_t basis_index;   // which basis vector u_i
    std::int64_t multiplier;   // lambda_i
    LatticeVector v;           // lambda_i * u_i
};

/// e^alpha f_u = sum_i e^{beta_i} f_{lambda_i u_i}, built by telescoping
/// e^{sum v_i+} - e^{sum v_i-} one binomial at a time.
struct MonomialMultipleRewrite {
    std::size_t ambient = 0;
    LatticeVector u;
    ExponentVector alpha;
    std::vector<RewriteTerm> terms;

    Polynomial lhs() const;
    /// sum_i e^{beta_i} f_{v_i}.
    Polynomial rhs() const;
    /// Same sum with each f_{lambda_i u_i} expanded as cofactor * f_{u_i}.
    Polynomial rhs_via_basis(const std::vector<LatticeVector>& basis) const;
};

/// Throws std::invalid_argument if u != sum lambda_i basis_i or sizes disagree.
MonomialMultipleRewrite rewrite_monomial_multiple(const LatticeVector& u,
                                                  const std::vector<LatticeVector>& basis,
                                                  const std::vector<std::int64_t>& lambda);

}  // namespace toricsym

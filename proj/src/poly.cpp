#include "toricsym/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace toricsym {

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::constant(std::size_t ambient, const Rational& c) {
    return monomial(ExponentVector(ambient), c);
}

Polynomial Polynomial::variable(std::size_t ambient, std::size_t j) {
    if (j >= ambient) throw std::out_of_range("Polynomial::variable: index out of range");
    std::vector<std::int64_t> e(ambient, 0);
    e[j] = 1;
    return monomial(ExponentVector(std::move(e)));
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != n_) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t Polynomial::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

Rational Polynomial::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void Polynomial::check_ambient(const Polynomial& other) const {
    if (other.n_ != n_)
        throw std::invalid_argument("Polynomial: ambient mismatch (" + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_) + ")");
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_ambient(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_ambient(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ambient(b);
    Polynomial out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [e, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, x * c);
    return out;
}

Polynomial Polynomial::shifted(const ExponentVector& shift) const {
    if (shift.size() != n_) throw std::invalid_argument("Polynomial::shifted: length mismatch");
    Polynomial out(n_);
    // Adding a fixed vector preserves lexicographic order.
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(n_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string monomial_to_string(const ExponentVector& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'e' + std::to_string(j + 1);
        if (e[j] > 1) out += '^' + std::to_string(e[j]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool is_one = e.is_zero();
        if (mag != 1) {
            os << to_string(mag);
            if (!is_one) os << '*';
        }
        if (!is_one || mag == 1) {
            if (is_one)
                os << '1';
            else
                os << monomial_to_string(e);
        }
    }
    return os.str();
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"c", to_string(c)}, {"e", e.entries()}});
    return {{"n", p.ambient()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j["n"].is_number_unsigned() ||
        !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON: expected {\"n\": int, \"terms\": [...]}");
    const auto n = j["n"].get<std::size_t>();
    Polynomial p(n);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e") || !t["c"].is_string() || !t["e"].is_array())
            throw std::invalid_argument("polynomial JSON: malformed term");
        std::vector<std::int64_t> e;
        for (const auto& x : t["e"]) {
            if (!x.is_number_integer()) throw std::invalid_argument("polynomial JSON: non-integer exponent");
            e.push_back(x.get<std::int64_t>());
        }
        if (e.size() != n) throw std::invalid_argument("polynomial JSON: exponent length mismatch");
        p.add_term(ExponentVector(std::move(e)), parse_rational(t["c"].get<std::string>()));
    }
    return p;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t j) {
    if (j >= p.ambient())
        throw std::out_of_range("partial_derivative: variable index " + std::to_string(j + 1) +
                                " out of range 1.." + std::to_string(p.ambient()));
    Polynomial out(p.ambient());
    for (const auto& [e, c] : p.terms()) {
        if (e[j] == 0) continue;
        std::vector<std::int64_t> d = e.entries();
        d[j] -= 1;
        out.add_term(ExponentVector(std::move(d)), c * e[j]);
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, const ExponentVector& multi_index) {
    if (multi_index.size() != p.ambient())
        throw std::invalid_argument("partial_derivative: multi-index length mismatch");
    Polynomial out = p;
    for (std::size_t j = 0; j < multi_index.size(); ++j)
        for (std::int64_t k = 0; k < multi_index[j]; ++k) out = partial_derivative(out, j);
    return out;
}

std::vector<FiberComponent> fiber_components(const Polynomial& p, const ToricMatrix& a) {
    if (p.ambient() != a.cols())
        throw std::invalid_argument("fiber_components: polynomial has " + std::to_string(p.ambient()) +
                                    " variables, matrix has " + std::to_string(a.cols()) + " columns");
    std::map<Multidegree, Polynomial> parts;
    for (const auto& [e, c] : p.terms()) {
        auto [it, inserted] = parts.try_emplace(a.multidegree(e), p.ambient());
        it->second.add_term(e, c);
    }
    std::vector<FiberComponent> out;
    out.reserve(parts.size());
    for (auto& [sigma, part] : parts) out.push_back({sigma, std::move(part)});
    return out;
}

bool is_homogeneous(const Polynomial& p, const ToricMatrix& a) { return fiber_components(p, a).size() <= 1; }

Multidegree multidegree_of(const Polynomial& p, const ToricMatrix& a) {
    auto parts = fiber_components(p, a);
    if (parts.size() != 1)
        throw std::invalid_argument(parts.empty() ? "zero polynomial has no multidegree"
                                                  : "polynomial is not phi_A-homogeneous");
    return parts.front().sigma;
}

bool in_toric_ideal(const Polynomial& p, const ToricMatrix& a) {
    for (const auto& part : fiber_components(p, a))
        if (part.part.coefficient_sum() != 0) return false;
    return true;
}

LatticeVector to_lattice_vector(const IntegerVector& v) {
    LatticeVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_int64(x));
    return out;
}

bool in_lattice_kernel(const ToricMatrix& a, const LatticeVector& u) {
    if (u.size() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * u[j];
        if (s != 0) return false;
    }
    return true;
}

ExponentVector positive_part(const LatticeVector& u) {
    std::vector<std::int64_t> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] > 0 ? u[i] : 0;
    return ExponentVector(std::move(e));
}

ExponentVector negative_part(const LatticeVector& u) {
    std::vector<std::int64_t> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] < 0 ? -u[i] : 0;
    return ExponentVector(std::move(e));
}

Polynomial binomial(const LatticeVector& u) {
    Polynomial f = Polynomial::monomial(positive_part(u));
    f.add_term(negative_part(u), -1);
    return f;
}

LatticeBinomial::LatticeBinomial(LatticeVector u) : u_(std::move(u)) {}

LatticeBinomial::LatticeBinomial(const ToricMatrix& a, LatticeVector u) : u_(std::move(u)) {
    if (!in_lattice_kernel(a, u_)) throw std::invalid_argument("LatticeBinomial: vector is not in ker(A)");
}

ExponentVector LatticeBinomial::positive_part() const { return toricsym::positive_part(u_); }
ExponentVector LatticeBinomial::negative_part() const { return toricsym::negative_part(u_); }
Polynomial LatticeBinomial::polynomial() const { return binomial(u_); }

Polynomial telescoping_cofactor(const LatticeVector& u, std::int64_t lambda) {
    Polynomial g(u.size());
    if (lambda == 0) return g;
    const std::int64_t k = lambda < 0 ? -lambda : lambda;
    const ExponentVector plus = positive_part(u);
    const ExponentVector minus = negative_part(u);
    for (std::int64_t i = 0; i < k; ++i) g.add_term(plus.scaled(i) + minus.scaled(k - 1 - i), 1);
    return lambda < 0 ? -g : g;
}

Polynomial MonomialMultipleRewrite::lhs() const { return binomial(u).shifted(alpha); }

Polynomial MonomialMultipleRewrite::rhs() const {
    Polynomial out(ambient);
    for (const auto& t : terms) out += binomial(t.v).shifted(t.cofactor);
    return out;
}

Polynomial MonomialMultipleRewrite::rhs_via_basis(const std::vector<LatticeVector>& basis) const {
    Polynomial out(ambient);
    for (const auto& t : terms) {
        const LatticeVector& ui = basis.at(t.basis_index);
        out += (telescoping_cofactor(ui, t.multiplier) * binomial(ui)).shifted(t.cofactor);
    }
    return out;
}

MonomialMultipleRewrite rewrite_monomial_multiple(const LatticeVector& u, const std::vector<LatticeVector>& basis,
                                                  const std::vector<std::int64_t>& lambda) {
    if (lambda.size() != basis.size())
        throw std::invalid_argument("rewrite_monomial_multiple: need one coefficient per basis vector");
    const std::size_t n = u.size();
    LatticeVector sum(n, 0);
    std::vector<RewriteTerm> terms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != n) throw std::invalid_argument("rewrite_monomial_multiple: length mismatch");
        if (lambda[i] == 0) continue;
        LatticeVector v(n);
        for (std::size_t x = 0; x < n; ++x) {
            v[x] = lambda[i] * basis[i][x];
            sum[x] += v[x];
        }
        terms.push_back({ExponentVector(n), i, lambda[i], std::move(v)});
    }
    if (sum != u) throw std::invalid_argument("rewrite_monomial_multiple: u is not sum lambda_i u_i");

    // beta_j = sum_{i<j} v_i- + sum_{i>j} v_i+
    ExponentVector plus_total(n);
    for (const auto& t : terms) plus_total = plus_total + positive_part(t.v);
    ExponentVector minus_prefix(n);
    ExponentVector plus_suffix = plus_total;
    for (auto& t : terms) {
        plus_suffix = plus_suffix - positive_part(t.v);
        t.cofactor = minus_prefix + plus_suffix;
        minus_prefix = minus_prefix + negative_part(t.v);
    }

    MonomialMultipleRewrite out;
    out.ambient = n;
    out.u = u;
    out.alpha = plus_total - positive_part(u);
    out.terms = std::move(terms);
    return out;
}

}  // namespace toricsym

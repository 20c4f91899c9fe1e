#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "toricsym/ingestion.hpp"
#include "toricsym/symbolic.hpp"

using namespace toricsym;

namespace {

ToricMatrix family(const std::string& d) { return build_family(parse_family(d)); }

Polynomial k33_determinant() {
    // e1e5e9 - e1e6e8 + e2e6e7 - e2e4e9 + e3e4e8 - e3e5e7
    auto mono = [](std::initializer_list<int> vars) {
        std::vector<std::int64_t> e(9, 0);
        for (int v : vars) e[v - 1] = 1;
        return ExponentVector(e);
    };
    Polynomial f(9);
    f.add_term(mono({1, 5, 9}), 1);
    f.add_term(mono({1, 6, 8}), -1);
    f.add_term(mono({2, 6, 7}), 1);
    f.add_term(mono({2, 4, 9}), -1);
    f.add_term(mono({3, 4, 8}), 1);
    f.add_term(mono({3, 5, 7}), -1);
    return f;
}

}  // namespace

TEST(Multisets, CountsAndOrder) {
    EXPECT_EQ(multisets(4, 0).size(), 1u);
    EXPECT_EQ(multisets(10, 2).size(), 55u);
    EXPECT_EQ(multisets(3, 3).size(), 10u);
    const auto m = multisets(3, 2);
    EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
    EXPECT_EQ(m.front(), (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(m.back(), (std::vector<std::size_t>{2, 2}));
}

TEST(MomentMatrix, OrderZeroIsAllOnes) {
    const Fiber f = enumerate_fiber(family("cycle:4"), {2, 2, 2, 2});
    const MomentMatrix m = moment_matrix(f, 0);
    ASSERT_EQ(m.matrix.rows(), 1u);
    for (std::size_t c = 0; c < f.size(); ++c) EXPECT_EQ(m.matrix(0, c), 1);
}

TEST(MomentMatrix, Cycle4SquareIsInKernelOfOrderOne) {
    const ToricMatrix a = family("cycle:4");
    const Polynomial f = binomial({1, -1, 1, -1});
    const RationalVector image = moment_image(f.pow(2), 1);
    EXPECT_TRUE(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
    const RationalVector first = moment_image(f, 1);
    EXPECT_FALSE(std::all_of(first.begin(), first.end(), [](const Rational& x) { return x == 0; }));
}

TEST(MomentMatrix, ImageMatchesMatrixTimesCoordinates) {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 40; ++iter) {
        const ToricMatrix a = oracle::random_toric_matrix(rng, 3, 4, 2);
        const Fiber f = enumerate_fiber(a, oracle::random_sigma(rng, a, 6));
        IntegerVector c(f.size());
        for (auto& x : c) x = static_cast<int>(rng() % 5) - 2;
        const Polynomial p = polynomial_from_coordinates(f, c);
        for (std::size_t order = 0; order <= 2; ++order) {
            const IntegerVector direct = moment_matrix(f, order).matrix * c;
            EXPECT_EQ(moment_image(p, order), RationalVector(direct.begin(), direct.end()));
        }
    }
}

TEST(SymbolicComponent, EdgeCases) {
    const ToricMatrix a = family("cycle:4");
    EXPECT_TRUE(symbolic_component(a, {0, 0, 0, 0}, 2).basis.empty());
    EXPECT_THROW(symbolic_component(a, {1, 1, 1, 1}, 0), std::invalid_argument);
    EXPECT_TRUE(symbolic_component(a, {1, 1, 1, 1}, 2).basis.empty());
    const auto c = symbolic_component(a, {2, 2, 2, 2}, 2);
    ASSERT_EQ(c.basis.size(), 1u);
    EXPECT_EQ(c.basis[0], binomial({1, -1, 1, -1}).pow(2));
}

TEST(SymbolicComponent, K33Determinant) {
    const ToricMatrix a = family("complete_bipartite:3,3");
    const auto c = symbolic_component(a, {1, 1, 1, 1, 1, 1}, 2);
    ASSERT_EQ(c.basis.size(), 1u);
    const Polynomial f = k33_determinant();
    EXPECT_TRUE(c.basis[0] == f || c.basis[0] == -f);
}

TEST(SymbolicComponent, OrderOneIsToricIdealPiece) {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        const ToricMatrix a = oracle::random_toric_matrix(rng, 3, 4, 2);
        const Fiber f = enumerate_fiber(a, oracle::random_sigma(rng, a, 6));
        const auto comp = symbolic_component(f, 1);
        if (f.size() == 0) continue;
        EXPECT_TRUE(oracle::same_span(comp.coordinates, kernel_basis(moment_matrix(f, 0).matrix)));
    }
}

TEST(SymbolicComponent, KernelEqualsDerivativeOracle) {
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 60; ++iter) {
        const ToricMatrix a = oracle::random_toric_matrix(rng, 3, 4, 2);
        const Multidegree sigma = oracle::random_sigma(rng, a, 8);
        const std::size_t t = 2 + rng() % 2;
        const auto comp = symbolic_component(a, sigma, t);
        const auto nz = nz_subspace(a, sigma, t);
        EXPECT_TRUE(oracle::same_span(comp.coordinates, nz));
        for (const auto& p : comp.basis) EXPECT_TRUE(nz_member(p, a, t));
    }
}

TEST(SymbolicComponent, KernelContainment) {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 60; ++iter) {
        const ToricMatrix a = oracle::random_toric_matrix(rng, 3, 4, 2);
        const Fiber f = enumerate_fiber(a, oracle::random_sigma(rng, a, 8));
        for (std::size_t s = 1; s <= 3; ++s) EXPECT_TRUE(kernel_containment_holds(f, s));
    }
}

TEST(SymbolicComponent, KernelContainmentFailsOnlyAtZero) {
    const Fiber zero = enumerate_fiber(family("cycle:4"), {0, 0, 0, 0});
    EXPECT_FALSE(kernel_containment_holds(zero, 1));
    EXPECT_TRUE(kernel_containment_holds(enumerate_fiber(family("cycle:4"), {1, 0, 0, 1}), 1));
    EXPECT_THROW(kernel_containment_holds(zero, 0), std::invalid_argument);
}

TEST(NzMember, RejectsElementsOfLowerOrderOnly) {
    const ToricMatrix a = family("cycle:4");
    const Polynomial f = binomial({1, -1, 1, -1});
    EXPECT_TRUE(nz_member(f, a, 1));
    EXPECT_FALSE(nz_member(f, a, 2));
    EXPECT_TRUE(nz_member(f.pow(2), a, 2));
    EXPECT_FALSE(nz_member(f.pow(2), a, 3));
    EXPECT_THROW(nz_member(f, a, 0), std::invalid_argument);
}

TEST(SymbolicGenerators, OrderOneMatchesToricGenerators) {
    const ToricMatrix a = family("complete_bipartite:3,3");
    const auto s = polynomials_of(symbolic_generators(a, 1, 3));
    const auto g = polynomials_of(toric_generators(a, 3));
    EXPECT_EQ(s, g);
}

TEST(SymbolicGenerators, Cycle4SecondPower) {
    const auto gens = symbolic_generators(family("cycle:4"), 2, 4);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0].polynomial, binomial({1, -1, 1, -1}).pow(2));
}

TEST(IdealComponentSpan, MembershipInPowers) {
    const ToricMatrix a = family("complete_bipartite:3,3");
    const auto minors = polynomials_of(toric_generators(a, 2));
    const Polynomial f = k33_determinant();
    EXPECT_TRUE(in_power(a, f, minors, 1));
    EXPECT_FALSE(in_power(a, f, minors, 2));
    EXPECT_TRUE(in_power(a, minors[0] * minors[3], minors, 2));
    EXPECT_TRUE(in_power(a, Polynomial(9), minors, 2));
    std::vector<Polynomial> bad{Polynomial::monomial(ExponentVector{1, 0, 0, 0, 0, 0, 0, 0, 0}) +
                                Polynomial::monomial(ExponentVector{1, 1, 0, 0, 0, 0, 0, 0, 0})};
    EXPECT_THROW(ideal_component_span(a, bad, 1, Multidegree{1, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST(IdealComponentSpan, VectorsArePrimitiveAndDistinct) {
    const ToricMatrix a = family("complete_bipartite:3,3");
    const auto minors = polynomials_of(toric_generators(a, 2));
    const auto span = ideal_component_span(a, minors, 2, Multidegree{2, 2, 2, 2, 2, 2});
    std::set<IntegerVector> seen;
    for (const auto& v : span.vectors) {
        const IntegerVector d = to_dense(v, span.fiber.size());
        EXPECT_EQ(content(d), 1);
        EXPECT_TRUE(seen.insert(d).second);
    }
}

TEST(Saturation, K33DeterminantWitness) {
    const ToricMatrix a = family("complete_bipartite:3,3");
    const auto minors = polynomials_of(toric_generators(a, 2));
    const Polynomial f = k33_determinant();
    EXPECT_EQ(saturation_witness(a, f, minors, 2, 4), std::optional<std::size_t>(1));
    EXPECT_EQ(saturation_witness(a, f, minors, 2, 0), std::nullopt);
    EXPECT_TRUE(verify_saturation_witness(a, f, minors, 2, 1));
    EXPECT_FALSE(verify_saturation_witness(a, f, minors, 2, 0));
    EXPECT_EQ(saturation_witness(a, f, lattice_binomials(a), 2, 4), std::optional<std::size_t>(1));

    // e5 e6 e9 f is in the square of the ideal.
    const Polynomial g = f.shifted(ExponentVector{0, 0, 0, 0, 1, 1, 0, 0, 1});
    EXPECT_TRUE(in_power(a, g, minors, 2));
}

TEST(Saturation, EdgeCases) {
    const ToricMatrix a = family("cycle:4");
    const auto gens = polynomials_of(toric_generators(a, 2));
    EXPECT_EQ(saturation_witness(a, Polynomial(4), gens, 2, 0), std::optional<std::size_t>(0));
    const Polynomial mixed = Polynomial::monomial(ExponentVector{1, 0, 0, 0}) + Polynomial::monomial(ExponentVector{0, 1, 0, 0});
    EXPECT_THROW(saturation_witness(a, mixed, gens, 2, 1), std::invalid_argument);
}

TEST(PiOfBinomialProduct, MatchesExpansionAndIgnoresBeta) {
    std::mt19937_64 rng(61);
    int checked = 0;
    while (checked < 60) {
        const ToricMatrix a = oracle::random_toric_matrix(rng, 2, 4, 2);
        const auto basis = lattice_kernel(a.to_integer_matrix());
        if (basis.empty()) continue;
        const std::size_t t = 1 + rng() % 3;
        std::vector<LatticeVector> vs;
        Polynomial prod = Polynomial::constant(a.cols(), 1);
        for (std::size_t k = 0; k < t; ++k) {
            vs.push_back(oracle::random_kernel_vector(rng, basis, 1));
            prod = prod * binomial(vs.back());
        }
        std::vector<std::int64_t> b1(a.cols()), b2(a.cols());
        for (auto& x : b1) x = static_cast<std::int64_t>(rng() % 3);
        for (auto& x : b2) x = static_cast<std::int64_t>(rng() % 3);
        const IntegerVector closed = pi_of_binomial_product(a, vs, ExponentVector(b1));
        EXPECT_EQ(closed, pi_of_binomial_product(a, vs, ExponentVector(b2)));
        const RationalVector direct = moment_image(prod.shifted(ExponentVector(b1)), t);
        EXPECT_EQ(RationalVector(closed.begin(), closed.end()), direct);
        ++checked;
    }
    const ToricMatrix c4 = family("cycle:4");
    EXPECT_THROW(pi_of_binomial_product(c4, {{1, 0, 0, 0}}, ExponentVector{0, 0, 0, 0}), std::invalid_argument);
}

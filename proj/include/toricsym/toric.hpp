#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricsym/poly.hpp"
#include "toricsym/toric_matrix.hpp"

namespace toricsym {

/// All monomials e^beta with A beta = sigma, in ascending lexicographic order.
/// Their span is the graded piece V_{A,sigma}.
struct Fiber {
    Multidegree sigma;
    std::vector<ExponentVector> monomials;
    std::size_t ambient = 0;  // number of variables n

    std::size_t size() const { return monomials.size(); }
    std::optional<std::size_t> index_of(const ExponentVector& beta) const;
};

/// Complete enumeration by residual-multidegree backtracking. Variable j ranges
/// over 0..min_{i: A_ij > 0} floor(residual_i / A_ij). Throws std::invalid_argument
/// if sigma has the wrong length or a negative entry.
Fiber enumerate_fiber(const ToricMatrix& a, const Multidegree& sigma);

/// One fiber per distinct multidegree of the standard-degree-d monomials, in
/// ascending sigma order. Each fiber is enumerated in full, so it can contain
/// monomials of other standard degrees when column sums differ.
std::vector<Fiber> fibers_of_total_degree(const ToricMatrix& a, std::size_t degree);

/// Coordinates of p in the monomial basis of the fiber. Throws if p has a term outside it.
RationalVector fiber_coordinates(const Polynomial& p, const Fiber& fiber);
Polynomial polynomial_from_coordinates(const Fiber& fiber, const IntegerVector& coords);

struct GeneratorRecord {
    Multidegree sigma;
    std::int64_t degree = 0;  // standard degree of the sweep that produced it
    Polynomial polynomial;
};

/// Minimal phi_A-homogeneous generators of I_A up to standard degree max_degree:
/// differences e^{beta_i} - e^{beta_last} per fiber, dropping those already in
/// the span of monomial multiples of earlier generators.
std::vector<GeneratorRecord> toric_generators(const ToricMatrix& a, std::size_t max_degree);

/// Default generator degree bound: 2 * (largest column sum).
std::size_t default_degree_bound(const ToricMatrix& a);

struct Edge {
    std::string u;
    std::string v;
};

/// Vertex-by-edge incidence matrix. Rows are the vertices sorted by label
/// (numerically when every label is an integer), columns the edges sorted by
/// their (smaller, larger) endpoint positions. Throws on an empty edge list,
/// a self-loop or a repeated edge.
ToricMatrix incidence_matrix(const std::vector<Edge>& edges);
/// Sorted vertex labels as used for the rows of incidence_matrix.
std::vector<std::string> incidence_vertex_order(const std::vector<Edge>& edges);

/// Incidence matrix with columns in the order given (vertices 0..vertex_count-1).
ToricMatrix incidence_matrix_ordered(std::size_t vertex_count,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace toricsym

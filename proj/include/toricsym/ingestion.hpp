#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "toricsym/toric.hpp"
#include "toricsym/toric_matrix.hpp"

namespace toricsym {

/// Input error with a 1-based line number (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// "m n" header, then m rows of n non-negative integers. Blank lines and
/// '#' comments are ignored.
ToricMatrix parse_matrix_file(const std::string& text);
std::string serialize_matrix(const ToricMatrix& a);

/// One "u v" edge per line, '#' starts a comment.
std::vector<Edge> parse_graph_file(const std::string& text);

enum class GraphFamily { Cycle, Complete, CompleteBipartite };

struct FamilySpec {
    GraphFamily family;
    std::vector<std::int64_t> params;
};

struct GraphSpec {
    std::variant<std::vector<Edge>, FamilySpec> source;
};

/// "cycle:4", "complete:5", "complete_bipartite:3,3".
FamilySpec parse_family(const std::string& descriptor);

/// cycle(n): vertices 1..n, edges {1,2},{2,3},...,{n-1,n},{1,n} in that order.
/// complete(n): lexicographic pairs {i,j}, i < j.
/// complete_bipartite(a,b): rows x_1..x_a then y_1..y_b, edge {x_i,y_j} at
/// column b(i-1)+j.
ToricMatrix build_family(const FamilySpec& spec);
ToricMatrix build_graph(const GraphSpec& spec);

std::string read_text_file(const std::string& path);

}  // namespace toricsym

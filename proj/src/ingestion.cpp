#include "toricsym/ingestion.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace toricsym {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenized_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(w);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

bool parse_int(const std::string& s, std::int64_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

ToricMatrix parse_matrix_file(const std::string& text) {
    const auto lines = tokenized_lines(text);
    if (lines.empty()) throw ParseError("malformed header: empty input", 0);
    const auto& header = lines.front();
    std::int64_t m = 0;
    std::int64_t n = 0;
    if (header.tokens.size() != 2 || !parse_int(header.tokens[0], m) || !parse_int(header.tokens[1], n) || m <= 0 ||
        n <= 0)
        throw ParseError("malformed header: expected \"m n\" with positive integers", header.number);
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw ParseError("wrong row count: expected " + std::to_string(m) + " rows, found " +
                             std::to_string(lines.size() - 1),
                         0);

    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (line.tokens.size() != static_cast<std::size_t>(n))
            throw ParseError("wrong row length: expected " + std::to_string(n) + " entries, found " +
                                 std::to_string(line.tokens.size()),
                             line.number);
        std::vector<std::int64_t> row;
        for (const auto& tok : line.tokens) {
            std::int64_t x = 0;
            if (!parse_int(tok, x)) throw ParseError("malformed entry \"" + tok + "\"", line.number);
            if (x < 0) throw ParseError("negative entry " + tok, line.number);
            row.push_back(x);
        }
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        bool zero = true;
        for (const auto& row : rows) zero = zero && row[j] == 0;
        if (zero) throw ParseError("zero column " + std::to_string(j + 1), 0);
    }
    return ToricMatrix(std::move(rows));
}

std::string serialize_matrix(const ToricMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
        out << '\n';
    }
    return out.str();
}

std::vector<Edge> parse_graph_file(const std::string& text) {
    std::vector<Edge> edges;
    for (const auto& line : tokenized_lines(text)) {
        if (line.tokens.size() != 2) throw ParseError("expected \"u v\" edge", line.number);
        edges.push_back({line.tokens[0], line.tokens[1]});
    }
    if (edges.empty()) throw ParseError("graph has no edges", 0);
    return edges;
}

FamilySpec parse_family(const std::string& descriptor) {
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw ParseError("family descriptor must be NAME:ARGS", 0);
    const std::string name = descriptor.substr(0, colon);
    FamilySpec spec;
    if (name == "cycle") spec.family = GraphFamily::Cycle;
    else if (name == "complete") spec.family = GraphFamily::Complete;
    else if (name == "complete_bipartite") spec.family = GraphFamily::CompleteBipartite;
    else throw ParseError("unknown graph family \"" + name + "\"", 0);

    std::istringstream args(descriptor.substr(colon + 1));
    for (std::string tok; std::getline(args, tok, ',');) {
        std::int64_t x = 0;
        if (!parse_int(tok, x)) throw ParseError("malformed family parameter \"" + tok + "\"", 0);
        spec.params.push_back(x);
    }
    const std::size_t arity = spec.family == GraphFamily::CompleteBipartite ? 2 : 1;
    if (spec.params.size() != arity)
        throw ParseError(name + " takes " + std::to_string(arity) + " parameter(s)", 0);
    return spec;
}

ToricMatrix build_family(const FamilySpec& spec) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    switch (spec.family) {
    case GraphFamily::Cycle: {
        if (spec.params.size() != 1 || spec.params[0] < 3) throw std::invalid_argument("cycle(n) needs n >= 3");
        const auto n = static_cast<std::size_t>(spec.params[0]);
        for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(0, n - 1);
        return incidence_matrix_ordered(n, edges);
    }
    case GraphFamily::Complete: {
        if (spec.params.size() != 1 || spec.params[0] < 2) throw std::invalid_argument("complete(n) needs n >= 2");
        const auto n = static_cast<std::size_t>(spec.params[0]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return incidence_matrix_ordered(n, edges);
    }
    case GraphFamily::CompleteBipartite: {
        if (spec.params.size() != 2 || spec.params[0] < 1 || spec.params[1] < 1)
            throw std::invalid_argument("complete_bipartite(a,b) needs a, b >= 1");
        const auto a = static_cast<std::size_t>(spec.params[0]);
        const auto b = static_cast<std::size_t>(spec.params[1]);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
        return incidence_matrix_ordered(a + b, edges);
    }
    }
    throw std::invalid_argument("build_family: unknown family");
}

ToricMatrix build_graph(const GraphSpec& spec) {
    if (const auto* edges = std::get_if<std::vector<Edge>>(&spec.source)) return incidence_matrix(*edges);
    return build_family(std::get<FamilySpec>(spec.source));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace toricsym

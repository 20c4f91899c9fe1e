#include "toricsym/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricsym/ingestion.hpp"
#include "toricsym/symbolic.hpp"

namespace toricsym {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string matrix_file;
    std::string graph_file;
    std::string family;
    std::string command;
    std::int64_t t = 2;
    std::int64_t degree = 0;  // 0 means default_degree_bound
    std::optional<std::int64_t> amax;
    std::string sigma;
    bool json = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

ToricMatrix load_matrix(const RunConfig& cfg) {
    const int sources = !cfg.matrix_file.empty() + !cfg.graph_file.empty() + !cfg.family.empty();
    if (sources != 1) throw UsageError("exactly one of --matrix, --graph, --family is required");
    if (!cfg.matrix_file.empty()) return parse_matrix_file(read_text_file(cfg.matrix_file));
    if (!cfg.graph_file.empty()) return incidence_matrix(parse_graph_file(read_text_file(cfg.graph_file)));
    return build_family(parse_family(cfg.family));
}

Multidegree parse_sigma(const std::string& text, std::size_t rows) {
    Multidegree sigma;
    std::istringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        try {
            std::size_t used = 0;
            const long long x = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            if (x < 0) throw UsageError("--sigma entries must be non-negative");
            sigma.push_back(x);
        } catch (const std::logic_error&) {
            throw UsageError("--sigma: malformed entry \"" + tok + "\"");
        }
    }
    if (sigma.size() != rows)
        throw UsageError("--sigma has " + std::to_string(sigma.size()) + " entries, matrix has " +
                         std::to_string(rows) + " rows");
    return sigma;
}

std::string sigma_string(const Multidegree& sigma) {
    std::string s = "(";
    for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
    return s + ")";
}

std::size_t degree_bound(const RunConfig& cfg, const ToricMatrix& a) {
    return cfg.degree > 0 ? static_cast<std::size_t>(cfg.degree) : default_degree_bound(a);
}

json record_json(const GeneratorRecord& r) {
    return {{"sigma", r.sigma}, {"degree", r.degree}, {"polynomial", to_string(r.polynomial)},
            {"terms", to_json(r.polynomial)["terms"]}};
}

int cmd_fiber(const RunConfig& cfg, const ToricMatrix& a, std::ostream& out) {
    if (cfg.sigma.empty()) throw UsageError("fiber requires --sigma");
    const Fiber fiber = enumerate_fiber(a, parse_sigma(cfg.sigma, a.rows()));
    if (cfg.json) {
        json monos = json::array();
        for (const auto& m : fiber.monomials) monos.push_back({{"e", m.entries()}, {"monomial", monomial_to_string(m)}});
        out << json{{"sigma", fiber.sigma}, {"size", fiber.size()}, {"monomials", monos}}.dump(2) << '\n';
    } else {
        out << "# fiber " << sigma_string(fiber.sigma) << " size " << fiber.size() << '\n';
        for (const auto& m : fiber.monomials) out << monomial_to_string(m) << '\n';
    }
    return kExitOk;
}

int cmd_ideal_gens(const RunConfig& cfg, const ToricMatrix& a, std::ostream& out) {
    const auto gens = toric_generators(a, degree_bound(cfg, a));
    if (cfg.json) {
        json arr = json::array();
        for (const auto& g : gens) arr.push_back(record_json(g));
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& g : gens)
            out << "sigma=" << sigma_string(g.sigma) << " degree=" << g.degree << " : " << to_string(g.polynomial)
                << '\n';
    }
    return kExitOk;
}

int cmd_symbolic(const RunConfig& cfg, const ToricMatrix& a, std::ostream& out, std::ostream& err) {
    const auto t = static_cast<std::size_t>(cfg.t);
    const std::size_t bound = degree_bound(cfg, a);
    if (cfg.json) err << "degree bound " << bound << '\n';
    else out << "# degree bound " << bound << '\n';

    const auto records = symbolic_generators(a, t, bound);
    const auto ideal_gens = polynomials_of(toric_generators(a, default_degree_bound(a)));
    bool exhausted = false;
    json arr = json::array();
    for (const auto& r : records) {
        json j = record_json(r);
        j["in_power"] = in_power(a, r.polynomial, ideal_gens, t);
        j["nz"] = nz_member(r.polynomial, a, t);
        j["witness"] = nullptr;
        if (cfg.amax) {
            const auto w = saturation_witness(a, r.polynomial, ideal_gens, t, static_cast<std::size_t>(*cfg.amax));
            if (w) j["witness"] = *w;
            else exhausted = true;
        }
        if (cfg.json) {
            arr.push_back(std::move(j));
        } else {
            out << "sigma=" << sigma_string(r.sigma) << " degree=" << r.degree
                << " in_power=" << (j["in_power"].get<bool>() ? "true" : "false")
                << " nz=" << (j["nz"].get<bool>() ? "true" : "false");
            if (cfg.amax) out << " witness=" << (j["witness"].is_null() ? "none" : j["witness"].dump());
            out << " : " << to_string(r.polynomial) << '\n';
        }
    }
    if (cfg.json) out << arr.dump(2) << '\n';
    if (exhausted) {
        err << "saturation witness not found within a_max = " << *cfg.amax << '\n';
        return kExitBoundExhausted;
    }
    return kExitOk;
}

int cmd_lattice(const RunConfig& cfg, const ToricMatrix& a, std::ostream& out) {
    const auto basis = lattice_kernel(a.to_integer_matrix());
    if (cfg.json) {
        json arr = json::array();
        for (const auto& u : basis) arr.push_back(to_lattice_vector(u));
        out << arr.dump() << '\n';
    } else {
        for (const auto& u : basis) {
            for (std::size_t i = 0; i < u.size(); ++i) out << (i ? " " : "") << u[i];
            out << '\n';
        }
    }
    return kExitOk;
}

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<Check> run_checks(const ToricMatrix& a, std::size_t t, std::size_t bound, std::size_t amax) {
    std::vector<Check> checks;

    const auto kernel = lattice_kernel(a.to_integer_matrix());
    const IntegerMatrix ai = a.to_integer_matrix();
    const bool kernel_ok = std::all_of(kernel.begin(), kernel.end(), [&](const IntegerVector& u) { return is_zero(ai * u); });
    checks.push_back({"lattice-kernel", kernel_ok, std::to_string(kernel.size()) + " vectors"});

    const auto gens = toric_generators(a, default_degree_bound(a));
    const auto ideal_gens = polynomials_of(gens);
    const bool gens_ok =
        std::all_of(ideal_gens.begin(), ideal_gens.end(), [&](const Polynomial& g) { return in_toric_ideal(g, a); });
    checks.push_back({"toric-generators", gens_ok, std::to_string(gens.size()) + " generators"});

    std::size_t fibers = 0;
    bool containment_ok = true;
    bool oracle_ok = true;
    for (std::size_t d = 1; d <= bound; ++d) {
        for (const auto& fiber : fibers_of_total_degree(a, d)) {
            ++fibers;
            for (std::size_t s = 1; s <= t; ++s) containment_ok = containment_ok && kernel_containment_holds(fiber, s);
            const auto comp = symbolic_component(fiber, t);
            const auto nz = kernel_basis(derivative_constraint_matrix(fiber, t));
            oracle_ok = oracle_ok && comp.coordinates.size() == nz.size() &&
                        spans_equal(comp.coordinates, nz, fiber.size());
        }
    }
    checks.push_back({"kernel-containment", containment_ok, std::to_string(fibers) + " fibers"});
    checks.push_back({"oracle-equivalence", oracle_ok, std::to_string(fibers) + " fibers"});

    const auto records = symbolic_generators(a, t, bound);
    const auto binomials = lattice_binomials(a);
    std::size_t witnessed = 0;
    std::size_t nz_true = 0;
    for (const auto& r : records) {
        if (nz_member(r.polynomial, a, t)) ++nz_true;
        const auto w1 = saturation_witness(a, r.polynomial, ideal_gens, t, amax);
        const auto w2 = saturation_witness(a, r.polynomial, binomials, t, amax);
        if (w1 && w2 && verify_saturation_witness(a, r.polynomial, ideal_gens, t, *w1) &&
            verify_saturation_witness(a, r.polynomial, binomials, t, *w2))
            ++witnessed;
    }
    const std::string of = " of " + std::to_string(records.size());
    checks.push_back({"nz-oracle", nz_true == records.size(), std::to_string(nz_true) + of + " generators"});
    checks.push_back(
        {"saturation-witness", witnessed == records.size(), std::to_string(witnessed) + of + " generators"});
    return checks;
}

int cmd_verify(const RunConfig& cfg, const ToricMatrix& a, std::ostream& out) {
    const std::size_t amax = cfg.amax ? static_cast<std::size_t>(*cfg.amax) : 4;
    const auto checks = run_checks(a, static_cast<std::size_t>(cfg.t), degree_bound(cfg, a), amax);
    const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    if (cfg.json) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out << json{{"passed", all}, {"checks", arr}}.dump(2) << '\n';
    } else {
        for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
        out << (all ? "all checks passed" : "verification failed") << '\n';
    }
    return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic powers of toric ideals", "toricsym"};
    RunConfig cfg;
    auto* matrix = app.add_option("--matrix", cfg.matrix_file, "Matrix file (\"m n\" header, then rows)");
    auto* graph = app.add_option("--graph", cfg.graph_file, "Edge list file, one \"u v\" per line");
    auto* family = app.add_option("--family", cfg.family, "cycle:N | complete:N | complete_bipartite:A,B");
    matrix->excludes(graph, family);
    graph->excludes(family);
    app.add_option("--t", cfg.t, "Symbolic power order t >= 1");
    app.add_option("--degree", cfg.degree, "Degree bound D >= 1 (default 2 * max column sum)");
    app.add_option("--amax", cfg.amax, "Saturation exponent bound a_max >= 0");
    app.add_option("--sigma", cfg.sigma, "Multidegree as comma-separated integers");
    app.add_flag("--json", cfg.json, "JSON output");
    app.require_subcommand(1);
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"fiber", "List the monomials of the fiber of --sigma"},
             {"ideal-gens", "Generators of the toric ideal up to the degree bound"},
             {"symbolic", "Generators of the t-th symbolic power up to the degree bound"},
             {"lattice", "Integer kernel basis of the matrix"},
             {"verify", "Run the invariant checks on the instance"}}) {
        app.add_subcommand(name, help)->fallthrough()->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cfg.t < 1) throw UsageError("--t must be >= 1");
        if (cfg.degree < 0 || (app.count("--degree") && cfg.degree < 1)) throw UsageError("--degree must be >= 1");
        if (cfg.amax && *cfg.amax < 0) throw UsageError("--amax must be >= 0");
        const ToricMatrix a = load_matrix(cfg);
        if (cfg.command == "fiber") return cmd_fiber(cfg, a, out);
        if (cfg.command == "ideal-gens") return cmd_ideal_gens(cfg, a, out);
        if (cfg.command == "symbolic") return cmd_symbolic(cfg, a, out, err);
        if (cfg.command == "lattice") return cmd_lattice(cfg, a, out);
        return cmd_verify(cfg, a, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace toricsym

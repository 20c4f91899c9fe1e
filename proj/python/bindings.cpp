#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toricsym/cli.hpp"
#include "toricsym/ingestion.hpp"
#include "toricsym/symbolic.hpp"

namespace py = pybind11;
using namespace toricsym;

namespace {

using PyMatrix = std::vector<std::vector<std::int64_t>>;

py::int_ to_py(const Integer& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list to_py(const IntegerVector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const std::vector<IntegerVector>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(to_py(v));
    return out;
}

py::list to_py(const IntegerMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(to_py(m.row(i)));
    return out;
}

IntegerMatrix from_py(const std::vector<std::vector<py::int_>>& rows) {
    std::vector<IntegerVector> out;
    for (const auto& row : rows) {
        IntegerVector v;
        for (const auto& x : row) v.emplace_back(py::str(py::handle(x)).cast<std::string>());
        out.push_back(std::move(v));
    }
    return IntegerMatrix::from_rows(out);
}

PyMatrix to_rows(const ToricMatrix& a) { return a.row_data(); }

Polynomial polynomial_from_terms(std::size_t n, const std::vector<std::pair<std::vector<std::int64_t>, py::object>>& terms) {
    Polynomial p(n);
    for (const auto& [e, c] : terms) {
        if (e.size() != n) throw std::invalid_argument("exponent length does not match n");
        p.add_term(ExponentVector(e), parse_rational(py::str(py::handle(c)).cast<std::string>()));
    }
    return p;
}

py::list terms_of(const Polynomial& p) {
    py::list out;
    for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(py::cast(e.entries()), to_string(c)));
    return out;
}

py::list records_to_py(const std::vector<GeneratorRecord>& records) {
    py::list out;
    for (const auto& r : records) {
        py::dict d;
        d["sigma"] = r.sigma;
        d["degree"] = r.degree;
        d["polynomial"] = r.polynomial;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact symbolic powers of toric ideals";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&polynomial_from_terms), py::arg("n"), py::arg("terms"),
             "Build from [(exponents, coefficient)] pairs; coefficients may be ints or \"p/q\" strings.")
        .def_property_readonly("n", &Polynomial::ambient)
        .def("terms", &terms_of)
        .def("is_zero", &Polynomial::is_zero)
        .def("derivative", [](const Polynomial& p, std::size_t j) { return partial_derivative(p, j); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const Polynomial& p, unsigned k) { return p.pow(k); })
        .def("__str__", [](const Polynomial& p) { return to_string(p); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + to_string(p) + ")"; });

    m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix_file(text)); });
    m.def("family", [](const std::string& d) { return to_rows(build_family(parse_family(d))); },
          "Incidence matrix of cycle:N, complete:N or complete_bipartite:A,B.");
    m.def("default_degree_bound", [](const PyMatrix& a) { return default_degree_bound(ToricMatrix(a)); });

    m.def("enumerate_fiber", [](const PyMatrix& a, const Multidegree& sigma) {
        std::vector<std::vector<std::int64_t>> out;
        for (const auto& e : enumerate_fiber(ToricMatrix(a), sigma).monomials) out.push_back(e.entries());
        return out;
    });
    m.def("moment_matrix", [](const PyMatrix& a, const Multidegree& sigma, std::size_t order) {
        return to_py(moment_matrix(enumerate_fiber(ToricMatrix(a), sigma), order).matrix);
    });
    m.def("kernel_basis", [](const std::vector<std::vector<py::int_>>& rows) { return to_py(kernel_basis(from_py(rows))); });
    m.def("lattice_kernel", [](const PyMatrix& a) { return to_py(lattice_kernel(ToricMatrix(a).to_integer_matrix())); });
    m.def("lattice_binomials", [](const PyMatrix& a) { return lattice_binomials(ToricMatrix(a)); });

    m.def("toric_generators", [](const PyMatrix& a, std::optional<std::size_t> max_degree) {
        const ToricMatrix ta(a);
        return records_to_py(toric_generators(ta, max_degree.value_or(default_degree_bound(ta))));
    }, py::arg("a"), py::arg("max_degree") = py::none());
    m.def("symbolic_generators", [](const PyMatrix& a, std::size_t t, std::size_t max_degree) {
        return records_to_py(symbolic_generators(ToricMatrix(a), t, max_degree));
    }, py::arg("a"), py::arg("t"), py::arg("max_degree"));
    m.def("symbolic_component", [](const PyMatrix& a, const Multidegree& sigma, std::size_t t) {
        return symbolic_component(ToricMatrix(a), sigma, t).basis;
    }, py::arg("a"), py::arg("sigma"), py::arg("t"));

    m.def("in_toric_ideal", [](const Polynomial& f, const PyMatrix& a) { return in_toric_ideal(f, ToricMatrix(a)); });
    m.def("in_power", [](const PyMatrix& a, const Polynomial& f, const std::vector<Polynomial>& gens, std::size_t t) {
        return in_power(ToricMatrix(a), f, gens, t);
    });
    m.def("nz_member", [](const Polynomial& f, const PyMatrix& a, std::size_t t) { return nz_member(f, ToricMatrix(a), t); });
    m.def("saturation_witness",
          [](const PyMatrix& a, const Polynomial& f, const std::vector<Polynomial>& gens, std::size_t t,
             std::size_t a_max) { return saturation_witness(ToricMatrix(a), f, gens, t, a_max); },
          py::arg("a"), py::arg("f"), py::arg("generators"), py::arg("t"), py::arg("a_max"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run the command-line front end; returns (exit_code, stdout, stderr).");
}

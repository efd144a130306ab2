#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qehrhart/algebra.hpp"
#include "qehrhart/corpus.hpp"
#include "qehrhart/ehrhart.hpp"
#include "qehrhart/errors.hpp"
#include "qehrhart/poset.hpp"
#include "qehrhart/render.hpp"
#include "qehrhart/triangulation.hpp"
#include "qehrhart/verify.hpp"

namespace py = pybind11;

namespace {

struct PyPolytope {
    qe::LatticePolytope polytope;
    qe::LinearForm lambda;
};

py::dict series_dict(const qe::SeriesTQ& s) {
    py::list numerator;
    for (const auto& c : s.numerator()) numerator.append(qe::render(c));
    py::dict out;
    out["numerator"] = numerator;
    out["numerator_text"] = qe::render_series_numerator(s);
    out["denominator_exponents"] = s.denominator_exponents();
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-analogue Ehrhart computations for lattice polytopes and posets";

    py::register_exception<qe::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<qe::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<qe::PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "q_integer", [](int n) { return qe::render(qe::q_integer(n)); },
        "The q-integer [n]_q as a canonical string", py::arg("n"));
    m.def(
        "gaussian_binomial",
        [](int n, int k) { return qe::render(qe::gaussian_binomial(n, k)); },
        py::arg("n"), py::arg("k"));
    m.def(
        "cyclotomic", [](int n) { return qe::render(qe::cyclotomic(n)); }, py::arg("n"));
    m.def(
        "carlitz_bernoulli",
        [](int n) {
            qe::QRat beta = qe::carlitz_bernoulli(n);
            return py::make_tuple(qe::render(beta), beta.eval(1).get_str());
        },
        "Carlitz q-Bernoulli number and its value at q = 1", py::arg("n"));

    py::class_<PyPolytope>(m, "Polytope")
        .def(py::init([](int dim, const std::vector<qe::Point>& vertices,
                         const std::vector<qe::Coord>& lambda) {
                 if (static_cast<int>(lambda.size()) != dim)
                     throw qe::ParseError("lambda must have one coefficient per dimension");
                 return PyPolytope{qe::LatticePolytope::from_points(dim, vertices),
                                   qe::LinearForm{lambda}};
             }),
             py::arg("dim"), py::arg("vertices"), py::arg("lambda_"))
        .def_property_readonly("dim", [](const PyPolytope& p) { return p.polytope.ambient_dim(); })
        .def_property_readonly("affine_dim",
                               [](const PyPolytope& p) { return p.polytope.affine_dim(); })
        .def_property_readonly("vertices", [](const PyPolytope& p) { return p.polytope.vertices(); })
        .def("validate",
             [](const PyPolytope& p) {
                 std::vector<std::string> out;
                 for (const auto& v : qe::validate_pair(p.polytope, p.lambda)) out.push_back(v.message);
                 return out;
             })
        .def("is_empty", [](const PyPolytope& p) { return qe::is_empty(p.polytope); })
        .def(
            "points",
            [](const PyPolytope& p, int n, bool interior) {
                return qe::lattice_points(p.polytope, n,
                                          interior ? qe::Region::Interior : qe::Region::Closed);
            },
            py::arg("n"), py::arg("interior") = false)
        .def(
            "weighted_sum",
            [](const PyPolytope& p, int n) {
                return qe::render(qe::dilate_weighted_sum(p.polytope, p.lambda, n));
            },
            py::arg("n"))
        .def("polynomial",
             [](const PyPolytope& p) { return qe::render(qe::qehrhart_polynomial(p.polytope, p.lambda)); })
        .def("series", [](const PyPolytope& p) { return series_dict(qe::qehrhart_series(p.polytope, p.lambda)); })
        .def("series_via_triangulation",
             [](const PyPolytope& p) { return series_dict(qe::series_via_triangulation(p.polytope, p.lambda)); })
        .def("special_value",
             [](const PyPolytope& p) { return qe::render(qe::special_value(p.polytope, p.lambda)); })
        .def("__repr__", [](const PyPolytope& p) {
            std::ostringstream out;
            out << "Polytope(dim=" << p.polytope.ambient_dim() << ", vertices="
                << p.polytope.vertices().size() << ")";
            return out.str();
        });

    py::class_<qe::Poset>(m, "Poset")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& covers) {
                 return qe::Poset::from_covers(n, covers);
             }),
             py::arg("size"), py::arg("covers"))
        .def_static("chain", &qe::Poset::chain, py::arg("n"))
        .def_static("antichain", &qe::Poset::antichain, py::arg("n"))
        .def_static("chain_product", &qe::Poset::chain_product, py::arg("m"), py::arg("n"))
        .def_property_readonly("size", &qe::Poset::size)
        .def("leq", &qe::Poset::leq, py::arg("i"), py::arg("j"))
        .def("covers", &qe::Poset::covers)
        .def("longest_chain", [](const qe::Poset& p) { return qe::longest_chain(p); })
        .def("linear_extensions", &qe::Poset::linear_extensions)
        .def("polynomial", [](const qe::Poset& p) { return qe::render(qe::poset_polynomial(p)); })
        .def("series", [](const qe::Poset& p) { return series_dict(qe::descent_numerator(p)); })
        .def("volume", [](const qe::Poset& p) { return qe::render(qe::q_volume(p)); })
        .def("special_value",
             [](const qe::Poset& p) { return qe::render(qe::special_value_of(qe::poset_polynomial(p))); })
        .def("infinity",
             [](const qe::Poset& p) { return qe::render(qe::value_at_infinity(qe::poset_polynomial(p))); })
        .def("order_polytope",
             [](const qe::Poset& p) {
                 auto [q, lambda] = qe::order_polytope(p);
                 return PyPolytope{std::move(q), std::move(lambda)};
             })
        .def("__repr__", [](const qe::Poset& p) {
            std::ostringstream out;
            out << "Poset(size=" << p.size() << ")";
            return out.str();
        });

    m.def(
        "macmahon_polynomial",
        [](int m_, int n) { return qe::render(qe::macmahon_polynomial(m_, n)); }, py::arg("m"),
        py::arg("n"));

    m.def(
        "verify",
        [](const std::string& scope, unsigned seed, int count) {
            qe::verify::Options options;
            options.scope = qe::verify::scope_from_string(scope);
            options.seed = seed;
            options.random_count = count;
            std::ostringstream report;
            bool ok = qe::verify::run(options, report);
            return py::make_tuple(ok, report.str());
        },
        "Run the identity suites; returns (passed, report)", py::arg("scope") = "all",
        py::arg("seed") = 7, py::arg("count") = 20);
}

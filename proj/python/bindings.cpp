#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "starrees/errors.hpp"
#include "starrees/rees_height2.hpp"
#include "starrees/star_config.hpp"
#include "starrees/suites.hpp"
#include "starrees/taylor.hpp"

namespace py = pybind11;
using namespace starrees;

namespace {

using Entry = std::variant<long, std::string>;

StarConfig make_config(const std::vector<std::vector<Entry>>& U, int c, const std::string& field) {
    Field f = Field::parse(field);
    if (U.empty()) fail(ErrorKind::Shape, "U needs at least one row");
    ScalarMatrix m(static_cast<int>(U.size()), static_cast<int>(U[0].size()), f);
    for (std::size_t i = 0; i < U.size(); ++i) {
        if (U[i].size() != U[0].size()) fail(ErrorKind::Shape, "rows of U differ in length");
        for (std::size_t j = 0; j < U[i].size(); ++j)
            m.at(int(i), int(j)) = std::holds_alternative<long>(U[i][j])
                                       ? Scalar::from_int(f, std::get<long>(U[i][j]))
                                       : Scalar::parse(std::get<std::string>(U[i][j]), f);
    }
    return StarConfig(std::move(m), c);
}

std::vector<std::string> texts(const std::vector<Poly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

std::vector<std::vector<std::string>> texts(const PolyMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j).to_string());
    return out;
}

} // namespace

PYBIND11_MODULE(_starrees, m) {
    m.doc() = "Star configurations of linear forms and the equations of their Rees algebras";

    // The message starts with the error kind, e.g. "unsupported-height: ...".
    static py::handle error = py::exception<Error>(m, "StarreesError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<StarConfig>(m, "StarConfig")
        .def(py::init(&make_config), py::arg("U"), py::arg("c") = 2, py::arg("field") = "Q")
        .def_property_readonly("n", &StarConfig::n)
        .def_property_readonly("r", &StarConfig::r)
        .def_property_readonly("t", &StarConfig::t)
        .def_property_readonly("c", &StarConfig::c)
        .def_property_readonly("field", [](const StarConfig& s) { return s.field().to_string(); })
        .def("form", &StarConfig::form_text, py::arg("k"))
        .def("generators", [](const StarConfig& s) { return texts(star_generators(s)); })
        .def("star_condition", &verify_star_condition)
        .def("linear_type", &linear_type_check)
        .def("G", [](const StarConfig& s, int k) {
            GsResult g = check_Gs(s, k);
            return py::make_tuple(g.holds, g.witness);
        }, py::arg("s"))
        .def("nlt_minimal_primes", &nlt_minimal_primes)
        .def("linear_relations", [](const StarConfig& s) { return texts(linear_relations(s, s.rees_ring())); })
        .def("jacobian_dual", [](const StarConfig& s) { return texts(jacobian_dual(s, fiber_ring(s))); })
        .def("all_minors", [](const StarConfig& s) { return texts(all_max_minors(jacobian_dual(s, fiber_ring(s)))); })
        .def("minors", [](const StarConfig& s) {
            std::vector<std::pair<std::vector<int>, std::string>> out;
            for (const auto& g : minors_ideal_generators(s, fiber_ring(s))) out.emplace_back(g.theta, g.m.to_string());
            return out;
        })
        .def("ideal_P", [](const StarConfig& s) { return texts(ideal_P(s, fiber_ring(s))); })
        .def("rees_equations", [](const StarConfig& s) {
            auto eq = rees_defining_ideal(s, s.rees_ring());
            return py::make_tuple(texts(eq.linear), texts(eq.fiber));
        })
        .def("dependency", [](const StarConfig& s, const std::vector<int>& theta) -> py::object {
            auto d = h_theta_dependency(s, fiber_ring(s), theta);
            if (!d) return py::none();
            return py::str(d->to_string(s));
        }, py::arg("theta"))
        .def("primary_decomposition", [](const StarConfig& s) {
            PrimaryReport rep = primary_decomposition_check(s);
            py::dict out;
            out["hypothesis"] = rep.hypothesis;
            out["confirmed"] = rep.confirmed;
            out["lambda"] = rep.lq.lambda;
            out["Q"] = texts(rep.lq.q_polys(fiber_ring(s)));
            out["P"] = texts(rep.P);
            out["note"] = rep.note;
            return out;
        });

    m.def("power_generators", &power_generators, py::arg("t"), py::arg("c"), py::arg("m") = 1);
    m.def("taylor_equations", [](int t, int c, int mm, unsigned power, const std::string& field) {
        TaylorRing tr(t, c, mm, Realization::power(t, power), Field::parse(field));
        auto eq = regular_case_equations(tr);
        return py::make_tuple(texts(eq.linear), texts(eq.quadrics));
    }, py::arg("t"), py::arg("c"), py::arg("m") = 1, py::arg("power") = 1, py::arg("field") = "Q");

    m.def("suites", [] {
        std::vector<std::string> out;
        for (const auto& s : suite_catalog()) out.push_back(s.name);
        return out;
    });
    m.def("run_suite", [](const std::string& name, const std::string& field, std::uint32_t seed) {
        SuiteReport rep;
        {
            py::gil_scoped_release release;
            rep = run_suite(name, {field, seed});
        }
        py::dict out;
        out["name"] = rep.name;
        out["field"] = rep.field;
        out["passed"] = rep.passed();
        out["instances"] = rep.instances;
        out["checks"] = rep.checks;
        out["failures"] = rep.failures;
        out["notes"] = rep.notes;
        return out;
    }, py::arg("name"), py::arg("field") = "", py::arg("seed") = 101);
}

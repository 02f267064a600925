#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgca/algebra.hpp"
#include "pgca/campaign.hpp"
#include "pgca/enveloping.hpp"
#include "pgca/error.hpp"
#include "pgca/serialize.hpp"
#include "pgca/twist.hpp"
#include "pgca/whittaker.hpp"

namespace py = pybind11;
using namespace pgca;

// JSON crosses the boundary as text; the Python package decodes it.
PYBIND11_MODULE(_pgca, m) {
  m.doc() = "Exact computations in the centrally extended planar Galilean conformal algebra";

  static py::exception<Error> error(m, "PgcaError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    } catch (const Json::exception& e) {
      py::set_error(error, (std::string("ConfigError: ") + e.what()).c_str());
    }
  });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init<long>())
      .def_static("parse", &Scalar::parse)
      .def_static("rational", &Scalar::rational)
      .def("inverse", &Scalar::inverse)
      .def("pow", &Scalar::pow)
      .def("is_zero", &Scalar::is_zero)
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__hash__", [](const Scalar& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& a) { return "Scalar('" + a.to_string() + "')"; });

  m.def("commands", &campaign_commands);

  m.def(
      "run_campaign",
      [](const std::string& command, const std::string& config, std::optional<std::uint64_t> seed) {
        CampaignResult r;
        {
          py::gil_scoped_release release;
          r = run_campaign(command, Json::parse(config), seed);
        }
        return py::make_tuple(r.passed, r.report.dump(), r.lines);
      },
      py::arg("command"), py::arg("config") = "{}", py::arg("seed") = py::none());

  m.def("bracket", [](const std::string& a, const std::string& b) {
    return to_string(bracket(parse_element(a), parse_element(b)));
  });

  m.def("straighten", [](const std::string& word) { return to_json(straighten(parse_monomial(word))).dump(); });

  m.def("whittaker_act", [](const std::string& datum, const std::string& generator, const std::string& vector) {
    const auto psi = datum_from_json(Json::parse(datum));
    return to_json(whittaker_act(psi, Generator::parse(generator), enveloping_from_json(Json::parse(vector)))).dump();
  });

  m.def("singular_vector_search", [](const std::string& datum, std::int64_t weight_bound) {
    const auto psi = datum_from_json(Json::parse(datum));
    py::gil_scoped_release release;
    return to_json(singular_vector_search(psi, weight_bound)).dump();
  });

  m.def("solve_twist", [](const std::string& datum) {
    return to_json(solve_twist(datum_from_json(Json::parse(datum)))).dump();
  });

  m.def("psi14_witness", [](const std::string& alpha, const std::string& beta) {
    const auto w = example_psi14_witness(Scalar::parse(alpha), Scalar::parse(beta));
    return Json{{"determinant", to_json(w.matrix.determinant())},
                {"kernel_dimension", w.kernel.size()},
                {"coefficients", to_json(w.coefficients)},
                {"witness", to_json(w.witness)},
                {"verified", w.verified}}
        .dump();
  });
}

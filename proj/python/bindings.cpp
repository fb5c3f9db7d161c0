#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmforge/expr.hpp"
#include "qmforge/report.hpp"
#include "qmforge/verify.hpp"

namespace py = pybind11;
using namespace qmf;

namespace {

Rational rational_from(const py::object& o) {
  return Rational(py::str(o).cast<std::string>());
}

Sum coerce(const py::object& o, int rank) {
  if (py::isinstance<py::str>(o)) return parse_sum(o.cast<std::string>(), rank);
  return o.cast<Sum>();
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "counting quasimorphisms on free groups";

  static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
  static py::exception<ContractError> contract_exc(m, "ContractError", PyExc_ValueError);
  static py::exception<VerificationError> verify_exc(m, "VerificationError",
                                                     PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_exc(e.what());
    } catch (const ContractError& e) {
      contract_exc(e.what());
    } catch (const VerificationError& e) {
      verify_exc(e.what());
    }
  });

  py::class_<Sum>(m, "Sum")
      .def(py::init([](const std::string& text, int rank) { return parse_sum(text, rank); }),
           py::arg("text"), py::arg("rank") = 2)
      .def_property_readonly("rank", &Sum::rank)
      .def_property_readonly("counting", [](const Sum& f) { return f.mode() == Mode::COUNTING; })
      .def("terms",
           [](const Sum& f) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [w, c] : f.terms()) out.emplace_back(to_string(w), to_string(c));
             return out;
           })
      .def("is_zero", &Sum::is_zero)
      .def("__len__", &Sum::size)
      .def("__str__", [](const Sum& f) { return format_sum(f); })
      .def("__repr__", [](const Sum& f) { return "Sum('" + format_sum(f) + "')"; })
      .def("__eq__", [](const Sum& f, const Sum& g) { return f == g; })
      .def("__add__", [](const Sum& f, const Sum& g) { return f + g; })
      .def("__sub__", [](const Sum& f, const Sum& g) { return f - g; })
      .def("__neg__", [](const Sum& f) { return -f; })
      .def("__mul__", [](const Sum& f, const py::object& c) { return rational_from(c) * f; })
      .def("__rmul__", [](const Sum& f, const py::object& c) { return rational_from(c) * f; });

  m.def("parse", [](const std::string& text, int rank) { return parse_sum(text, rank); },
        py::arg("text"), py::arg("rank") = 2);
  m.def("reduce_word", [](const std::string& w, int rank) { return to_string(parse_word(w, rank)); },
        py::arg("word"), py::arg("rank") = 2);
  m.def("ball_size", &ball_size, py::arg("rank"), py::arg("radius"));
  m.def("evaluate",
        [](const py::object& f, const std::string& w, int rank) {
          Sum s = coerce(f, rank);
          return to_string(evaluate(s, parse_word(w, s.rank())));
        },
        py::arg("f"), py::arg("word"), py::arg("rank") = 2);
  m.def("norm", [](const py::object& f, int rank) { return norm(coerce(f, rank)); },
        py::arg("f"), py::arg("rank") = 2);
  m.def("reduced_length",
        [](const py::object& f, int rank) { return dump(to_json(certified_reduced_length(coerce(f, rank)))); },
        py::arg("f"), py::arg("rank") = 2);
  m.def("normal_form",
        [](const py::object& f, int rank) {
          Sum s = coerce(f, rank);
          Rewrite r = normal_form(s);
          return py::make_tuple(r.sum, trace_sound(s, r.sum, r.trace));
        },
        py::arg("f"), py::arg("rank") = 2);
  m.def("is_normal_form",
        [](const py::object& f, int rank) { return dump(to_json(is_normal_form(coerce(f, rank)))); },
        py::arg("f"), py::arg("rank") = 2);
  m.def("act",
        [](const std::string& x, const py::object& f, int rank) {
          return act(NielsenWord::parse(x), coerce(f, rank));
        },
        py::arg("x"), py::arg("f"), py::arg("rank") = 2);
  m.def("nrep",
        [](const py::object& f, int n, int rank) { return n_representative_sum(coerce(f, rank), n); },
        py::arg("f"), py::arg("n"), py::arg("rank") = 2);
  m.def("rot", &rot, py::arg("rank") = 2);
  m.def("speed",
        [](const py::object& f, int rank) { return dump(to_json(speed(coerce(f, rank)))); },
        py::arg("f"), py::arg("rank") = 2);
  m.def("exclude_fixpoint",
        [](const py::object& f, int rank) {
          Sum s = coerce(f, rank);
          ExclusionWitness w = exclude_fixpoint(s);
          json j = to_json(w);
          j["verified"] = verify_witness(s, w);
          return dump(j);
        },
        py::arg("f"), py::arg("rank") = 2);
  m.def("sup_on_ball",
        [](const py::object& f, int L, int rank) { return dump(to_json(oracle::sup_on_ball(coerce(f, rank), L))); },
        py::arg("f"), py::arg("radius"), py::arg("rank") = 2);
  m.def("empirical_equiv",
        [](const py::object& f, const py::object& g, std::optional<std::vector<int>> radii, int rank) {
          Sum a = coerce(f, rank), b = coerce(g, rank);
          return dump(to_json(radii ? oracle::empirical_equiv(a, b, *radii)
                                    : oracle::empirical_equiv(a, b)));
        },
        py::arg("f"), py::arg("g"), py::arg("radii") = py::none(), py::arg("rank") = 2);
  m.def("verify",
        [](const std::string& suite, int rank, std::optional<int> radius) {
          return dump(to_json(run_suite(suite, rank, radius)));
        },
        py::arg("suite"), py::arg("rank") = 2, py::arg("radius") = py::none());
  m.def("suite_names", &suite_names);
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "braidfgl/braid/garside.hpp"
#include "braidfgl/braid/io.hpp"
#include "braidfgl/braid/markov.hpp"
#include "braidfgl/cli/cli.hpp"
#include "braidfgl/error.hpp"
#include "braidfgl/fgl/io.hpp"
#include "braidfgl/fgl/lazard.hpp"
#include "braidfgl/kz/holonomy.hpp"
#include "braidfgl/kz/io.hpp"
#include "braidfgl/kz/relations.hpp"

namespace py = pybind11;
using namespace braidfgl;

namespace {

// Structured results cross the boundary as plain Python objects.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

kz::InfinitesimalSystem system_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return kz::system_from_json(nlohmann::json::parse(o.cast<std::string>()));
  return kz::system_from_json(from_python(o));
}

fgl::Bud bud_arg(const std::string& law, int degree) { return fgl::Bud::make(fgl::parse_polynomial(law), degree); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Braid groups, KZ holonomy and formal group laws";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<LimitError>(m, "LimitError", PyExc_OverflowError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<braid::BraidWord>(m, "BraidWord")
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters") = std::vector<int>{})
      .def_static("parse", [](const std::string& text, std::optional<int> n) { return braid::parse_text(text, n); },
                  py::arg("text"), py::arg("strands") = py::none())
      .def_property_readonly("strands", &braid::BraidWord::strands)
      .def_property_readonly("letters", [](const braid::BraidWord& w) {
        return std::vector<int>(w.letters().begin(), w.letters().end());
      })
      .def("inverse", &braid::BraidWord::inverse)
      .def("exponent_sum", &braid::BraidWord::exponent_sum)
      .def("__len__", &braid::BraidWord::length)
      .def("__mul__", [](const braid::BraidWord& a, const braid::BraidWord& b) { return a * b; })
      .def("__eq__", [](const braid::BraidWord& a, const braid::BraidWord& b) { return a == b; })
      .def("__str__", &braid::format_text)
      .def("__repr__", [](const braid::BraidWord& w) { return "BraidWord(" + braid::to_json(w).dump() + ")"; });

  m.def("free_reduce", &braid::free_reduce);
  m.def("permutation_of", [](const braid::BraidWord& w) {
    auto p = braid::permutation_of(w);
    return std::vector<int>(p.images().begin(), p.images().end());
  });
  m.def("is_pure", &braid::is_pure);
  m.def("words_equal", &braid::words_equal);
  m.def("left_normal_form", [](const braid::BraidWord& w) { return to_python(braid::to_json(braid::left_normal_form(w))); });
  m.def("closure_summary", [](const braid::BraidWord& w) { return to_python(braid::to_json(braid::closure_summary(w))); });
  m.def("conjugate", [](const braid::BraidWord& w, const braid::BraidWord& by) {
    return braid::markov_move(w, braid::Conjugate{by});
  });
  m.def("stabilize", [](const braid::BraidWord& w, int sign) { return braid::markov_move(w, braid::Stabilize{sign}); },
        py::arg("word"), py::arg("sign") = 1);
  m.def("destabilize", [](const braid::BraidWord& w) { return braid::markov_move(w, braid::Destabilize{}); });

  m.def("transposition_system", [](int n, std::size_t d) { return to_python(kz::to_json(kz::transposition_system(n, d))); });
  m.def("scalar_system", [](int n, const std::string& lambda) {
    std::map<kz::PairIndex, Rational> values;
    for (auto p : kz::all_pairs(n)) values.emplace(p, parse_rational(lambda));
    return to_python(kz::to_json(kz::scalar_system(n, values)));
  });
  m.def("check_relations", [](const py::object& sys, unsigned threads) {
    return to_python(kz::to_json(kz::check_infinitesimal_relations(system_arg(sys), threads)));
  }, py::arg("system"), py::arg("threads") = 1);
  m.def("curvature_is_zero", [](const py::object& sys) { return kz::curvature_is_zero(system_arg(sys)).flat; });
  m.def("holonomy", [](const py::object& sys, const std::string& loop, std::size_t steps, bool allow_nonflat) {
    auto s = system_arg(sys);
    auto r = kz::holonomy(s, kz::parse_loop_spec(loop, s.points()), steps, {allow_nonflat, 1e-6});
    return py::make_tuple(Eigen::MatrixXcd(r.matrix), r.error_estimate);
  }, py::arg("system"), py::arg("loop"), py::arg("steps") = 1024, py::arg("allow_nonflat") = false);

  m.def("sym_cocycle", [](int n) { return fgl::to_string(fgl::sym_cocycle(n)); });
  m.def("cocycle_divisor", [](int n) { return py::int_(py::str(fgl::cocycle_divisor(n).get_str())); });
  m.def("bud_defects", [](const std::string& law, int m) {
    auto d = fgl::bud_defects(fgl::parse_polynomial(law), m);
    return py::make_tuple(fgl::to_string(d.associativity), fgl::to_string(d.commutativity), fgl::to_string(d.unit));
  });
  m.def("universal_bud", [](int q) { return to_python(fgl::to_json(fgl::universal_bud(q))); });
  m.def("universal_law", [](int q) { return fgl::to_string(fgl::universal_bud(q).law.law); });
  m.def("log_of_bud", [](const std::string& law, int m) { return fgl::to_string(fgl::log_of_bud(bud_arg(law, m)).series); });
  m.def("fgl_from_log", [](const std::string& phi, int m) {
    return fgl::to_string(fgl::fgl_from_log(fgl::LogSeries{m, fgl::parse_polynomial(phi).truncated(m)}).law);
  });
  m.def("mishchenko_classes", [](int q) {
    std::vector<std::string> out;
    for (const auto& c : fgl::mishchenko_classes(fgl::universal_bud(q)).classes) out.push_back(fgl::to_string(c));
    return out;
  });
  m.def("quillen_c1_tensor", [](const std::string& law, int m, const std::string& a, const std::string& b) {
    return fgl::to_string(fgl::quillen_c1_tensor(bud_arg(law, m), fgl::parse_polynomial(a), fgl::parse_polynomial(b)));
  });
  m.def("specialize", [](const std::string& law, int m, const std::string& assignment) {
    return fgl::to_string(fgl::specialize(bud_arg(law, m), fgl::parse_assignment(assignment)).law);
  });

  m.def("run", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    auto r = cli::run(args, in);
    return py::make_tuple(r.exit_code, r.out, r.err);
  }, py::arg("args"), py::arg("stdin") = "");
}

#include "hfa/document.hpp"
#include "hfa/error.hpp"
#include "hfa/expr.hpp"
#include "hfa/hfe.hpp"
#include "hfa/laws.hpp"
#include "hfa/ranking.hpp"
#include "hfa/relations.hpp"
#include "hfa/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hfa;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_py(Degree d) { return fraction_type()(d.numerator(), d.denominator()); }

py::object to_py(const Rational& r) { return fraction_type()(to_fraction_string(r)); }

// str ("0.45", "1/3"), int 0/1 or Fraction. Floats are refused: they are not
// exact.
Degree to_degree(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return parse_degree_exact(value.cast<std::string>());
  if (py::isinstance<py::float_>(value))
    throw py::type_error("degrees must be exact: pass a str such as '0.45' or a fractions.Fraction");
  if (py::isinstance<py::int_>(value) || py::isinstance(value, fraction_type())) {
    const py::object f = fraction_type()(value);
    return Degree::from_fraction(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
  }
  throw py::type_error("unsupported degree type " + std::string(py::str(py::type::handle_of(value))));
}

Hfe to_hfe(const py::iterable& values) {
  std::vector<Degree> out;
  for (const py::handle& v : values) out.push_back(to_degree(v));
  return Hfe(std::move(out));
}

py::list degrees_of(const Hfe& h) {
  py::list out;
  for (Degree d : h.degrees()) out.append(to_py(d));
  return out;
}

RelationKind kind_of(const std::string& tag) { return relation_kind_from_tag(tag); }

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

GeneratorConfig config_of(std::uint64_t seed, std::size_t trials, std::int64_t grid) {
  GeneratorConfig c;
  c.seed = seed;
  c.trials = trials;
  c.degree_grid = grid;
  c.validate();
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact hesitant fuzzy set algebra";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  // Translators run newest first, so subclasses are registered after the base.
  py::register_exception<DocumentError>(m, "DocumentError", m.attr("Error").ptr());
  py::register_exception<UniverseMismatch>(m, "UniverseMismatch", m.attr("Error").ptr());

  py::class_<Hfe>(m, "Hfe", "Hesitant fuzzy element: a non-empty multiset of degrees in [0, 1]")
      .def(py::init([](const py::iterable& values) { return to_hfe(values); }), py::arg("degrees"))
      .def_property_readonly("degrees", &degrees_of, "Degrees in descending order, as Fractions")
      .def("mean", [](const Hfe& h) { return to_py(mean(h)); })
      .def("bounds", [](const Hfe& h) { return py::make_tuple(to_py(h.lower()), to_py(h.upper())); })
      .def("__len__", &Hfe::size)
      .def("__eq__", [](const Hfe& a, const Hfe& b) { return a == b; })
      .def("__hash__", [](const Hfe& h) { return py::hash(py::str(h.to_string())); })
      .def("__str__", &Hfe::to_string)
      .def("__repr__", [](const Hfe& h) { return "Hfe(" + h.to_string() + ")"; });

  m.def("union", &hfe_union, py::arg("a"), py::arg("b"));
  m.def("intersection", &hfe_intersection, py::arg("a"), py::arg("b"));
  m.def("complement", &hfe_complement, py::arg("a"));
  m.def("best_q", &best_q_subsequence, py::arg("w"), py::arg("q"));
  m.def(
      "relation", [](const std::string& kind, const Hfe& a, const Hfe& b) { return element_relation(kind_of(kind), a, b); },
      py::arg("kind"), py::arg("a"), py::arg("b"), "a ⊂kind b for kind in p, a, m, s, t, n");
  m.def(
      "relation_profile",
      [](const Hfe& a, const Hfe& b) {
        const RelationProfile p = relation_profile(a, b);
        py::dict out;
        for (RelationKind k : kAllRelationKinds) out[py::str(std::string(1, tag(k)))] = p.holds(k);
        out["sot"] = std::string(to_string(p.sot));
        return out;
      },
      py::arg("a"), py::arg("b"));

  py::class_<Document>(m, "Document", "A universe with named sets and families")
      .def_property_readonly("universe",
                             [](const Document& d) {
                               return std::vector<std::string>(d.universe.elements().begin(),
                                                               d.universe.elements().end());
                             })
      .def_property_readonly("set_names",
                             [](const Document& d) {
                               std::vector<std::string> out;
                               for (const auto& s : d.sets) out.push_back(s.first);
                               return out;
                             })
      .def(
          "membership", [](const Document& d, const std::string& set, const std::string& element) {
            return d.set(set).at(element);
          },
          py::arg("set"), py::arg("element"))
      .def(
          "evaluate",
          [](const Document& d, const std::string& expr) {
            const Hfs h = Expr::parse(expr).eval(d.binding());
            py::dict out;
            for (std::size_t i = 0; i < h.universe().size(); ++i) out[py::str(h.universe()[i])] = h.at(i);
            return out;
          },
          py::arg("expr"), "Memberships of an expression over the document's sets and families")
      .def(
          "includes",
          [](const Document& d, const std::string& kind, const std::string& a, const std::string& b) {
            return set_relation(kind_of(kind), d.set(a), d.set(b));
          },
          py::arg("kind"), py::arg("a"), py::arg("b"), "a ⊂kind b at every element")
      .def(
          "equal",
          [](const Document& d, const std::string& kind, const std::string& a, const std::string& b) {
            return set_equality(kind_of(kind), d.set(a), d.set(b));
          },
          py::arg("kind"), py::arg("a"), py::arg("b"))
      .def("to_json", &format_document, "Canonical JSON text")
      .def("__eq__", [](const Document& a, const Document& b) { return a == b; });

  m.def("parse_document", &parse_document, py::arg("text"));
  m.def("load_document", [](const std::string& path) { return load_document(std::filesystem::path(path)); },
        py::arg("path"));

  m.def(
      "_rank_json",
      [](const Document& d, const std::string& set, const std::string& kind) {
        return ranking_to_json(rank_schemes(d.set(set), kind_of(kind)));
      },
      py::arg("document"), py::arg("set"), py::arg("kind"));

  m.def("laws", [] {
    py::list out;
    for (const Law& law : law_registry()) {
      py::dict d;
      d["id"] = law.id;
      d["status"] = std::string(to_string(law.status));
      d["statement"] = law.statement;
      out.append(d);
    }
    return out;
  });

  m.def(
      "_run_suite_json",
      [](std::uint64_t seed, std::size_t trials, std::int64_t grid, std::size_t threads,
         std::vector<std::string> only) {
        RunOptions options;
        options.threads = threads;
        options.only = std::move(only);
        const GeneratorConfig config = config_of(seed, trials, grid);
        py::gil_scoped_release release;
        return report_to_json(run_suite(config, options));
      },
      py::arg("seed"), py::arg("trials"), py::arg("grid"), py::arg("threads"), py::arg("only"));

  m.def(
      "hunt",
      [](const std::string& law_id, std::size_t trials, std::uint64_t seed) -> py::object {
        const GeneratorConfig config = config_of(seed, trials, 100);
        std::optional<Witness> w;
        {
          py::gil_scoped_release release;
          w = hunt_counterexample(law_id, config);
        }
        if (!w) return py::none();
        py::dict out;
        out["law"] = w->law_id;
        out["trial"] = w->trial;
        out["guard"] = w->verdict.guard;
        out["claim"] = w->verdict.claim;
        out["binding"] = json_loads(binding_to_json(w->binding));
        return std::move(out);
      },
      py::arg("law_id"), py::arg("trials") = 100'000, py::arg("seed") = GeneratorConfig{}.seed,
      "First violating binding within `trials` samples, or None");

  m.def(
      "evaluate_law",
      [](const std::string& law_id, const py::object& binding) {
        const std::string text = py::module_::import("json").attr("dumps")(binding).cast<std::string>();
        const Verdict v = evaluate_law(find_law(law_id), binding_from_json(text));
        return py::make_tuple(v.guard, v.claim);
      },
      py::arg("law_id"), py::arg("binding"), "(guard, claim) on a binding given as a dict");
}

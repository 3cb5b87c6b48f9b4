#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cgmcr/category.hpp"
#include "cgmcr/error.hpp"
#include "cgmcr/fixtures.hpp"
#include "cgmcr/io.hpp"
#include "cgmcr/reachability.hpp"
#include "cgmcr/stability.hpp"

namespace py = pybind11;
using namespace cgmcr;

namespace {

LegalRule rule_from(const std::string& text) {
  if (text == "no-repeat") return LegalRule::kNoConsecutiveRepeat;
  if (text == "free") return LegalRule::kFree;
  throw Error(ErrorCode::kInvalidArgument, "unknown rule '" + text + "'");
}

StabilityConcept concept_from(const std::string& text) {
  const auto c = parse_concept(text);
  if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown concept '" + text + "'");
  return *c;
}

std::vector<std::string> names(const Conflict& conflict, const StateSet& set) {
  std::vector<std::string> out;
  for (auto s : set) out.push_back(conflict.state_name(s));
  return out;
}

std::vector<std::string> path_strings(const Conflict& conflict, const Path& path) {
  std::vector<std::string> out;
  for (const auto& m : path) out.push_back(to_string(conflict, m));
  return out;
}

Coalition coalition_from(const Conflict& conflict, const std::vector<std::string>& members) {
  std::vector<OwnerId> ids;
  for (const auto& name : members) ids.push_back(conflict.owner(name));
  return Coalition::of(conflict, ids);
}

py::list law_rows(const std::string& suite, const std::vector<LawReport>& reports) {
  py::list rows;
  for (const auto& r : reports) {
    py::dict row;
    row["suite"] = suite;
    row["law"] = r.law;
    row["passed"] = r.passed();
    row["checked"] = r.checked;
    row["notes"] = r.notes;
    if (r.counterexample) {
      row["counterexample"] = py::make_tuple(r.counterexample->objects, r.counterexample->detail);
    } else {
      row["counterexample"] = py::none();
    }
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph-model conflict analysis with categorical stability concepts";

  static py::exception<Error> error_type(m, "CgmcrError", PyExc_ValueError);
  static py::exception<ParseError> parse_error_type(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object exc = py::handle(parse_error_type)(e.what());
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      exc.attr("code") = e.code();
      py::set_error(parse_error_type, exc);
    } catch (const InvalidModelError& e) {
      py::set_error(error_type, (std::string(e.what()) + "\n" + render_validation(e.report())).c_str());
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::list concepts;
  for (auto c : kAllConcepts) concepts.append(std::string(to_string(c)));
  m.attr("CONCEPTS") = py::tuple(concepts);

  m.def("fixture_names", &fixture_names);
  m.def("load_fixture", [](const std::string& name) { return std::string(fixture_source(name)); },
        py::arg("name"), "Text of an embedded case-study model.");
  m.def("serialize_model", [](const std::string& text) { return serialize_model(parse_model(text)); },
        py::arg("text"), "Canonical form of a model.");
  m.def("export_dot",
        [](const std::string& text, bool ranks) { return export_dot(parse_model(text), DotOptions{true, ranks}); },
        py::arg("text"), py::arg("ranks") = false);
  m.def(
      "validate",
      [](const std::string& text) {
        const auto report = validate_model(parse_model(text));
        py::list out;
        auto add = [&](const char* severity, const Diagnostic& d) {
          out.append(py::make_tuple(severity, d.code, d.message, d.location));
        };
        for (const auto& d : report.errors) add("error", d);
        for (const auto& d : report.warnings) add("warning", d);
        return out;
      },
      py::arg("text"), "List of (severity, code, message, location).");

  py::class_<StabilityReport>(m, "Report")
      .def_readonly("states", &StabilityReport::states)
      .def_readonly("dms", &StabilityReport::dms)
      .def("equilibria", [](const StabilityReport& r, const std::string& c) { return r.equilibria_of(concept_from(c)); })
      .def("is_stable",
           [](const StabilityReport& r, const std::string& c, const std::string& state, const std::string& dm) {
             const auto si = std::find(r.states.begin(), r.states.end(), state);
             const auto di = std::find(r.dms.begin(), r.dms.end(), dm);
             if (si == r.states.end()) throw Error(ErrorCode::kUnknownState, "unknown state '" + state + "'");
             if (di == r.dms.end()) throw Error(ErrorCode::kUnknownDm, "unknown DM '" + dm + "'");
             return r.verdict(concept_from(c), si - r.states.begin(), di - r.dms.begin()).stable;
           })
      .def("to_table", [](const StabilityReport& r) { return render_report(r, ReportFormat::kTable); })
      .def("to_json", [](const StabilityReport& r) { return render_report(r, ReportFormat::kJson); });

  py::class_<Conflict>(m, "Conflict")
      .def(py::init([](const std::string& text) { return Conflict(parse_model(text)); }), py::arg("text"))
      .def_static("fixture", [](const std::string& name) { return Conflict(load_fixture(name)); })
      .def_property_readonly("name", &Conflict::name)
      .def_property_readonly("dms", [](const Conflict& c) {
        std::vector<std::string> out;
        for (auto d : c.dms()) out.push_back(c.dm_name(d));
        return out;
      })
      .def_property_readonly("states", [](const Conflict& c) { return names(c, c.states()); })
      .def_property_readonly("moves", [](const Conflict& c) {
        std::vector<std::string> out;
        for (const auto& mv : c.moves()) out.push_back(to_string(c, mv));
        return out;
      })
      .def("reachable", [](const Conflict& c, const std::string& dm, const std::string& s) {
        return names(c, reachable_list(c, c.dm(dm), c.state(s)));
      })
      .def("improvements", [](const Conflict& c, const std::string& dm, const std::string& s) {
        return names(c, unilateral_improvements(c, c.dm(dm), c.state(s)));
      })
      .def(
          "coalition_reachable",
          [](const Conflict& c, const std::vector<std::string>& members, const std::string& s,
             const std::string& rule, bool improving) {
            const auto coalition = coalition_from(c, members);
            const auto start = c.state(s);
            return names(c, improving ? coalition_improvements(c, coalition, start, rule_from(rule))
                                      : coalition_reachable(c, coalition, start, rule_from(rule)));
          },
          py::arg("coalition"), py::arg("state"), py::arg("rule") = "no-repeat", py::arg("improving") = false)
      .def(
          "paths",
          [](const Conflict& c, const std::string& from, const std::string& to, std::size_t max_len,
             std::optional<std::vector<std::string>> members, const std::string& rule) {
            Scope scope = Scope::all_arcs(c, rule_from(rule));
            if (members) scope.movers = coalition_from(c, *members);
            std::vector<std::vector<std::string>> out;
            for (const auto& p : enumerate_paths(c, c.state(from), c.state(to), max_len, scope)) {
              out.push_back(path_strings(c, p));
            }
            return out;
          },
          py::arg("source"), py::arg("target"), py::arg("max_len"), py::arg("coalition") = py::none(),
          py::arg("rule") = "no-repeat")
      .def(
          "analyze",
          [](const Conflict& c, std::optional<std::vector<std::string>> concepts, const std::string& rule,
             const std::string& c_nash, const std::string& c_movers) {
            AnalysisOptions options;
            if (concepts) {
              options.concepts.clear();
              for (const auto& name : *concepts) options.concepts.push_back(concept_from(name));
            }
            options.rule = rule_from(rule);
            if (c_nash == "owner") {
              options.c_nash_mode = CNashMode::kOwnerRestricted;
            } else if (c_nash == "literal") {
              options.c_nash_mode = CNashMode::kLiteralAnyTransition;
            } else {
              throw Error(ErrorCode::kInvalidArgument, "unknown c_nash mode '" + c_nash + "'");
            }
            if (c_movers == "exclude-focal") {
              options.c_path_movers = CPathMovers::kExcludeFocal;
            } else if (c_movers == "all") {
              options.c_path_movers = CPathMovers::kAllDMs;
            } else {
              throw Error(ErrorCode::kInvalidArgument, "unknown c_movers value '" + c_movers + "'");
            }
            return analyze(c, options);
          },
          py::arg("concepts") = py::none(), py::arg("rule") = "no-repeat", py::arg("c_nash") = "owner",
          py::arg("c_movers") = "exclude-focal")
      .def(
          "laws",
          [](const Conflict& c, const std::string& rule) {
            const auto cat = build_reachability_category(c, Scope::all_arcs(c, rule_from(rule)));
            py::list rows = law_rows("category", check_category_laws(c, cat));
            if (c.has_preferences()) {
              for (auto dm : c.dms()) {
                const auto functor = build_preference_functor(c, dm);
                for (auto r : law_rows("functor[" + c.dm_name(dm) + "]", check_functor_laws(c, functor, cat))) {
                  rows.append(r);
                }
                for (auto r : law_rows("c-preference[" + c.dm_name(dm) + "]",
                                       check_c_preference_properties(c, dm, cat))) {
                  rows.append(r);
                }
              }
            }
            return rows;
          },
          py::arg("rule") = "no-repeat")
      .def(
          "propositions",
          [](const Conflict& c, const std::string& rule) {
            AnalysisOptions options;
            options.rule = rule_from(rule);
            return law_rows("propositions", check_propositions(c, options));
          },
          py::arg("rule") = "no-repeat");
}

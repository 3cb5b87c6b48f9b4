#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cgmcr/category.hpp"
#include "cgmcr/fixtures.hpp"
#include "cgmcr/io.hpp"
#include "cgmcr/reachability.hpp"
#include "cgmcr/stability.hpp"

namespace cgmcr::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failure {
  int code;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ConflictModel read_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

LegalRule parse_rule(const std::string& text) {
  if (text == "no-repeat") return LegalRule::kNoConsecutiveRepeat;
  if (text == "free") return LegalRule::kFree;
  throw UsageError("unknown rule '" + text + "' (expected no-repeat or free)");
}

Conflict load_conflict(const std::string& path, std::ostream& err) {
  auto model = read_model(path);
  try {
    return Conflict(std::move(model));
  } catch (const InvalidModelError& e) {
    err << render_validation(e.report());
    throw Failure{kExitValidation};
  }
}

void print_laws(std::ostream& out, const std::string& suite, const std::vector<LawReport>& reports,
                bool& ok) {
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << suite << "/" << r.law << " (" << r.checked << " checked)";
    if (!r.passed()) {
      out << " counterexample:";
      for (const auto& o : r.counterexample->objects) out << " " << o;
      out << " -- " << r.counterexample->detail;
      ok = false;
    }
    out << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
  }
}

std::string path_text(const Conflict& conflict, const Path& path) {
  std::string text;
  for (const auto& m : path) text += (text.empty() ? "" : " ") + to_string(conflict, m);
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict analysis with graph-model and categorical stability concepts", "cgmcr"};
  app.require_subcommand(1);

  std::string file;
  std::string rule_text = "no-repeat";

  auto* validate = app.add_subcommand("validate", "Check a model file");
  validate->add_option("file", file, "model file")->required();

  std::string concepts_text = "nash,gmr,smr,seq,c-nash,c-gmr,c-smr,c-seq";
  std::string c_nash_text = "owner";
  std::string c_movers_text = "exclude-focal";
  std::string format_text = "table";
  auto* analyze_cmd = app.add_subcommand("analyze", "Stability analysis");
  analyze_cmd->add_option("file", file, "model file")->required();
  analyze_cmd->add_option("--concepts", concepts_text, "comma-separated concepts");
  analyze_cmd->add_option("--rule", rule_text, "no-repeat | free");
  analyze_cmd->add_option("--c-nash", c_nash_text, "owner | literal");
  analyze_cmd->add_option("--c-movers", c_movers_text, "exclude-focal | all");
  analyze_cmd->add_option("--format", format_text, "table | json");

  std::string from;
  std::string dm_text;
  std::string coalition_text;
  bool improvements = false;
  auto* reachable = app.add_subcommand("reachable", "Reachable states from a state");
  reachable->add_option("file", file, "model file")->required();
  reachable->add_option("--from", from, "start state")->required();
  auto* dm_opt = reachable->add_option("--dm", dm_text, "single DM");
  auto* coalition_opt = reachable->add_option("--coalition", coalition_text, "comma-separated owners");
  dm_opt->excludes(coalition_opt);
  reachable->add_flag("--improvements", improvements, "only sequences of strict improvements");
  reachable->add_option("--rule", rule_text, "no-repeat | free");

  std::string to;
  std::size_t max_len = 0;
  auto* paths = app.add_subcommand("paths", "Enumerate move sequences between two states");
  paths->add_option("file", file, "model file")->required();
  paths->add_option("--from", from, "start state")->required();
  paths->add_option("--to", to, "end state")->required();
  paths->add_option("--max-len", max_len, "maximum sequence length")->required()->check(CLI::PositiveNumber);
  paths->add_option("--coalition", coalition_text, "comma-separated owners (default: all)");
  paths->add_option("--rule", rule_text, "no-repeat | free");

  std::string output;
  bool ranks = false;
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the move graph");
  dot->add_option("file", file, "model file")->required();
  dot->add_option("-o,--output", output, "write to a file instead of stdout");
  dot->add_flag("--ranks", ranks, "label states with each DM's rank");

  auto* laws = app.add_subcommand("laws", "Category, functor and C-preference law checks");
  laws->add_option("file", file, "model file")->required();
  laws->add_option("--rule", rule_text, "no-repeat | free");

  auto* props = app.add_subcommand("props", "Check the stated propositions on a model");
  props->add_option("file", file, "model file")->required();
  props->add_option("--rule", rule_text, "no-repeat | free");

  std::string fixture_name;
  auto* fixture = app.add_subcommand("fixture", "Print an embedded case-study model");
  fixture->add_option("name", fixture_name, "fixture name")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) {
      const auto report = validate_model(read_model(file));
      (report.valid() ? out : err) << render_validation(report);
      return report.valid() ? kExitOk : kExitValidation;
    }

    if (analyze_cmd->parsed()) {
      AnalysisOptions options;
      options.concepts.clear();
      for (const auto& name : split_list(concepts_text)) {
        const auto c = parse_concept(name);
        if (!c) throw UsageError("unknown concept '" + name + "'");
        options.concepts.push_back(*c);
      }
      if (options.concepts.empty()) throw UsageError("no concepts requested");
      options.rule = parse_rule(rule_text);
      if (c_nash_text == "owner") {
        options.c_nash_mode = CNashMode::kOwnerRestricted;
      } else if (c_nash_text == "literal") {
        options.c_nash_mode = CNashMode::kLiteralAnyTransition;
      } else {
        throw UsageError("unknown --c-nash mode '" + c_nash_text + "'");
      }
      if (c_movers_text == "exclude-focal") {
        options.c_path_movers = CPathMovers::kExcludeFocal;
      } else if (c_movers_text == "all") {
        options.c_path_movers = CPathMovers::kAllDMs;
      } else {
        throw UsageError("unknown --c-movers value '" + c_movers_text + "'");
      }
      ReportFormat format;
      if (format_text == "table") {
        format = ReportFormat::kTable;
      } else if (format_text == "json") {
        format = ReportFormat::kJson;
      } else {
        throw UsageError("unknown format '" + format_text + "'");
      }
      const Conflict conflict = load_conflict(file, err);
      out << render_report(analyze(conflict, options), format);
      return kExitOk;
    }

    if (reachable->parsed()) {
      const LegalRule rule = parse_rule(rule_text);
      const Conflict conflict = load_conflict(file, err);
      std::vector<OwnerId> members;
      if (!dm_text.empty()) {
        members.push_back(conflict.dm(dm_text));
      } else if (!coalition_text.empty()) {
        for (const auto& name : split_list(coalition_text)) members.push_back(conflict.owner(name));
      } else {
        throw UsageError("one of --dm or --coalition is required");
      }
      const Coalition coalition = Coalition::of(conflict, members);
      const StateId start = conflict.state(from);
      const StateSet result = improvements ? coalition_improvements(conflict, coalition, start, rule)
                                           : coalition_reachable(conflict, coalition, start, rule);
      for (auto s : result) out << conflict.state_name(s) << "\n";
      return kExitOk;
    }

    if (paths->parsed()) {
      const LegalRule rule = parse_rule(rule_text);
      const Conflict conflict = load_conflict(file, err);
      Scope scope = Scope::all_arcs(conflict, rule);
      if (!coalition_text.empty()) {
        std::vector<OwnerId> members;
        for (const auto& name : split_list(coalition_text)) members.push_back(conflict.owner(name));
        scope.movers = Coalition::of(conflict, members);
      }
      for (const auto& p : enumerate_paths(conflict, conflict.state(from), conflict.state(to), max_len, scope)) {
        out << path_text(conflict, p) << "\n";
      }
      return kExitOk;
    }

    if (dot->parsed()) {
      const Conflict conflict = load_conflict(file, err);
      const std::string text = export_dot(conflict.source(), DotOptions{true, ranks});
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file_out(output, std::ios::binary);
        if (!file_out) throw UsageError("cannot write '" + output + "'");
        file_out << text;
      }
      return kExitOk;
    }

    if (laws->parsed()) {
      const LegalRule rule = parse_rule(rule_text);
      const Conflict conflict = load_conflict(file, err);
      const auto cat = build_reachability_category(conflict, Scope::all_arcs(conflict, rule));
      bool ok = true;
      print_laws(out, "category", check_category_laws(conflict, cat), ok);
      if (conflict.has_preferences()) {
        for (auto dm : conflict.dms()) {
          const auto functor = build_preference_functor(conflict, dm);
          print_laws(out, "functor[" + conflict.dm_name(dm) + "]", check_functor_laws(conflict, functor, cat), ok);
          print_laws(out, "c-preference[" + conflict.dm_name(dm) + "]",
                     check_c_preference_properties(conflict, dm, cat), ok);
        }
      } else {
        out << "SKIP functor and c-preference suites: model declares no preferences\n";
      }
      return ok ? kExitOk : kExitValidation;
    }

    if (props->parsed()) {
      AnalysisOptions options;
      options.rule = parse_rule(rule_text);
      const Conflict conflict = load_conflict(file, err);
      bool ok = true;
      print_laws(out, "propositions", check_propositions(conflict, options), ok);
      return ok ? kExitOk : kExitValidation;
    }

    if (fixture->parsed()) {
      out << fixture_source(fixture_name);
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const ParseError& e) {
    err << file << ":" << e.line() << ":" << e.column() << ": " << e.code() << ": " << e.message() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidModelError& e) {
    err << render_validation(e.report());
    return kExitValidation;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kMissingPreferences:
      case ErrorCode::kModelTooSmall:
      case ErrorCode::kInvalidModel:
        return kExitValidation;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace cgmcr::cli

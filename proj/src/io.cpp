#include "cgmcr/io.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace cgmcr {
namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
  bool quoted = false;
};

bool is_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

class LineParser {
 public:
  explicit LineParser(std::string_view source) : source_(source) {}

  ConflictModel run() {
    std::size_t pos = 0;
    while (pos <= source_.size()) {
      const std::size_t end = std::min(source_.find('\n', pos), source_.size());
      std::string_view line = source_.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no_;
      statement(tokenize(line));
      if (end == source_.size()) break;
      pos = end + 1;
    }
    return std::move(model_);
  }

 private:
  [[noreturn]] void fail(std::size_t column, std::string code, const std::string& message) const {
    throw ParseError(line_no_, column, std::move(code), message);
  }

  std::vector<Token> tokenize(std::string_view line) const {
    std::vector<Token> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
      const char c = line[k];
      if (c == ' ' || c == '\t') {
        ++k;
      } else if (c == '#') {
        break;
      } else if (c == '"') {
        const std::size_t close = line.find('"', k + 1);
        if (close == std::string_view::npos) fail(k + 1, "BAD_STRING", "unterminated string");
        tokens.push_back({std::string(line.substr(k + 1, close - k - 1)), k + 1, true});
        k = close + 1;
        if (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '#') {
          fail(k + 1, "SYNTAX", "expected a separator after the closing quote");
        }
      } else {
        std::size_t stop = k;
        while (stop < line.size() && line[stop] != ' ' && line[stop] != '\t' && line[stop] != '#') ++stop;
        tokens.push_back({std::string(line.substr(k, stop - k)), k + 1, false});
        k = stop;
      }
    }
    return tokens;
  }

  const Token& identifier(const std::vector<Token>& tokens, std::size_t k) const {
    if (k >= tokens.size()) {
      const std::size_t col = tokens.empty() ? 1 : tokens.back().column + tokens.back().text.size() + 1;
      fail(col, "SYNTAX", "missing identifier");
    }
    if (tokens[k].quoted || !is_identifier(tokens[k].text)) {
      fail(tokens[k].column, "BAD_IDENTIFIER", "'" + tokens[k].text + "' is not a valid identifier");
    }
    return tokens[k];
  }

  void expect_count(const std::vector<Token>& tokens, std::size_t n) const {
    if (tokens.size() > n) fail(tokens[n].column, "SYNTAX", "unexpected token '" + tokens[n].text + "'");
    if (tokens.size() < n) {
      fail(tokens.back().column + tokens.back().text.size() + 1, "SYNTAX", "statement is incomplete");
    }
  }

  bool known_dm(std::string_view id) const {
    return std::find(model_.dms.begin(), model_.dms.end(), id) != model_.dms.end();
  }

  bool known_state(std::string_view id) const {
    return std::find(model_.states.begin(), model_.states.end(), id) != model_.states.end();
  }

  const std::string& state_ref(const std::vector<Token>& tokens, std::size_t k) const {
    const auto& t = identifier(tokens, k);
    if (!known_state(t.text)) fail(t.column, "UNKNOWN_STATE", "state '" + t.text + "' is not declared");
    return t.text;
  }

  void statement(const std::vector<Token>& tokens) {
    if (tokens.empty()) return;
    const bool first = !seen_statement_;
    seen_statement_ = true;
    const Token& keyword = tokens[0];
    if (keyword.quoted) fail(keyword.column, "UNKNOWN_KEYWORD", "expected a keyword");

    if (keyword.text == "conflict") {
      if (!first) fail(keyword.column, "MISPLACED_HEADER", "'conflict' must be the first statement");
      expect_count(tokens, 2);
      if (!tokens[1].quoted) fail(tokens[1].column, "SYNTAX", "conflict name must be quoted");
      model_.name = tokens[1].text;
    } else if (keyword.text == "dm") {
      expect_count(tokens, 2);
      const auto& id = identifier(tokens, 1);
      if (id.text == kEnvName) fail(id.column, "RESERVED_DM", "'env' is reserved");
      if (known_dm(id.text)) fail(id.column, "DUPLICATE_DM", "DM '" + id.text + "' already declared");
      model_.dms.push_back(id.text);
    } else if (keyword.text == "env") {
      expect_count(tokens, 1);
      if (model_.has_env) fail(keyword.column, "DUPLICATE_ENV", "'env' already declared");
      model_.has_env = true;
    } else if (keyword.text == "state") {
      expect_count(tokens, 2);
      const auto& id = identifier(tokens, 1);
      if (known_state(id.text)) fail(id.column, "DUPLICATE_STATE", "state '" + id.text + "' already declared");
      model_.states.push_back(id.text);
    } else if (keyword.text == "move") {
      move(tokens);
    } else if (keyword.text == "prefer") {
      prefer(tokens);
    } else {
      fail(keyword.column, "UNKNOWN_KEYWORD", "unknown statement '" + keyword.text + "'");
    }
  }

  void move(const std::vector<Token>& tokens) {
    expect_count(tokens, 5);
    const auto& owner = identifier(tokens, 1);
    if (owner.text == kEnvName) {
      if (!model_.has_env) fail(owner.column, "UNKNOWN_OWNER", "'env' moves need an 'env' declaration");
    } else if (!known_dm(owner.text)) {
      fail(owner.column, "UNKNOWN_OWNER", "owner '" + owner.text + "' is not a declared DM");
    }
    const auto& from = state_ref(tokens, 2);
    if (tokens[3].text != "->" || tokens[3].quoted) fail(tokens[3].column, "SYNTAX", "expected '->'");
    const auto& to = state_ref(tokens, 4);
    if (from == to) fail(tokens[4].column, "LOOP_ARC", "move from '" + from + "' to itself");
    Arc arc{owner.text, from, to};
    if (std::find(model_.arcs.begin(), model_.arcs.end(), arc) != model_.arcs.end()) {
      fail(tokens[1].column, "DUPLICATE_MOVE", "move listed twice");
    }
    model_.arcs.push_back(std::move(arc));
  }

  void prefer(const std::vector<Token>& tokens) {
    if (tokens.size() < 3) {
      fail(tokens.back().column + tokens.back().text.size() + 1, "SYNTAX", "preference line is incomplete");
    }
    const Token& head = tokens[1];
    if (head.quoted || head.text.size() < 2 || head.text.back() != ':') {
      fail(head.column, "SYNTAX", "expected '<dm>:'");
    }
    const std::string dm = head.text.substr(0, head.text.size() - 1);
    if (!is_identifier(dm)) fail(head.column, "BAD_IDENTIFIER", "'" + dm + "' is not a valid identifier");
    if (!known_dm(dm)) fail(head.column, "UNKNOWN_DM", "DM '" + dm + "' is not declared");
    if (model_.preferences.count(dm)) fail(head.column, "DUPLICATE_PREFER", "DM '" + dm + "' already has a preference line");

    if (tokens.size() % 2 != 1) fail(tokens.back().column, "SYNTAX", "preference line ends with an operator");
    PreferenceOrder order;
    std::set<std::string> listed;
    for (std::size_t k = 2; k < tokens.size(); k += 2) {
      const auto& s = state_ref(tokens, k);
      if (!listed.insert(s).second) fail(tokens[k].column, "PREF_DUPLICATE_STATE", "state '" + s + "' ranked twice");
      const std::string op = k == 2 ? ">" : tokens[k - 1].text;
      if (k > 2 && (tokens[k - 1].quoted || (op != ">" && op != "="))) {
        fail(tokens[k - 1].column, "SYNTAX", "expected '>' or '='");
      }
      if (op == ">") {
        order.classes.push_back({s});
      } else {
        order.classes.back().push_back(s);
      }
    }
    model_.preferences.emplace(dm, std::move(order));
  }

  std::string_view source_;
  std::size_t line_no_ = 0;
  bool seen_statement_ = false;
  ConflictModel model_;
};

std::string dot_id(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

constexpr std::array<std::string_view, 8> kPalette = {
    "#4a90e2", "#d0021b", "#1a9a7d", "#f5a623", "#9013fe", "#8b572a", "#417505", "#bd10e0"};

std::string move_text(const StabilityReport& report, const Move& m) {
  const std::string owner = m.owner.is_env() ? std::string(kEnvName) : report.dms.at(m.owner.index);
  return owner + ":" + report.states.at(m.from.index) + "->" + report.states.at(m.to.index);
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

std::string rstrip(std::string text) {
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

std::string render_table(const StabilityReport& report) {
  std::ostringstream os;
  os << "conflict: " << report.model_name << "  rule: " << to_string(report.options.rule)
     << "  c-nash: " << (report.options.c_nash_mode == CNashMode::kOwnerRestricted ? "owner" : "literal")
     << "  c-movers: " << (report.options.c_path_movers == CPathMovers::kExcludeFocal ? "exclude-focal" : "all")
     << "\n\n";

  std::size_t state_width = std::string("state").size();
  for (const auto& s : report.states) state_width = std::max(state_width, s.size());
  std::vector<std::size_t> widths;  // per DM column
  for (const auto& dm : report.dms) widths.push_back(std::max<std::size_t>(dm.size(), 1));
  std::size_t group_width = 2;  // "eq"
  for (auto w : widths) group_width += w + 1;

  std::string top = pad("", state_width);
  std::string sub = pad("state", state_width);
  for (auto c : report.concepts) {
    top += " | " + pad(std::string(to_string(c)), group_width);
    std::string cells;
    for (std::size_t d = 0; d < report.dms.size(); ++d) cells += pad(report.dms[d], widths[d]) + " ";
    sub += " | " + cells + "eq";
  }
  os << rstrip(top) << "\n" << rstrip(sub) << "\n";
  std::string rule(state_width, '-');
  for (std::size_t c = 0; c < report.concepts.size(); ++c) rule += "-+-" + std::string(group_width, '-');
  os << rule << "\n";

  for (std::size_t s = 0; s < report.states.size(); ++s) {
    std::string row = pad(report.states[s], state_width);
    for (std::size_t c = 0; c < report.concepts.size(); ++c) {
      std::string cells;
      for (std::size_t d = 0; d < report.dms.size(); ++d) {
        cells += pad(report.verdicts[c][s][d].stable ? "Y" : "N", widths[d]) + " ";
      }
      const auto& eq = report.equilibria[c];
      const bool star = std::find(eq.begin(), eq.end(), report.states[s]) != eq.end();
      row += " | " + cells + (star ? "* " : "  ");
    }
    os << rstrip(row) << "\n";
  }

  os << "\n";
  for (std::size_t c = 0; c < report.concepts.size(); ++c) {
    os << "equilibria " << pad(std::string(to_string(report.concepts[c])), 7) << ":";
    if (report.equilibria[c].empty()) os << " (none)";
    for (const auto& s : report.equilibria[c]) os << " " << s;
    os << "\n";
  }
  return os.str();
}

std::string render_json(const StabilityReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["model"] = report.model_name;
  doc["options"] = {
      {"rule", to_string(report.options.rule)},
      {"c_nash", report.options.c_nash_mode == CNashMode::kOwnerRestricted ? "owner" : "literal"},
      {"c_movers", report.options.c_path_movers == CPathMovers::kExcludeFocal ? "exclude-focal" : "all"}};
  doc["states"] = report.states;
  doc["dms"] = report.dms;
  doc["concepts"] = ordered_json::array();
  for (auto c : report.concepts) doc["concepts"].push_back(std::string(to_string(c)));

  ordered_json verdicts = ordered_json::object();
  ordered_json equilibria = ordered_json::object();
  ordered_json witnesses = ordered_json::array();
  for (std::size_t c = 0; c < report.concepts.size(); ++c) {
    const std::string name(to_string(report.concepts[c]));
    ordered_json per_state = ordered_json::object();
    for (std::size_t s = 0; s < report.states.size(); ++s) {
      ordered_json per_dm = ordered_json::object();
      for (std::size_t d = 0; d < report.dms.size(); ++d) {
        const auto& v = report.verdicts[c][s][d];
        per_dm[report.dms[d]] = v.stable;
        for (const auto& w : v.witnesses) {
          ordered_json path = ordered_json::array();
          for (const auto& m : w.path) path.push_back(move_text(report, m));
          witnesses.push_back({{"concept", name},
                               {"state", report.states[s]},
                               {"dm", report.dms[d]},
                               {"kind", std::string(to_string(w.kind))},
                               {"path", path}});
        }
      }
      per_state[report.states[s]] = per_dm;
    }
    verdicts[name] = per_state;
    equilibria[name] = report.equilibria[c];
  }
  doc["verdicts"] = verdicts;
  doc["equilibria"] = equilibria;
  doc["witnesses"] = witnesses;
  return doc.dump(2) + "\n";
}

}  // namespace

ConflictModel parse_model(std::string_view source) { return LineParser(source).run(); }

std::string serialize_model(const ConflictModel& model) {
  const ConflictModel canon = canonicalize(model);
  std::ostringstream os;
  if (!canon.name.empty()) os << "conflict \"" << canon.name << "\"\n\n";
  for (const auto& dm : canon.dms) os << "dm " << dm << "\n";
  if (canon.has_env) os << "env\n";
  os << "\n";
  for (const auto& s : canon.states) os << "state " << s << "\n";
  if (!canon.arcs.empty()) os << "\n";
  for (const auto& a : canon.arcs) os << "move " << a.owner << " " << a.from << " -> " << a.to << "\n";
  bool any_prefer = false;
  for (const auto& dm : canon.dms) {
    auto it = canon.preferences.find(dm);
    if (it == canon.preferences.end()) continue;
    if (!any_prefer) os << "\n";
    any_prefer = true;
    os << "prefer " << dm << ":";
    for (std::size_t k = 0; k < it->second.classes.size(); ++k) {
      const auto& cls = it->second.classes[k];
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (k == 0 && j == 0) {
          os << " " << cls[j];
        } else {
          os << (j == 0 ? " > " : " = ") << cls[j];
        }
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string export_dot(const ConflictModel& model, const DotOptions& options) {
  const ConflictModel canon = canonicalize(model);
  std::ostringstream os;
  os << "digraph " << dot_id(canon.name.empty() ? "conflict" : canon.name) << " {\n";
  os << "  node [shape=ellipse];\n";
  for (const auto& s : canon.states) {
    os << "  " << dot_id(s);
    if (options.show_ranks && !canon.preferences.empty()) {
      std::string label = s + "\\n";
      bool first = true;
      for (const auto& dm : canon.dms) {
        auto it = canon.preferences.find(dm);
        if (it == canon.preferences.end()) continue;
        const auto r = it->second.rank(s);
        label += (first ? "" : " ") + dm + "=" + (r ? std::to_string(*r) : "?");
        first = false;
      }
      os << " [label=\"" << label << "\"]";
    }
    os << ";\n";
  }
  for (const auto& a : canon.arcs) {
    os << "  " << dot_id(a.from) << " -> " << dot_id(a.to) << " [label=" << dot_id(a.owner);
    if (a.owner == kEnvName) {
      os << ", style=dashed, color=\"#7f7f7f\"";
    } else if (options.color_by_owner) {
      const auto idx = static_cast<std::size_t>(
          std::find(canon.dms.begin(), canon.dms.end(), a.owner) - canon.dms.begin());
      os << ", color=\"" << kPalette[idx % kPalette.size()] << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_report(const StabilityReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? render_json(report) : render_table(report);
}

std::string render_validation(const ValidationReport& report) {
  std::ostringstream os;
  for (const auto& e : report.errors) {
    os << "error " << e.code << (e.location.empty() ? "" : " at " + e.location) << ": " << e.message << "\n";
  }
  for (const auto& w : report.warnings) {
    os << "warning " << w.code << (w.location.empty() ? "" : " at " + w.location) << ": " << w.message << "\n";
  }
  if (report.valid()) os << "valid\n";
  return os.str();
}

}  // namespace cgmcr

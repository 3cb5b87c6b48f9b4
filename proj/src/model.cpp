#include "cgmcr/model.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

namespace cgmcr {
namespace {

bool is_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::string arc_location(const Arc& arc) {
  return "move " + arc.owner + " " + arc.from + " -> " + arc.to;
}

std::size_t index_of(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

std::optional<int> PreferenceOrder::rank(std::string_view state) const {
  const int top = static_cast<int>(classes.size()) - 1;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (const auto& s : classes[k]) {
      if (s == state) return top - static_cast<int>(k);
    }
  }
  return std::nullopt;
}

ConflictModel canonicalize(const ConflictModel& model) {
  ConflictModel out = model;
  auto owner_key = [&](const std::string& owner) {
    return owner == kEnvName ? model.dms.size() : index_of(model.dms, owner);
  };
  std::stable_sort(out.arcs.begin(), out.arcs.end(), [&](const Arc& a, const Arc& b) {
    return std::make_tuple(owner_key(a.owner), index_of(model.states, a.from),
                           index_of(model.states, a.to)) <
           std::make_tuple(owner_key(b.owner), index_of(model.states, b.from),
                           index_of(model.states, b.to));
  });
  return out;
}

bool ValidationReport::has_error(std::string_view code) const {
  return std::any_of(errors.begin(), errors.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

bool ValidationReport::has_warning(std::string_view code) const {
  return std::any_of(warnings.begin(), warnings.end(),
                     [&](const Diagnostic& d) { return d.code == code; });
}

ValidationReport validate_model(const ConflictModel& model) {
  ValidationReport report;
  auto error = [&](std::string code, std::string message, std::string location) {
    report.errors.push_back({std::move(code), std::move(message), std::move(location)});
  };
  auto warn = [&](std::string code, std::string message, std::string location) {
    report.warnings.push_back({std::move(code), std::move(message), std::move(location)});
  };

  std::set<std::string_view> dm_set;
  for (const auto& dm : model.dms) {
    if (!is_identifier(dm)) error("BAD_IDENTIFIER", "invalid DM identifier '" + dm + "'", "dm " + dm);
    if (dm == kEnvName) error("RESERVED_DM", "'env' is reserved for exogenous moves", "dm " + dm);
    if (!dm_set.insert(dm).second) error("DUPLICATE_DM", "DM '" + dm + "' declared twice", "dm " + dm);
  }
  std::set<std::string_view> state_set;
  for (const auto& s : model.states) {
    if (!is_identifier(s)) error("BAD_IDENTIFIER", "invalid state identifier '" + s + "'", "state " + s);
    if (!state_set.insert(s).second) error("DUPLICATE_STATE", "state '" + s + "' declared twice", "state " + s);
  }
  if (model.dms.size() < 2) warn("TOO_FEW_DMS", "stability analysis needs at least two DMs", "");
  if (model.states.size() < 2) warn("TOO_FEW_STATES", "stability analysis needs at least two states", "");

  std::set<std::tuple<std::string_view, std::string_view, std::string_view>> seen_arcs;
  for (const auto& arc : model.arcs) {
    const auto where = arc_location(arc);
    if (arc.owner == kEnvName) {
      if (!model.has_env) error("UNKNOWN_OWNER", "'env' moves require an 'env' declaration", where);
    } else if (!dm_set.count(arc.owner)) {
      error("UNKNOWN_OWNER", "owner '" + arc.owner + "' is not a declared DM", where);
    }
    if (!state_set.count(arc.from)) error("UNKNOWN_STATE", "unknown state '" + arc.from + "'", where);
    if (!state_set.count(arc.to)) error("UNKNOWN_STATE", "unknown state '" + arc.to + "'", where);
    if (arc.from == arc.to) error("LOOP_ARC", "move from a state to itself", where);
    if (!seen_arcs.emplace(arc.owner, arc.from, arc.to).second) {
      error("DUPLICATE_ARC", "move listed twice", where);
    }
  }

  if (model.preferences.empty()) {
    warn("PREFERENCES_ABSENT", "no preferences declared; stability analysis unavailable", "");
    return report;
  }
  for (const auto& [dm, order] : model.preferences) {
    const auto where = "prefer " + dm;
    if (!dm_set.count(dm)) error("PREF_UNKNOWN_DM", "preference for undeclared DM '" + dm + "'", where);
    std::set<std::string_view> listed;
    for (const auto& cls : order.classes) {
      if (cls.empty()) error("PREF_EMPTY_CLASS", "empty indifference class", where);
      for (const auto& s : cls) {
        if (!state_set.count(s)) error("PREF_UNKNOWN_STATE", "unknown state '" + s + "'", where);
        if (!listed.insert(s).second) error("PREF_DUPLICATE_STATE", "state '" + s + "' ranked twice", where);
      }
    }
    for (const auto& s : model.states) {
      if (!listed.count(s)) error("PREF_NOT_TOTAL", "state '" + s + "' is not ranked", where);
    }
  }
  for (const auto& dm : model.dms) {
    if (!model.preferences.count(dm)) error("PREF_MISSING", "DM '" + dm + "' has no preference line", "dm " + dm);
  }
  return report;
}

InvalidModelError::InvalidModelError(ValidationReport report)
    : Error(ErrorCode::kInvalidModel,
            report.errors.empty() ? std::string("invalid model")
                                  : report.errors.front().code + " " + report.errors.front().message),
      report_(std::move(report)) {}

// ---------------------------------------------------------------------------

Conflict::Conflict(ConflictModel model) : source_(std::move(model)) {
  auto report = validate_model(source_);
  if (!report.valid()) throw InvalidModelError(std::move(report));

  for (const auto& arc : source_.arcs) {
    moves_.push_back({owner(arc.owner), state(arc.from), state(arc.to)});
  }
  std::sort(moves_.begin(), moves_.end(), [](const Move& a, const Move& b) {
    return std::tie(a.from, a.to, a.owner) < std::tie(b.from, b.to, b.owner);
  });
  first_move_.assign(state_count() + 1, 0);
  for (const auto& m : moves_) ++first_move_[m.from.index + 1];
  for (std::size_t k = 1; k < first_move_.size(); ++k) first_move_[k] += first_move_[k - 1];

  if (!source_.preferences.empty()) {
    ranks_.assign(dm_count(), std::vector<int>(state_count(), 0));
    for (std::size_t i = 0; i < dm_count(); ++i) {
      const auto& order = source_.preferences.at(source_.dms[i]);
      for (std::size_t s = 0; s < state_count(); ++s) {
        ranks_[i][s] = *order.rank(source_.states[s]);
      }
    }
  }
}

OwnerId Conflict::dm(std::string_view name) const {
  auto it = std::find(source_.dms.begin(), source_.dms.end(), name);
  if (it == source_.dms.end()) {
    throw Error(ErrorCode::kUnknownDm, "no DM named '" + std::string(name) + "'");
  }
  return OwnerId{static_cast<std::size_t>(it - source_.dms.begin())};
}

OwnerId Conflict::owner(std::string_view name) const {
  if (name == kEnvName && source_.has_env) return kEnvOwner;
  return dm(name);
}

StateId Conflict::state(std::string_view name) const {
  auto it = std::find(source_.states.begin(), source_.states.end(), name);
  if (it == source_.states.end()) {
    throw Error(ErrorCode::kUnknownState, "no state named '" + std::string(name) + "'");
  }
  return StateId{static_cast<std::size_t>(it - source_.states.begin())};
}

const std::string& Conflict::dm_name(OwnerId id) const {
  static const std::string env{kEnvName};
  if (id.is_env()) return env;
  require_dm(id);
  return source_.dms[id.index];
}

const std::string& Conflict::state_name(StateId id) const {
  require_state(id);
  return source_.states[id.index];
}

std::vector<OwnerId> Conflict::dms() const {
  std::vector<OwnerId> out;
  for (std::size_t i = 0; i < dm_count(); ++i) out.push_back(OwnerId{i});
  return out;
}

std::vector<StateId> Conflict::states() const {
  std::vector<StateId> out;
  for (std::size_t s = 0; s < state_count(); ++s) out.push_back(StateId{s});
  return out;
}

std::span<const Move> Conflict::moves_from(StateId from) const {
  require_state(from);
  return std::span<const Move>(moves_).subspan(
      first_move_[from.index], first_move_[from.index + 1] - first_move_[from.index]);
}

int Conflict::rank(OwnerId dm, StateId s) const {
  require_dm(dm);
  require_state(s);
  if (!has_preferences()) {
    throw Error(ErrorCode::kMissingPreferences, "model '" + name() + "' declares no preferences");
  }
  return ranks_[dm.index][s.index];
}

int Conflict::max_rank(OwnerId dm) const {
  require_dm(dm);
  if (!has_preferences()) {
    throw Error(ErrorCode::kMissingPreferences, "model '" + name() + "' declares no preferences");
  }
  return *std::max_element(ranks_[dm.index].begin(), ranks_[dm.index].end());
}

void Conflict::require_dm(OwnerId dm) const {
  if (dm.is_env() || dm.index >= dm_count()) {
    throw Error(ErrorCode::kUnknownDm, "DM index out of range");
  }
}

void Conflict::require_state(StateId s) const {
  if (s.index >= state_count()) {
    throw Error(ErrorCode::kUnknownState, "state index out of range");
  }
}

// ---------------------------------------------------------------------------

Coalition::Coalition(const Conflict& conflict)
    : dm_count_(conflict.dm_count()), mask_(conflict.dm_count() + 1, false) {}

Coalition Coalition::of(const Conflict& conflict, const std::vector<OwnerId>& members) {
  Coalition c(conflict);
  for (auto m : members) {
    if (m.is_env()) {
      if (!conflict.has_env()) throw Error(ErrorCode::kUnknownDm, "model declares no 'env'");
    } else {
      conflict.require_dm(m);
    }
    c.add(m);
  }
  return c;
}

Coalition Coalition::all_dms(const Conflict& conflict) {
  Coalition c(conflict);
  for (auto dm : conflict.dms()) c.add(dm);
  return c;
}

Coalition Coalition::all_except(const Conflict& conflict, OwnerId excluded) {
  conflict.require_dm(excluded);
  Coalition c(conflict);
  for (auto dm : conflict.dms()) {
    if (dm != excluded) c.add(dm);
  }
  return c;
}

Coalition Coalition::everyone(const Conflict& conflict) {
  Coalition c = all_dms(conflict);
  if (conflict.has_env()) c.add(kEnvOwner);
  return c;
}

Coalition& Coalition::add(OwnerId owner) {
  mask_.at(slot(owner)) = true;
  return *this;
}

bool Coalition::contains(OwnerId owner) const {
  const auto k = slot(owner);
  return k < mask_.size() && mask_[k];
}

bool Coalition::empty() const {
  return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

std::vector<OwnerId> Coalition::members() const {
  std::vector<OwnerId> out;
  for (std::size_t i = 0; i < dm_count_; ++i) {
    if (mask_[i]) out.push_back(OwnerId{i});
  }
  if (mask_[dm_count_]) out.push_back(kEnvOwner);
  return out;
}

std::size_t Coalition::slot(OwnerId owner) const {
  return owner.is_env() ? dm_count_ : owner.index;
}

std::string to_string(const Conflict& conflict, const Move& move) {
  return conflict.dm_name(move.owner) + ":" + conflict.state_name(move.from) + "->" +
         conflict.state_name(move.to);
}

std::string to_string(LegalRule rule) {
  return rule == LegalRule::kNoConsecutiveRepeat ? "no-repeat" : "free";
}

}  // namespace cgmcr

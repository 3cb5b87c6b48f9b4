#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgmcr/error.hpp"

namespace cgmcr {

// Reserved owner name for exogenous transitions.
inline constexpr std::string_view kEnvName = "env";

// ---------------------------------------------------------------------------
// Source-level model. Identifiers are kept as text so that a model can be
// held (and reported on) even when it violates the invariants checked by
// validate_model().
// ---------------------------------------------------------------------------

struct Arc {
  std::string owner;
  std::string from;
  std::string to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Total preorder as ordered indifference classes, most preferred first.
struct PreferenceOrder {
  std::vector<std::vector<std::string>> classes;

  // rank = class_count - 1 - class_index; higher is better, ties share a rank.
  std::optional<int> rank(std::string_view state) const;

  friend bool operator==(const PreferenceOrder&, const PreferenceOrder&) = default;
};

struct ConflictModel {
  std::string name;
  std::vector<std::string> dms;
  std::vector<std::string> states;
  std::vector<Arc> arcs;
  std::map<std::string, PreferenceOrder> preferences;
  bool has_env = false;

  friend bool operator==(const ConflictModel&, const ConflictModel&) = default;
};

// Copy with arcs sorted by (owner, from, to) in declaration order, `env` last.
ConflictModel canonicalize(const ConflictModel& model);

struct Diagnostic {
  std::string code;
  std::string message;
  std::string location;
};

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool valid() const noexcept { return errors.empty(); }
  bool has_error(std::string_view code) const;
  bool has_warning(std::string_view code) const;
};

ValidationReport validate_model(const ConflictModel& model);

class InvalidModelError : public Error {
 public:
  explicit InvalidModelError(ValidationReport report);

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

// ---------------------------------------------------------------------------
// Indexed model used by every analysis.
// ---------------------------------------------------------------------------

struct StateId {
  std::size_t index = 0;
  friend auto operator<=>(StateId, StateId) = default;
};

// A DM (index < dm_count) or the exogenous owner.
struct OwnerId {
  std::size_t index = 0;
  constexpr bool is_env() const noexcept {
    return index == std::numeric_limits<std::size_t>::max();
  }
  friend auto operator<=>(OwnerId, OwnerId) = default;
};

inline constexpr OwnerId kEnvOwner{std::numeric_limits<std::size_t>::max()};

struct Move {
  OwnerId owner;
  StateId from;
  StateId to;
  friend auto operator<=>(const Move&, const Move&) = default;
};

using StateSet = std::vector<StateId>;  // ascending declaration order
using Path = std::vector<Move>;

enum class LegalRule { kNoConsecutiveRepeat, kFree };

class Conflict {
 public:
  // Throws InvalidModelError when validate_model() reports errors.
  explicit Conflict(ConflictModel model);

  const ConflictModel& source() const noexcept { return source_; }
  const std::string& name() const noexcept { return source_.name; }

  std::size_t dm_count() const noexcept { return source_.dms.size(); }
  std::size_t state_count() const noexcept { return source_.states.size(); }
  bool has_env() const noexcept { return source_.has_env; }
  bool has_preferences() const noexcept { return !ranks_.empty(); }

  // Lookups by name; throw Error(kUnknownDm / kUnknownState).
  OwnerId dm(std::string_view name) const;
  OwnerId owner(std::string_view name) const;  // also accepts "env"
  StateId state(std::string_view name) const;

  const std::string& dm_name(OwnerId id) const;  // "env" for kEnvOwner
  const std::string& state_name(StateId id) const;

  std::vector<OwnerId> dms() const;
  std::vector<StateId> states() const;

  // All arcs ordered by (from, to, owner); env sorts after every DM.
  const std::vector<Move>& moves() const noexcept { return moves_; }
  // Arcs leaving `from`, ordered by (to, owner).
  std::span<const Move> moves_from(StateId from) const;

  // Throws kMissingPreferences when the model has none.
  int rank(OwnerId dm, StateId s) const;
  int max_rank(OwnerId dm) const;

  void require_dm(OwnerId dm) const;
  void require_state(StateId s) const;

 private:
  ConflictModel source_;
  std::vector<Move> moves_;
  std::vector<std::size_t> first_move_;  // CSR offsets into moves_
  std::vector<std::vector<int>> ranks_;  // [dm][state]
};

// Set of owners allowed to move in a sequence. `env` only participates when
// added explicitly.
class Coalition {
 public:
  explicit Coalition(const Conflict& conflict);

  static Coalition of(const Conflict& conflict, const std::vector<OwnerId>& members);
  static Coalition all_dms(const Conflict& conflict);
  static Coalition all_except(const Conflict& conflict, OwnerId excluded);
  static Coalition everyone(const Conflict& conflict);  // every DM plus env

  Coalition& add(OwnerId owner);
  bool contains(OwnerId owner) const;
  bool empty() const;
  std::vector<OwnerId> members() const;

 private:
  std::size_t slot(OwnerId owner) const;

  std::size_t dm_count_;
  std::vector<bool> mask_;  // dm_count + 1 slots, env last
};

std::string to_string(const Conflict& conflict, const Move& move);  // "A:s1->s3"
std::string to_string(LegalRule rule);                              // "no-repeat" / "free"

}  // namespace cgmcr

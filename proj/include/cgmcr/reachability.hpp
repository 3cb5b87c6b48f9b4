#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cgmcr/model.hpp"

namespace cgmcr {

// Per-step admissibility inside a move sequence, judged by the mover's own
// preference. Improving conditions never admit `env` steps (no preference).
enum class StepCondition { kAny, kWeakImproving, kStrictImproving };

// R_i(s): one-step targets of `dm`'s own arcs. `env` arcs are never included.
StateSet reachable_list(const Conflict& conflict, OwnerId dm, StateId s);
// R_i+(s): targets in R_i(s) that `dm` strictly prefers to s.
StateSet unilateral_improvements(const Conflict& conflict, OwnerId dm, StateId s);
// phi_i+(s): every state `dm` strictly prefers to s.
StateSet phi_plus(const Conflict& conflict, OwnerId dm, StateId s);
// phi_i~(s): every state `dm` ranks at most as high as s (s included).
StateSet phi_simeq(const Conflict& conflict, OwnerId dm, StateId s);

// States reachable from s by a nonempty legal sequence of coalition moves.
StateSet coalition_reachable(const Conflict& conflict, const Coalition& coalition,
                             StateId s, LegalRule rule);
// As coalition_reachable, with each step a strict improvement for its mover.
StateSet coalition_improvements(const Conflict& conflict, const Coalition& coalition,
                                StateId s, LegalRule rule);

// Breadth-first search over (state, last mover) pairs from a start state.
//
// Successors are expanded in (to, owner) order and layers in discovery
// order, so the first path recorded for a state is the shortest one and,
// among equally short paths, the lexicographically smallest by
// (from, to, owner) of successive arcs.
class MoveSearch {
 public:
  // Preference level of a DM at a state; improving conditions compare these.
  using LevelFn = std::function<int(OwnerId, StateId)>;

  MoveSearch(const Conflict& conflict, const Coalition& movers, StateId start,
             LegalRule rule, StepCondition condition = StepCondition::kAny);
  MoveSearch(const Conflict& conflict, const Coalition& movers, StateId start,
             LegalRule rule, StepCondition condition, const LevelFn& level);

  StateId start() const noexcept { return start_; }
  // True when some nonempty sequence ends at `s`.
  bool reached(StateId s) const;
  StateSet reached_states() const;
  // Shortest witness for `s`; nullopt when unreachable.
  std::optional<Path> path_to(StateId s) const;

 private:
  struct Node {
    StateId state;
    std::size_t last_slot;
    std::size_t parent;  // index into nodes_, npos for the root
    Move via;
  };

  StateId start_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> first_hit_;  // per state: node index, npos if unreached
};

}  // namespace cgmcr

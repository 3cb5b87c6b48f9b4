#include "cgmcr/reachability.hpp"

#include <algorithm>
#include <deque>

namespace cgmcr {
namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

}  // namespace

StateSet reachable_list(const Conflict& conflict, OwnerId dm, StateId s) {
  conflict.require_dm(dm);
  StateSet out;
  for (const auto& m : conflict.moves_from(s)) {
    if (m.owner == dm) out.push_back(m.to);
  }
  return out;
}

StateSet unilateral_improvements(const Conflict& conflict, OwnerId dm, StateId s) {
  StateSet out;
  const int here = conflict.rank(dm, s);
  for (auto t : reachable_list(conflict, dm, s)) {
    if (conflict.rank(dm, t) > here) out.push_back(t);
  }
  return out;
}

StateSet phi_plus(const Conflict& conflict, OwnerId dm, StateId s) {
  StateSet out;
  const int here = conflict.rank(dm, s);
  for (auto t : conflict.states()) {
    if (conflict.rank(dm, t) > here) out.push_back(t);
  }
  return out;
}

StateSet phi_simeq(const Conflict& conflict, OwnerId dm, StateId s) {
  StateSet out;
  const int here = conflict.rank(dm, s);
  for (auto t : conflict.states()) {
    if (conflict.rank(dm, t) <= here) out.push_back(t);
  }
  return out;
}

StateSet coalition_reachable(const Conflict& conflict, const Coalition& coalition,
                             StateId s, LegalRule rule) {
  return MoveSearch(conflict, coalition, s, rule, StepCondition::kAny).reached_states();
}

StateSet coalition_improvements(const Conflict& conflict, const Coalition& coalition,
                                StateId s, LegalRule rule) {
  return MoveSearch(conflict, coalition, s, rule, StepCondition::kStrictImproving)
      .reached_states();
}

MoveSearch::MoveSearch(const Conflict& conflict, const Coalition& movers, StateId start,
                       LegalRule rule, StepCondition condition)
    : MoveSearch(conflict, movers, start, rule, condition,
                 [&conflict](OwnerId dm, StateId s) { return conflict.rank(dm, s); }) {}

MoveSearch::MoveSearch(const Conflict& conflict, const Coalition& movers, StateId start,
                       LegalRule rule, StepCondition condition, const LevelFn& level)
    : start_(start), first_hit_(conflict.state_count(), kNpos) {
  conflict.require_state(start);
  const std::size_t slots = conflict.dm_count() + 2;  // DMs, env, "nobody yet"
  const std::size_t nobody = slots - 1;
  auto slot_of = [&](OwnerId o) { return o.is_env() ? conflict.dm_count() : o.index; };

  std::vector<bool> visited(conflict.state_count() * slots, false);
  visited[start.index * slots + nobody] = true;
  nodes_.push_back({start, nobody, kNpos, Move{}});

  for (std::size_t head = 0; head < nodes_.size(); ++head) {
    const Node node = nodes_[head];
    for (const auto& m : conflict.moves_from(node.state)) {
      if (!movers.contains(m.owner)) continue;
      const std::size_t mover = slot_of(m.owner);
      if (rule == LegalRule::kNoConsecutiveRepeat && mover == node.last_slot) continue;
      if (condition != StepCondition::kAny) {
        if (m.owner.is_env()) continue;
        const int delta = level(m.owner, m.to) - level(m.owner, m.from);
        if (condition == StepCondition::kWeakImproving && delta < 0) continue;
        if (condition == StepCondition::kStrictImproving && delta <= 0) continue;
      }
      const std::size_t key = m.to.index * slots + mover;
      if (visited[key]) continue;
      visited[key] = true;
      nodes_.push_back({m.to, mover, head, m});
      if (first_hit_[m.to.index] == kNpos) first_hit_[m.to.index] = nodes_.size() - 1;
    }
  }
}

bool MoveSearch::reached(StateId s) const {
  return s.index < first_hit_.size() && first_hit_[s.index] != kNpos;
}

StateSet MoveSearch::reached_states() const {
  StateSet out;
  for (std::size_t s = 0; s < first_hit_.size(); ++s) {
    if (first_hit_[s] != kNpos) out.push_back(StateId{s});
  }
  return out;
}

std::optional<Path> MoveSearch::path_to(StateId s) const {
  if (!reached(s)) return std::nullopt;
  Path path;
  for (std::size_t k = first_hit_[s.index]; nodes_[k].parent != kNpos; k = nodes_[k].parent) {
    path.push_back(nodes_[k].via);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace cgmcr

#include "cgmcr/stability.hpp"

#include <algorithm>
#include <utility>

#include "cgmcr/reachability.hpp"

namespace cgmcr {
namespace {

Path concat(Move first, const Path& rest) {
  Path out{first};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Move owned_move(const Conflict& conflict, OwnerId dm, StateId from, StateId to) {
  for (const auto& m : conflict.moves_from(from)) {
    if (m.owner == dm && m.to == to) return m;
  }
  throw Error(ErrorCode::kInvalidArgument, "no such owned arc");
}

enum class Sanction { kAnyState, kNoEscape };

// Shared body of GMR, SMR and SEQ: every improvement must be answered by a
// sequence of the other DMs ending at a state no better than s for `dm`.
Verdict sanction_check(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule,
                       StepCondition steps, Sanction sanction) {
  Verdict verdict{true, {}};
  const int here = conflict.rank(dm, s);
  const Coalition others = Coalition::all_except(conflict, dm);
  for (auto s1 : unilateral_improvements(conflict, dm, s)) {
    const Move improvement = owned_move(conflict, dm, s, s1);
    const MoveSearch search(conflict, others, s1, rule, steps);
    std::optional<StateId> target;
    for (auto s2 : search.reached_states()) {
      if (conflict.rank(dm, s2) > here) continue;
      if (sanction == Sanction::kNoEscape) {
        const auto escapes = reachable_list(conflict, dm, s2);
        const bool escapable = std::any_of(escapes.begin(), escapes.end(),
                                           [&](StateId s3) { return conflict.rank(dm, s3) > here; });
        if (escapable) continue;
      }
      target = s2;
      break;
    }
    if (target) {
      verdict.witnesses.push_back({WitnessKind::kSanctioned, concat(improvement, *search.path_to(*target))});
    } else {
      verdict.stable = false;
      verdict.witnesses.push_back({WitnessKind::kUnsanctioned, {improvement}});
    }
  }
  return verdict;
}

Coalition c_path_coalition(const Conflict& conflict, OwnerId dm, CPathMovers movers) {
  return movers == CPathMovers::kExcludeFocal ? Coalition::all_except(conflict, dm)
                                              : Coalition::all_dms(conflict);
}

// No sequence from s (per-step condition on movers) may end strictly above s
// for the focal DM.
Verdict path_check(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                   const AnalysisOptions& options, StepCondition steps) {
  const MoveSearch search(conflict, c_path_coalition(conflict, functor.dm, options.c_path_movers), s,
                          options.rule, steps);
  const int here = functor.map(s);
  for (auto t : search.reached_states()) {
    if (functor.map(t) > here) return Verdict{false, {{WitnessKind::kImprovingPath, *search.path_to(t)}}};
  }
  return Verdict{true, {}};
}

std::vector<PreferenceFunctor> all_functors(const Conflict& conflict) {
  std::vector<PreferenceFunctor> out;
  for (auto dm : conflict.dms()) out.push_back(build_preference_functor(conflict, dm));
  return out;
}

void check_functor_set(const Conflict& conflict, const std::vector<PreferenceFunctor>& functors) {
  if (functors.size() != conflict.dm_count()) {
    throw Error(ErrorCode::kInvalidArgument, "one preference functor per DM is required");
  }
  for (std::size_t k = 0; k < functors.size(); ++k) {
    if (functors[k].dm.index != k || functors[k].object_map.size() != conflict.state_count()) {
      throw Error(ErrorCode::kInvalidArgument, "functors must be total and listed in DM order");
    }
  }
}

}  // namespace

std::string_view to_string(StabilityConcept concept_id) {
  switch (concept_id) {
    case StabilityConcept::kNash: return "nash";
    case StabilityConcept::kGMR: return "gmr";
    case StabilityConcept::kSMR: return "smr";
    case StabilityConcept::kSEQ: return "seq";
    case StabilityConcept::kCNash: return "c-nash";
    case StabilityConcept::kCGMR: return "c-gmr";
    case StabilityConcept::kCSMR: return "c-smr";
    case StabilityConcept::kCSEQ: return "c-seq";
  }
  return "?";
}

std::optional<StabilityConcept> parse_concept(std::string_view name) {
  for (auto c : kAllConcepts) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kImprovingMove: return "improving-move";
    case WitnessKind::kSanctioned: return "sanctioned";
    case WitnessKind::kUnsanctioned: return "unsanctioned";
    case WitnessKind::kImprovingPath: return "improving-path";
    case WitnessKind::kIncomingPath: return "incoming-path";
    case WitnessKind::kNoIncomingPath: return "CSEQ_NO_INCOMING";
  }
  return "?";
}

Verdict nash_stable(const Conflict& conflict, OwnerId dm, StateId s) {
  Verdict verdict{true, {}};
  for (auto s1 : unilateral_improvements(conflict, dm, s)) {
    verdict.stable = false;
    verdict.witnesses.push_back({WitnessKind::kImprovingMove, {owned_move(conflict, dm, s, s1)}});
  }
  return verdict;
}

Verdict gmr_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule) {
  return sanction_check(conflict, dm, s, rule, StepCondition::kAny, Sanction::kAnyState);
}

Verdict smr_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule) {
  return sanction_check(conflict, dm, s, rule, StepCondition::kAny, Sanction::kNoEscape);
}

Verdict seq_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule) {
  return sanction_check(conflict, dm, s, rule, StepCondition::kStrictImproving, Sanction::kAnyState);
}

Verdict c_nash_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                      const AnalysisOptions& options) {
  conflict.require_dm(functor.dm);
  const int here = functor.map(s);
  for (const auto& m : conflict.moves_from(s)) {
    if (options.c_nash_mode == CNashMode::kOwnerRestricted && m.owner != functor.dm) continue;
    if (functor.map(m.to) > here) return Verdict{false, {{WitnessKind::kImprovingMove, {m}}}};
  }
  return Verdict{true, {}};
}

Verdict c_gmr_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                     const AnalysisOptions& options) {
  return path_check(conflict, functor, s, options, StepCondition::kWeakImproving);
}

Verdict c_smr_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                     const AnalysisOptions& options) {
  return path_check(conflict, functor, s, options, StepCondition::kStrictImproving);
}

Verdict c_seq_stable(const Conflict& conflict, const std::vector<PreferenceFunctor>& functors,
                     OwnerId dm, StateId s, const AnalysisOptions& options) {
  conflict.require_dm(dm);
  check_functor_set(conflict, functors);
  const Coalition everybody = Coalition::all_dms(conflict);
  const MoveSearch::LevelFn level = [&](OwnerId mover, StateId t) { return functors[mover.index].map(t); };
  Verdict verdict{true, {}};

  // Clause (a): some strictly improving sequence from another state ends at s.
  std::optional<Path> incoming;
  for (auto s0 : conflict.states()) {
    if (s0 == s) continue;
    const MoveSearch search(conflict, everybody, s0, options.rule, StepCondition::kStrictImproving, level);
    if (auto path = search.path_to(s)) {
      incoming = std::move(path);
      break;
    }
  }
  if (incoming) {
    verdict.witnesses.push_back({WitnessKind::kIncomingPath, *incoming});
  } else {
    verdict.stable = false;
    verdict.witnesses.push_back({WitnessKind::kNoIncomingPath, {}});
  }

  // Clause (b): no strictly improving sequence leaves s.
  const MoveSearch outgoing(conflict, everybody, s, options.rule, StepCondition::kStrictImproving, level);
  const auto exits = outgoing.reached_states();
  if (!exits.empty()) {
    verdict.stable = false;
    verdict.witnesses.push_back({WitnessKind::kImprovingPath, *outgoing.path_to(exits.front())});
  }
  return verdict;
}

Verdict evaluate(const Conflict& conflict, StabilityConcept concept_id, OwnerId dm, StateId s,
                 const AnalysisOptions& options) {
  switch (concept_id) {
    case StabilityConcept::kNash: return nash_stable(conflict, dm, s);
    case StabilityConcept::kGMR: return gmr_stable(conflict, dm, s, options.rule);
    case StabilityConcept::kSMR: return smr_stable(conflict, dm, s, options.rule);
    case StabilityConcept::kSEQ: return seq_stable(conflict, dm, s, options.rule);
    case StabilityConcept::kCNash:
      return c_nash_stable(conflict, build_preference_functor(conflict, dm), s, options);
    case StabilityConcept::kCGMR:
      return c_gmr_stable(conflict, build_preference_functor(conflict, dm), s, options);
    case StabilityConcept::kCSMR:
      return c_smr_stable(conflict, build_preference_functor(conflict, dm), s, options);
    case StabilityConcept::kCSEQ: return c_seq_stable(conflict, all_functors(conflict), dm, s, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown concept");
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> StabilityReport::concept_position(StabilityConcept concept_id) const {
  auto it = std::find(concepts.begin(), concepts.end(), concept_id);
  if (it == concepts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - concepts.begin());
}

const Verdict& StabilityReport::verdict(StabilityConcept concept_id, std::size_t state,
                                        std::size_t dm) const {
  const auto pos = concept_position(concept_id);
  if (!pos) throw Error(ErrorCode::kInvalidArgument, "concept not in report");
  return verdicts.at(*pos).at(state).at(dm);
}

const std::vector<std::string>& StabilityReport::equilibria_of(StabilityConcept concept_id) const {
  const auto pos = concept_position(concept_id);
  if (!pos) throw Error(ErrorCode::kInvalidArgument, "concept not in report");
  return equilibria.at(*pos);
}

bool StabilityReport::is_equilibrium(StabilityConcept concept_id, std::string_view state) const {
  const auto& eq = equilibria_of(concept_id);
  return std::find(eq.begin(), eq.end(), state) != eq.end();
}

void recompute_equilibria(StabilityReport& report) {
  report.equilibria.assign(report.concepts.size(), {});
  for (std::size_t c = 0; c < report.concepts.size(); ++c) {
    for (std::size_t s = 0; s < report.states.size(); ++s) {
      const auto& row = report.verdicts[c][s];
      if (std::all_of(row.begin(), row.end(), [](const Verdict& v) { return v.stable; })) {
        report.equilibria[c].push_back(report.states[s]);
      }
    }
  }
}

StabilityReport analyze(const Conflict& conflict, const AnalysisOptions& options) {
  if (options.concepts.empty()) throw Error(ErrorCode::kInvalidArgument, "no stability concept requested");
  if (!conflict.has_preferences()) {
    throw Error(ErrorCode::kMissingPreferences, "model '" + conflict.name() + "' declares no preferences");
  }
  if (conflict.dm_count() < 2 || conflict.state_count() < 2) {
    throw Error(ErrorCode::kModelTooSmall, "stability analysis needs at least two DMs and two states");
  }

  StabilityReport report;
  report.model_name = conflict.name();
  report.states = conflict.source().states;
  report.dms = conflict.source().dms;
  for (auto c : kAllConcepts) {
    if (std::find(options.concepts.begin(), options.concepts.end(), c) != options.concepts.end()) {
      report.concepts.push_back(c);
    }
  }
  report.options = options;
  report.options.concepts = report.concepts;

  const auto functors = all_functors(conflict);
  for (auto c : report.concepts) {
    auto& grid = report.verdicts.emplace_back();
    for (auto s : conflict.states()) {
      auto& row = grid.emplace_back();
      for (auto dm : conflict.dms()) {
        const auto& functor = functors[dm.index];
        switch (c) {
          case StabilityConcept::kCNash: row.push_back(c_nash_stable(conflict, functor, s, options)); break;
          case StabilityConcept::kCGMR: row.push_back(c_gmr_stable(conflict, functor, s, options)); break;
          case StabilityConcept::kCSMR: row.push_back(c_smr_stable(conflict, functor, s, options)); break;
          case StabilityConcept::kCSEQ: row.push_back(c_seq_stable(conflict, functors, dm, s, options)); break;
          default: row.push_back(evaluate(conflict, c, dm, s, options)); break;
        }
      }
    }
  }
  recompute_equilibria(report);
  return report;
}

// ---------------------------------------------------------------------------

LawReport check_equilibria_have_no_improving_move(const Conflict& conflict, const StabilityReport& report) {
  LawReport law{"prop2_equilibria_no_improving_move"};
  for (const auto& name : report.equilibria_of(StabilityConcept::kCNash)) {
    for (const auto& arc : conflict.source().arcs) {
      if (arc.from != name || arc.owner == kEnvName) continue;
      ++law.checked;
      const auto& order = conflict.source().preferences.at(arc.owner);
      if (*order.rank(arc.to) > *order.rank(arc.from) && law.passed()) {
        law.counterexample = Counterexample{{name, arc.to},
                                            arc.owner + " improves by leaving an equilibrium"};
      }
    }
  }
  return law;
}

LawReport check_common_top_state(const Conflict& conflict, const StabilityReport& report) {
  LawReport law{"prop3_common_top_state"};
  for (auto s : conflict.states()) {
    const auto dms = conflict.dms();
    const bool top_for_all = std::all_of(dms.begin(), dms.end(), [&](OwnerId dm) {
      return conflict.rank(dm, s) == conflict.max_rank(dm);
    });
    if (!top_for_all) continue;
    const auto& name = conflict.state_name(s);
    for (auto c : report.concepts) {
      ++law.checked;
      if (report.is_equilibrium(c, name)) continue;
      if (c == StabilityConcept::kCSEQ) {
        // Clause (a) is the only way a common top state can fail C-SEQ.
        bool only_incoming = true;
        for (std::size_t dm = 0; dm < report.dms.size(); ++dm) {
          for (const auto& w : report.verdict(c, s.index, dm).witnesses) {
            if (w.kind == WitnessKind::kImprovingPath) only_incoming = false;
          }
        }
        if (only_incoming) {
          law.notes.push_back(name + ": c-seq fails only because no strictly improving sequence enters it");
          continue;
        }
      }
      if (law.passed()) {
        law.counterexample = Counterexample{{name}, std::string("common top state is not a ") +
                                                        std::string(to_string(c)) + " equilibrium"};
      }
    }
  }
  return law;
}

std::vector<LawReport> check_propositions(const Conflict& conflict, const AnalysisOptions& options) {
  LawReport prop1{"prop1_strict_asymmetry"};
  const auto cat = build_reachability_category(conflict, Scope::all_arcs(conflict, options.rule));
  for (auto dm : conflict.dms()) {
    for (auto& law : check_c_preference_properties(conflict, dm, cat)) {
      if (law.law != "c_strict_asymmetric" && law.law != "c_opposite_arrows_asymmetric") continue;
      prop1.checked += law.checked;
      if (!law.passed() && prop1.passed()) prop1.counterexample = law.counterexample;
    }
  }

  AnalysisOptions all = options;
  all.concepts.assign(kAllConcepts.begin(), kAllConcepts.end());
  const auto report = analyze(conflict, all);
  return {prop1, check_equilibria_have_no_improving_move(conflict, report),
          check_common_top_state(conflict, report)};
}

}  // namespace cgmcr

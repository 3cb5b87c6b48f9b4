#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgmcr/category.hpp"
#include "cgmcr/model.hpp"

namespace cgmcr {

enum class StabilityConcept { kNash, kGMR, kSMR, kSEQ, kCNash, kCGMR, kCSMR, kCSEQ };

inline constexpr std::array<StabilityConcept, 8> kAllConcepts = {
    StabilityConcept::kNash,  StabilityConcept::kGMR,  StabilityConcept::kSMR,
    StabilityConcept::kSEQ,   StabilityConcept::kCNash, StabilityConcept::kCGMR,
    StabilityConcept::kCSMR,  StabilityConcept::kCSEQ};

std::string_view to_string(StabilityConcept concept_id);       // "nash", "c-gmr", ...
std::optional<StabilityConcept> parse_concept(std::string_view name);

// Which transitions C-Nash inspects: the focal DM's own arcs, or every arc
// leaving the state regardless of owner.
enum class CNashMode { kOwnerRestricted, kLiteralAnyTransition };
// Who may move in C-GMR / C-SMR sequences.
enum class CPathMovers { kExcludeFocal, kAllDMs };

struct AnalysisOptions {
  std::vector<StabilityConcept> concepts{kAllConcepts.begin(), kAllConcepts.end()};
  LegalRule rule = LegalRule::kNoConsecutiveRepeat;
  CNashMode c_nash_mode = CNashMode::kOwnerRestricted;
  CPathMovers c_path_movers = CPathMovers::kExcludeFocal;
};

enum class WitnessKind {
  kImprovingMove,    // focal DM's own improving arc (Nash, C-Nash failure)
  kSanctioned,       // improving arc followed by a sanctioning sequence
  kUnsanctioned,     // improving arc no sequence can sanction
  kImprovingPath,    // counterexample sequence (C-GMR, C-SMR, C-SEQ outgoing)
  kIncomingPath,     // C-SEQ: strictly improving sequence into the state
  kNoIncomingPath,   // C-SEQ: no such sequence exists
};

std::string_view to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind;
  Path path;
};

struct Verdict {
  bool stable = false;
  std::vector<Witness> witnesses;
};

// Classical concepts, focal DM `dm` at state `s`.
Verdict nash_stable(const Conflict& conflict, OwnerId dm, StateId s);
Verdict gmr_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule);
Verdict smr_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule);
Verdict seq_stable(const Conflict& conflict, OwnerId dm, StateId s, LegalRule rule);

// Functor-based concepts. `functor.dm` is the focal DM.
Verdict c_nash_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                      const AnalysisOptions& options);
Verdict c_gmr_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                     const AnalysisOptions& options);
Verdict c_smr_stable(const Conflict& conflict, const PreferenceFunctor& functor, StateId s,
                     const AnalysisOptions& options);
// Needs every DM's functor: steps are judged by their movers.
Verdict c_seq_stable(const Conflict& conflict, const std::vector<PreferenceFunctor>& functors,
                     OwnerId dm, StateId s, const AnalysisOptions& options);

Verdict evaluate(const Conflict& conflict, StabilityConcept concept_id, OwnerId dm, StateId s,
                 const AnalysisOptions& options);

struct StabilityReport {
  std::string model_name;
  std::vector<std::string> states;
  std::vector<std::string> dms;
  std::vector<StabilityConcept> concepts;
  AnalysisOptions options;
  // [concept position][state][dm]
  std::vector<std::vector<std::vector<Verdict>>> verdicts;
  // [concept position] -> states stable for every DM, declaration order
  std::vector<std::vector<std::string>> equilibria;

  std::optional<std::size_t> concept_position(StabilityConcept concept_id) const;
  const Verdict& verdict(StabilityConcept concept_id, std::size_t state, std::size_t dm) const;
  const std::vector<std::string>& equilibria_of(StabilityConcept concept_id) const;
  bool is_equilibrium(StabilityConcept concept_id, std::string_view state) const;
};

// Throws InvalidModelError via Conflict construction, Error(kMissingPreferences)
// when the model ranks nothing, Error(kModelTooSmall) below two DMs or two
// states, Error(kInvalidArgument) for an empty concept list.
StabilityReport analyze(const Conflict& conflict, const AnalysisOptions& options = {});

// Recomputes equilibria from the verdict grid.
void recompute_equilibria(StabilityReport& report);

// prop1: strict preference between opposite transitions is asymmetric.
// prop2: C-Nash equilibria admit no improving owned arc, rederived from arcs.
// prop3: a state topping every DM's order is an equilibrium under each
//        concept; a C-SEQ miss caused only by the missing incoming sequence
//        is reported as a note.
std::vector<LawReport> check_propositions(const Conflict& conflict, const AnalysisOptions& options = {});
LawReport check_equilibria_have_no_improving_move(const Conflict& conflict, const StabilityReport& report);
LawReport check_common_top_state(const Conflict& conflict, const StabilityReport& report);

}  // namespace cgmcr

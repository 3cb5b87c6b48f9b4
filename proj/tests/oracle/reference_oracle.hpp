#pragma once

// Deliberately naive re-implementation of the reachability sets and every
// stability concept. Works on the source-level model by name and shares no
// search code with the library, so agreement between the two is evidence.

#include <set>
#include <string>
#include <vector>

#include "cgmcr/model.hpp"
#include "cgmcr/reachability.hpp"
#include "cgmcr/stability.hpp"

namespace cgmcr::oracle {

std::set<std::string> oracle_coalition_sets(const ConflictModel& model,
                                            const std::vector<std::string>& coalition,
                                            const std::string& start, LegalRule rule,
                                            StepCondition condition);

bool oracle_stability(const ConflictModel& model, StabilityConcept concept_id, const std::string& dm,
                      const std::string& state, const AnalysisOptions& options);

}  // namespace cgmcr::oracle

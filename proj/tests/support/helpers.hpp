#pragma once

#include <string>
#include <vector>

#include "cgmcr/fixtures.hpp"
#include "cgmcr/model.hpp"

namespace cgmcr::testing {

inline std::vector<std::string> names(const Conflict& conflict, const StateSet& set) {
  std::vector<std::string> out;
  for (auto s : set) out.push_back(conflict.state_name(s));
  return out;
}

inline Conflict fixture(const char* name) { return Conflict(load_fixture(name)); }

inline std::vector<std::string> fixtures_with_preferences() {
  return {"prisoners_dilemma", "elmira", "trade_base"};
}

using Names = std::vector<std::string>;

}  // namespace cgmcr::testing

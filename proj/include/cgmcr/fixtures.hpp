#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgmcr/model.hpp"

namespace cgmcr {

// prisoners_dilemma, elmira, trade_base, trade_intricate
std::vector<std::string> fixture_names();

// Embedded .cgm text; throws Error(kUnknownFixture).
std::string_view fixture_source(std::string_view name);

ConflictModel load_fixture(std::string_view name);

}  // namespace cgmcr

#include "cgmcr/fixtures.hpp"

#include <algorithm>
#include <array>

#include "cgmcr/io.hpp"
#include "fixture_data.hpp"

namespace cgmcr {
namespace {

struct Entry {
  std::string_view name;
  std::string_view source;
};

constexpr std::array<Entry, 4> kFixtures = {{
    {"prisoners_dilemma", fixture_data::kPrisonersDilemma},
    {"elmira", fixture_data::kElmira},
    {"trade_base", fixture_data::kTradeBase},
    {"trade_intricate", fixture_data::kTradeIntricate},
}};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.emplace_back(f.name);
  return out;
}

std::string_view fixture_source(std::string_view name) {
  auto it = std::find_if(kFixtures.begin(), kFixtures.end(), [&](const Entry& e) { return e.name == name; });
  if (it == kFixtures.end()) throw Error(ErrorCode::kUnknownFixture, "no fixture named '" + std::string(name) + "'");
  return it->source;
}

ConflictModel load_fixture(std::string_view name) { return parse_model(fixture_source(name)); }

}  // namespace cgmcr

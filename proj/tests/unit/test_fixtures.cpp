#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cgmcr/fixtures.hpp"
#include "cgmcr/stability.hpp"
#include "support/helpers.hpp"

using namespace cgmcr;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t count_owned(const ConflictModel& m, const std::string& owner) {
  return static_cast<std::size_t>(
      std::count_if(m.arcs.begin(), m.arcs.end(), [&](const Arc& a) { return a.owner == owner; }));
}

}  // namespace

TEST_CASE("fixture names") {
  CHECK(fixture_names() ==
        std::vector<std::string>{"prisoners_dilemma", "elmira", "trade_base", "trade_intricate"});
  try {
    (void)fixture_source("chicken");
    FAIL("expected UNKNOWN_FIXTURE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownFixture);
  }
}

TEST_CASE("fixture files byte-match the embedded copies") {
  for (const auto& name : fixture_names()) {
    INFO(name);
    CHECK(read_file(std::string(CGMCR_FIXTURE_DIR) + "/" + name + ".cgm") == fixture_source(name));
  }
}

TEST_CASE("every fixture validates") {
  for (const auto& name : fixture_names()) {
    const auto report = validate_model(load_fixture(name));
    INFO(name);
    CHECK(report.valid());
    CHECK(report.has_warning("PREFERENCES_ABSENT") == (name == "trade_intricate"));
  }
}

TEST_CASE("prisoners dilemma contents") {
  const auto m = load_fixture("prisoners_dilemma");
  CHECK(m.states == std::vector<std::string>{"s1", "s2", "s3", "s4"});
  CHECK(m.arcs == std::vector<Arc>{{"B", "s1", "s2"}, {"A", "s1", "s3"}, {"A", "s2", "s4"}, {"B", "s3", "s4"}});
  CHECK(m.preferences.at("A") == PreferenceOrder{{{"s3"}, {"s1"}, {"s4"}, {"s2"}}});
  CHECK(m.preferences.at("B") == PreferenceOrder{{{"s2"}, {"s1"}, {"s4"}, {"s3"}}});
  CHECK(fixture_source("prisoners_dilemma").find("assum") != std::string_view::npos);
}

TEST_CASE("elmira contents") {
  const auto m = load_fixture("elmira");
  CHECK(m.arcs.size() == 24);
  CHECK(count_owned(m, "M") == 4);
  CHECK(count_owned(m, "U") == 12);
  CHECK(count_owned(m, "L") == 8);
  CHECK(m.preferences.at("M").classes.front() == std::vector<std::string>{"s7"});
  CHECK(m.preferences.at("M").classes.back() == std::vector<std::string>{"s9"});
  const auto c = cgmcr::testing::fixture("elmira");
  CHECK(c.moves_from(c.state("s9")).empty());
}

TEST_CASE("trade base arcs are all reversible by their owner") {
  const auto m = load_fixture("trade_base");
  CHECK(m.states.size() == 6);
  CHECK(m.arcs.size() == 14);
  for (const auto& a : m.arcs) {
    CHECK(std::find(m.arcs.begin(), m.arcs.end(), Arc{a.owner, a.to, a.from}) != m.arcs.end());
  }
  CHECK(m.preferences.at("A") == PreferenceOrder{{{"s3"}, {"s4"}, {"s1"}, {"s2"}, {"s5"}, {"s6"}}});
}

TEST_CASE("trade intricate has a regulation arc and no preferences") {
  const auto m = load_fixture("trade_intricate");
  CHECK(m.states.size() == 5);
  CHECK(m.has_env);
  CHECK(m.preferences.empty());
  CHECK(count_owned(m, "R") == 4);
  CHECK(std::find(m.arcs.begin(), m.arcs.end(), Arc{"env", "s5", "s1"}) != m.arcs.end());
  try {
    (void)analyze(Conflict(m));
    FAIL("expected MISSING_PREFERENCES");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingPreferences);
  }
}

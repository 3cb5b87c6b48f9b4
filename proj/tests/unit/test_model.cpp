#include <doctest.h>

#include "cgmcr/io.hpp"
#include "cgmcr/model.hpp"
#include "support/helpers.hpp"

using namespace cgmcr;
using cgmcr::testing::Names;

namespace {

ConflictModel two_by_two() {
  ConflictModel m;
  m.name = "t";
  m.dms = {"A", "B"};
  m.states = {"s1", "s2"};
  m.arcs = {{"A", "s1", "s2"}};
  m.preferences["A"] = {{{"s2"}, {"s1"}}};
  m.preferences["B"] = {{{"s1", "s2"}}};
  return m;
}

}  // namespace

TEST_CASE("preference ranks follow class order with shared ties") {
  PreferenceOrder p{{{"s3"}, {"s1", "s2"}, {"s4"}}};
  CHECK(p.rank("s3") == 2);
  CHECK(p.rank("s1") == 1);
  CHECK(p.rank("s2") == 1);
  CHECK(p.rank("s4") == 0);
  CHECK_FALSE(p.rank("s9").has_value());
}

TEST_CASE("a minimal model validates cleanly") {
  const auto report = validate_model(two_by_two());
  CHECK(report.valid());
  CHECK(report.warnings.empty());
}

TEST_CASE("validation error codes") {
  auto expect_error = [](ConflictModel m, const char* code) {
    const auto report = validate_model(m);
    INFO(code);
    CHECK(report.has_error(code));
    CHECK_THROWS_AS(Conflict{m}, InvalidModelError);
  };

  auto m = two_by_two();
  m.dms.push_back("A");
  expect_error(m, "DUPLICATE_DM");

  m = two_by_two();
  m.states.push_back("s1");
  expect_error(m, "DUPLICATE_STATE");

  m = two_by_two();
  m.dms.push_back("env");
  expect_error(m, "RESERVED_DM");

  m = two_by_two();
  m.dms.push_back("bad-name");
  expect_error(m, "BAD_IDENTIFIER");

  m = two_by_two();
  m.arcs.push_back({"Z", "s1", "s2"});
  expect_error(m, "UNKNOWN_OWNER");

  m = two_by_two();
  m.arcs.push_back({"env", "s1", "s2"});
  expect_error(m, "UNKNOWN_OWNER");

  m = two_by_two();
  m.arcs.push_back({"B", "s1", "s7"});
  expect_error(m, "UNKNOWN_STATE");

  m = two_by_two();
  m.arcs.push_back({"B", "s1", "s1"});
  expect_error(m, "LOOP_ARC");

  m = two_by_two();
  m.arcs.push_back({"A", "s1", "s2"});
  expect_error(m, "DUPLICATE_ARC");

  m = two_by_two();
  m.preferences["Q"] = {{{"s1"}, {"s2"}}};
  expect_error(m, "PREF_UNKNOWN_DM");

  m = two_by_two();
  m.preferences["A"] = {{{"s1"}}};
  expect_error(m, "PREF_NOT_TOTAL");

  m = two_by_two();
  m.preferences["A"] = {{{"s1"}, {"s1", "s2"}}};
  expect_error(m, "PREF_DUPLICATE_STATE");

  m = two_by_two();
  m.preferences["A"] = {{{"s1", "s2"}, {"s9"}}};
  expect_error(m, "PREF_UNKNOWN_STATE");

  m = two_by_two();
  m.preferences["A"] = {{{"s1", "s2"}, {}}};
  expect_error(m, "PREF_EMPTY_CLASS");

  m = two_by_two();
  m.preferences.erase("B");
  expect_error(m, "PREF_MISSING");
}

TEST_CASE("small and preference-free models only warn") {
  ConflictModel m;
  m.dms = {"A"};
  m.states = {"s1"};
  auto report = validate_model(m);
  CHECK(report.valid());
  CHECK(report.has_warning("TOO_FEW_DMS"));
  CHECK(report.has_warning("TOO_FEW_STATES"));
  CHECK(report.has_warning("PREFERENCES_ABSENT"));

  const Conflict c(m);
  CHECK_FALSE(c.has_preferences());
  CHECK_THROWS_AS(c.rank(c.dm("A"), c.state("s1")), Error);
}

TEST_CASE("canonicalize orders arcs by owner declaration, env last") {
  ConflictModel m = two_by_two();
  m.has_env = true;
  m.arcs = {{"env", "s1", "s2"}, {"B", "s2", "s1"}, {"A", "s2", "s1"}, {"A", "s1", "s2"}};
  const auto canon = canonicalize(m);
  REQUIRE(canon.arcs.size() == 4);
  CHECK(canon.arcs[0] == Arc{"A", "s1", "s2"});
  CHECK(canon.arcs[1] == Arc{"A", "s2", "s1"});
  CHECK(canon.arcs[2] == Arc{"B", "s2", "s1"});
  CHECK(canon.arcs[3] == Arc{"env", "s1", "s2"});
}

TEST_CASE("conflict indexes moves by (from, to, owner)") {
  const auto pd = cgmcr::testing::fixture("prisoners_dilemma");
  std::vector<std::string> text;
  for (const auto& m : pd.moves()) text.push_back(to_string(pd, m));
  CHECK(text == Names{"B:s1->s2", "A:s1->s3", "A:s2->s4", "B:s3->s4"});

  const auto from_s1 = pd.moves_from(pd.state("s1"));
  REQUIRE(from_s1.size() == 2);
  CHECK(from_s1[0].to == pd.state("s2"));
  CHECK(pd.moves_from(pd.state("s4")).empty());
}

TEST_CASE("lookups and ranks") {
  const auto pd = cgmcr::testing::fixture("prisoners_dilemma");
  CHECK(pd.dm_count() == 2);
  CHECK(pd.state_count() == 4);
  CHECK(pd.dm_name(pd.dm("B")) == "B");
  CHECK(pd.rank(pd.dm("A"), pd.state("s3")) == 3);
  CHECK(pd.rank(pd.dm("A"), pd.state("s2")) == 0);
  CHECK(pd.max_rank(pd.dm("B")) == 3);

  const auto check_code = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  check_code([&] { (void)pd.dm("Z"); }, ErrorCode::kUnknownDm);
  check_code([&] { (void)pd.dm("env"); }, ErrorCode::kUnknownDm);
  check_code([&] { (void)pd.state("s9"); }, ErrorCode::kUnknownState);
  check_code([&] { pd.require_state(StateId{17}); }, ErrorCode::kUnknownState);

  const auto intricate = cgmcr::testing::fixture("trade_intricate");
  CHECK(intricate.owner("env").is_env());
  CHECK(intricate.dm_name(kEnvOwner) == "env");
}

TEST_CASE("coalitions keep env out unless added") {
  const auto c = cgmcr::testing::fixture("trade_intricate");
  const auto all = Coalition::all_dms(c);
  CHECK_FALSE(all.contains(kEnvOwner));
  CHECK(all.members().size() == 3);
  CHECK(Coalition::everyone(c).contains(kEnvOwner));
  const auto others = Coalition::all_except(c, c.dm("A"));
  CHECK_FALSE(others.contains(c.dm("A")));
  CHECK(others.contains(c.dm("R")));
  CHECK(Coalition(c).empty());
}

TEST_CASE("error codes have stable names") {
  CHECK(to_string(ErrorCode::kUnknownDm) == "UNKNOWN_DM");
  CHECK(to_string(ErrorCode::kMissingPreferences) == "MISSING_PREFERENCES");
  CHECK(to_string(LegalRule::kFree) == "free");
  CHECK(to_string(LegalRule::kNoConsecutiveRepeat) == "no-repeat");
}

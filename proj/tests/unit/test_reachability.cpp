#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cgmcr/reachability.hpp"
#include "support/helpers.hpp"
#include "support/random_models.hpp"

using namespace cgmcr;
using cgmcr::testing::fixture;
using cgmcr::testing::Names;
using cgmcr::testing::names;

namespace {

Coalition coalition(const Conflict& c, std::initializer_list<const char*> members) {
  std::vector<OwnerId> ids;
  for (const char* m : members) ids.push_back(c.owner(m));
  return Coalition::of(c, ids);
}

bool subset(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("unilateral reachable lists") {
  const auto elmira = fixture("elmira");
  const auto pd = fixture("prisoners_dilemma");
  CHECK(names(elmira, reachable_list(elmira, elmira.dm("M"), elmira.state("s1"))) == Names{"s2"});
  CHECK(reachable_list(elmira, elmira.dm("U"), elmira.state("s9")).empty());
  CHECK(names(pd, reachable_list(pd, pd.dm("A"), pd.state("s1"))) == Names{"s3"});
}

TEST_CASE("unilateral improvements") {
  const auto elmira = fixture("elmira");
  const auto pd = fixture("prisoners_dilemma");
  CHECK(unilateral_improvements(elmira, elmira.dm("U"), elmira.state("s1")).empty());
  CHECK(names(elmira, unilateral_improvements(elmira, elmira.dm("L"), elmira.state("s1"))) == Names{"s5"});
  CHECK(unilateral_improvements(pd, pd.dm("A"), pd.state("s4")).empty());
}

TEST_CASE("preference-defined sets") {
  const auto elmira = fixture("elmira");
  const auto trade = fixture("trade_base");
  CHECK(phi_plus(elmira, elmira.dm("M"), elmira.state("s7")).empty());
  CHECK(names(elmira, phi_plus(elmira, elmira.dm("M"), elmira.state("s2"))) ==
        Names{"s1", "s3", "s4", "s5", "s7", "s8"});
  CHECK(names(trade, phi_plus(trade, trade.dm("A"), trade.state("s5"))) == Names{"s1", "s2", "s3", "s4"});
  CHECK(phi_simeq(elmira, elmira.dm("U"), elmira.state("s1")).size() == 9);
  CHECK(names(elmira, phi_simeq(elmira, elmira.dm("M"), elmira.state("s9"))) == Names{"s9"});
}

TEST_CASE("coalition reachability examples") {
  const auto elmira = fixture("elmira");
  const auto pd = fixture("prisoners_dilemma");
  const auto s1 = elmira.state("s1");
  CHECK(names(elmira, coalition_reachable(elmira, coalition(elmira, {"U", "L"}), s1,
                                          LegalRule::kNoConsecutiveRepeat)) == Names{"s3", "s5", "s7", "s9"});
  CHECK(names(elmira, coalition_reachable(elmira, coalition(elmira, {"M"}), s1,
                                          LegalRule::kNoConsecutiveRepeat)) == Names{"s2"});
  for (auto rule : {LegalRule::kNoConsecutiveRepeat, LegalRule::kFree}) {
    CHECK(coalition_reachable(elmira, Coalition(elmira), s1, rule).empty());
    CHECK(coalition_improvements(elmira, coalition(elmira, {"U"}), s1, rule).empty());
    CHECK(names(pd, coalition_improvements(pd, coalition(pd, {"B"}), pd.state("s1"), rule)) == Names{"s2"});
  }
  CHECK(names(elmira, coalition_improvements(elmira, coalition(elmira, {"U", "L"}), elmira.state("s2"),
                                             LegalRule::kNoConsecutiveRepeat)) ==
        Names{"s4", "s6", "s8", "s9"});
}

TEST_CASE("no-repeat rule blocks a DM from undoing its own move") {
  const auto trade = fixture("trade_base");
  const auto s1 = trade.state("s1");
  const auto a = coalition(trade, {"A"});
  CHECK(names(trade, coalition_reachable(trade, a, s1, LegalRule::kNoConsecutiveRepeat)) == Names{"s5"});
  CHECK(names(trade, coalition_reachable(trade, a, s1, LegalRule::kFree)) == Names{"s1", "s5"});
}

TEST_CASE("env arcs move only when env is in the coalition") {
  const auto c = fixture("trade_intricate");
  const auto s5 = c.state("s5");
  CHECK(coalition_reachable(c, Coalition::all_dms(c), s5, LegalRule::kFree).empty());
  const auto with_env = coalition_reachable(c, Coalition::everyone(c), s5, LegalRule::kNoConsecutiveRepeat);
  CHECK(names(c, with_env) == Names{"s1", "s2", "s3", "s4", "s5"});
}

TEST_CASE("search witnesses are shortest and chained") {
  const auto pd = fixture("prisoners_dilemma");
  MoveSearch search(pd, Coalition::all_dms(pd), pd.state("s1"), LegalRule::kNoConsecutiveRepeat);
  const auto path = search.path_to(pd.state("s4"));
  REQUIRE(path.has_value());
  REQUIRE(path->size() == 2);
  CHECK(to_string(pd, (*path)[0]) == "B:s1->s2");
  CHECK(to_string(pd, (*path)[1]) == "A:s2->s4");
  CHECK_FALSE(search.reached(pd.state("s1")));
  CHECK_FALSE(search.path_to(pd.state("s1")).has_value());
}

TEST_CASE("set properties on random models") {
  std::mt19937_64 rng(7);
  cgmcr::testing::RandomModelSpec spec;
  spec.allow_ties = true;
  spec.env_probability = 0.3;
  for (int trial = 0; trial < 150; ++trial) {
    const Conflict c(cgmcr::testing::random_model(rng, spec));
    const auto all = c.states();
    for (auto dm : c.dms()) {
      for (auto s : all) {
        const auto r = reachable_list(c, dm, s);
        const auto rp = unilateral_improvements(c, dm, s);
        const auto up = phi_plus(c, dm, s);
        const auto eq = phi_simeq(c, dm, s);
        CHECK(subset(rp, r));
        CHECK(subset(rp, up));
        CHECK(std::binary_search(eq.begin(), eq.end(), s));
        StateSet joined;
        std::set_union(up.begin(), up.end(), eq.begin(), eq.end(), std::back_inserter(joined));
        CHECK(joined == all);
        StateSet common;
        std::set_intersection(up.begin(), up.end(), eq.begin(), eq.end(), std::back_inserter(common));
        CHECK(common.empty());

        // Singleton coalition under Free: transitive closure of the DM's arcs.
        std::set<std::size_t> closure;
        std::vector<StateId> frontier{s};
        while (!frontier.empty()) {
          const auto x = frontier.back();
          frontier.pop_back();
          for (auto y : reachable_list(c, dm, x)) {
            if (closure.insert(y.index).second) frontier.push_back(y);
          }
        }
        StateSet expected;
        for (auto i : closure) expected.push_back(StateId{i});
        CHECK(coalition_reachable(c, Coalition::of(c, {dm}), s, LegalRule::kFree) == expected);
      }

      for (auto s : all) {
        for (auto rule : {LegalRule::kNoConsecutiveRepeat, LegalRule::kFree}) {
          const auto small = Coalition::all_except(c, dm);
          const auto large = Coalition::all_dms(c);
          const auto small_set = coalition_reachable(c, small, s, rule);
          const auto large_set = coalition_reachable(c, large, s, rule);
          CHECK(subset(small_set, large_set));
          CHECK(subset(coalition_improvements(c, large, s, rule), large_set));
        }
      }
    }
  }
}

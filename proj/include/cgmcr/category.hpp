#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgmcr/model.hpp"
#include "cgmcr/reachability.hpp"

namespace cgmcr {

// ---------------------------------------------------------------------------
// Thin reachability category of a conflict.
//
// Objects are the states. hom(a, b) holds exactly one arrow when a == b (the
// identity) or when a legal nonempty move sequence leads from a to b under
// the category's scope; the arrow carries one shortest sequence as witness.
// Distinct sequences between the same pair of states are identified, which
// keeps the category finite when the move graph has cycles.
// ---------------------------------------------------------------------------

enum class MorphismKind { kIdentity, kGenerated, kComposite };

struct Morphism {
  MorphismKind kind = MorphismKind::kIdentity;
  StateId dom;
  StateId cod;
  Path witness;  // empty for identities, one arc for generated arrows

  static Morphism identity(StateId s);
  static Morphism from_path(Path path);  // path must be nonempty and chained

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

// Which arcs may appear in a morphism witness.
struct Scope {
  Coalition movers;
  LegalRule rule = LegalRule::kNoConsecutiveRepeat;

  // Every DM plus `env` when declared.
  static Scope all_arcs(const Conflict& conflict,
                        LegalRule rule = LegalRule::kNoConsecutiveRepeat);
};

class FiniteCategory {
 public:
  FiniteCategory(std::size_t object_count, Scope scope);

  std::size_t object_count() const noexcept { return object_count_; }
  const Scope& scope() const noexcept { return scope_; }

  // nullptr when hom(a, b) is empty.
  const Morphism* hom(StateId a, StateId b) const;
  bool has_hom(StateId a, StateId b) const { return hom(a, b) != nullptr; }
  const Morphism& identity(StateId s) const;

  // Every arrow, ordered by (dom, cod).
  std::vector<Morphism> morphisms() const;
  bool contains(const Morphism& f) const;

  void set_hom(Morphism f);
  // Copy with hom(a, b) emptied; used to inspect law failures.
  FiniteCategory without_hom(StateId a, StateId b) const;

 private:
  std::size_t object_count_;
  Scope scope_;
  std::vector<std::optional<Morphism>> hom_;  // row-major [dom][cod]
};

// Throws Error(kUnknownDm) when the scope names an owner the model lacks.
FiniteCategory build_reachability_category(const Conflict& conflict, const Scope& scope);

// g after f. Throws kNotComposable when cod(f) != dom(g), kNotInCategory when
// either arrow is foreign to `cat`, kCompositeMissing when hom(dom f, cod g)
// is empty. The result is the canonical arrow stored in `cat`.
Morphism compose(const FiniteCategory& cat, const Morphism& f, const Morphism& g);

struct Counterexample {
  std::vector<std::string> objects;
  std::string detail;
};

struct LawReport {
  LawReport() = default;
  explicit LawReport(std::string name) : law(std::move(name)) {}

  std::string law;
  std::size_t checked = 0;  // instances enumerated
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

bool all_passed(const std::vector<LawReport>& reports);

// identity, left_unit, right_unit, closure, associativity; exhaustive over
// all arrows, composable pairs and composable triples.
std::vector<LawReport> check_category_laws(const Conflict& conflict, const FiniteCategory& cat);

// Enumerates every legal nonempty arc sequence from `from` to `to` of length
// at most max_len, in lexicographic order of (from, to, owner) per arc.
std::vector<Path> enumerate_paths(const Conflict& conflict, StateId from, StateId to,
                                  std::size_t max_len, const Scope& scope);

// ---------------------------------------------------------------------------
// Preference functors
// ---------------------------------------------------------------------------

// Arrow of the codiscrete category over rank levels.
struct RankArrow {
  int from = 0;
  int to = 0;
  friend bool operator==(const RankArrow&, const RankArrow&) = default;
};

struct PreferenceFunctor {
  OwnerId dm;
  std::vector<int> object_map;  // indexed by state

  int map(StateId s) const { return object_map.at(s.index); }
  RankArrow map(const Morphism& f) const { return {map(f.dom), map(f.cod)}; }
};

PreferenceFunctor build_preference_functor(const Conflict& conflict, OwnerId dm);

// functor_identity, functor_composition, order_consistency.
std::vector<LawReport> check_functor_laws(const Conflict& conflict, const PreferenceFunctor& functor,
                                          const FiniteCategory& cat);

enum class CPreference { kStrictlyBetter, kIndifferent, kStrictlyWorse };

// Compares the functor's levels at the codomains of f and g.
CPreference c_preference(const PreferenceFunctor& functor, const Morphism& f, const Morphism& g);

using CPreferenceRelation = std::function<CPreference(const Morphism&, const Morphism&)>;

// Checks over every ordered pair of arrows of `cat`: indifference reflexive
// and symmetric, strict preference asymmetric, strong completeness, and no
// pair of opposite arrows f: a->b, g: b->a with each strictly preferred to
// the other.
std::vector<LawReport> check_c_preference_properties(const Conflict& conflict, OwnerId dm,
                                                     const FiniteCategory& cat);
std::vector<LawReport> check_c_preference_properties(const Conflict& conflict,
                                                     const FiniteCategory& cat,
                                                     const CPreferenceRelation& relation);

std::string to_string(MorphismKind kind);
std::string to_string(CPreference verdict);
std::string describe(const Conflict& conflict, const Morphism& f);  // "s1 -> s4 [B:s1->s2 A:s2->s4]"

}  // namespace cgmcr

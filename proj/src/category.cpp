#include "cgmcr/category.hpp"

#include <sstream>
#include <utility>

namespace cgmcr {
namespace {

std::vector<std::string> names(const Conflict& conflict, std::initializer_list<StateId> states) {
  std::vector<std::string> out;
  for (auto s : states) out.push_back(conflict.state_name(s));
  return out;
}

void check_scope(const Conflict& conflict, const Scope& scope) {
  for (auto owner : scope.movers.members()) {
    if (owner.is_env()) {
      if (!conflict.has_env()) throw Error(ErrorCode::kUnknownDm, "scope names 'env' but the model declares none");
    } else {
      conflict.require_dm(owner);
    }
  }
}

std::size_t owner_slot(const Conflict& conflict, OwnerId o) {
  return o.is_env() ? conflict.dm_count() : o.index;
}

}  // namespace

Morphism Morphism::identity(StateId s) { return Morphism{MorphismKind::kIdentity, s, s, {}}; }

Morphism Morphism::from_path(Path path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "a non-identity morphism needs a nonempty witness");
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k - 1].to != path[k].from) {
      throw Error(ErrorCode::kInvalidArgument, "witness arcs do not chain");
    }
  }
  const auto kind = path.size() == 1 ? MorphismKind::kGenerated : MorphismKind::kComposite;
  const StateId dom = path.front().from;
  const StateId cod = path.back().to;
  return Morphism{kind, dom, cod, std::move(path)};
}

Scope Scope::all_arcs(const Conflict& conflict, LegalRule rule) {
  return Scope{Coalition::everyone(conflict), rule};
}

// ---------------------------------------------------------------------------

FiniteCategory::FiniteCategory(std::size_t object_count, Scope scope)
    : object_count_(object_count),
      scope_(std::move(scope)),
      hom_(object_count * object_count) {}

const Morphism* FiniteCategory::hom(StateId a, StateId b) const {
  if (a.index >= object_count_ || b.index >= object_count_) return nullptr;
  const auto& slot = hom_[a.index * object_count_ + b.index];
  return slot ? &*slot : nullptr;
}

const Morphism& FiniteCategory::identity(StateId s) const {
  const Morphism* id = hom(s, s);
  if (id == nullptr) throw Error(ErrorCode::kNotInCategory, "object has no identity arrow");
  return *id;
}

std::vector<Morphism> FiniteCategory::morphisms() const {
  std::vector<Morphism> out;
  for (const auto& slot : hom_) {
    if (slot) out.push_back(*slot);
  }
  return out;
}

bool FiniteCategory::contains(const Morphism& f) const { return has_hom(f.dom, f.cod); }

void FiniteCategory::set_hom(Morphism f) {
  if (f.dom.index >= object_count_ || f.cod.index >= object_count_) {
    throw Error(ErrorCode::kUnknownState, "arrow endpoint outside the category");
  }
  hom_[f.dom.index * object_count_ + f.cod.index] = std::move(f);
}

FiniteCategory FiniteCategory::without_hom(StateId a, StateId b) const {
  FiniteCategory copy = *this;
  if (a.index < object_count_ && b.index < object_count_) {
    copy.hom_[a.index * object_count_ + b.index].reset();
  }
  return copy;
}

FiniteCategory build_reachability_category(const Conflict& conflict, const Scope& scope) {
  check_scope(conflict, scope);
  FiniteCategory cat(conflict.state_count(), scope);
  for (auto a : conflict.states()) {
    cat.set_hom(Morphism::identity(a));
    const MoveSearch search(conflict, scope.movers, a, scope.rule);
    for (auto b : search.reached_states()) {
      if (b != a) cat.set_hom(Morphism::from_path(*search.path_to(b)));
    }
  }
  return cat;
}

Morphism compose(const FiniteCategory& cat, const Morphism& f, const Morphism& g) {
  if (f.cod != g.dom) throw Error(ErrorCode::kNotComposable, "codomain of f differs from domain of g");
  if (!cat.contains(f) || !cat.contains(g)) {
    throw Error(ErrorCode::kNotInCategory, "arrow does not belong to the category");
  }
  const Morphism* composite = cat.hom(f.dom, g.cod);
  if (composite == nullptr) {
    throw Error(ErrorCode::kCompositeMissing, "no arrow for the composite");
  }
  return *composite;
}

bool all_passed(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

std::vector<LawReport> check_category_laws(const Conflict& conflict, const FiniteCategory& cat) {
  const auto arrows = cat.morphisms();
  LawReport identity{"identity"};
  LawReport left_unit{"left_unit"};
  LawReport right_unit{"right_unit"};
  LawReport closure{"closure"};
  LawReport associativity{"associativity"};

  for (std::size_t k = 0; k < cat.object_count(); ++k) {
    const StateId s{k};
    ++identity.checked;
    const Morphism* id = cat.hom(s, s);
    if (identity.passed() && (id == nullptr || *id != Morphism::identity(s))) {
      identity.counterexample = Counterexample{names(conflict, {s}), "missing or malformed identity"};
    }
  }

  for (const auto& f : arrows) {
    ++left_unit.checked;
    ++right_unit.checked;
    try {
      if (compose(cat, f, cat.identity(f.cod)) != f && left_unit.passed()) {
        left_unit.counterexample = Counterexample{names(conflict, {f.dom, f.cod}), "id o f != f"};
      }
    } catch (const Error& e) {
      if (left_unit.passed()) left_unit.counterexample = Counterexample{names(conflict, {f.dom, f.cod}), e.what()};
    }
    try {
      if (compose(cat, cat.identity(f.dom), f) != f && right_unit.passed()) {
        right_unit.counterexample = Counterexample{names(conflict, {f.dom, f.cod}), "f o id != f"};
      }
    } catch (const Error& e) {
      if (right_unit.passed()) right_unit.counterexample = Counterexample{names(conflict, {f.dom, f.cod}), e.what()};
    }
  }

  std::size_t skipped = 0;
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (f.cod != g.dom) continue;
      ++closure.checked;
      if (!cat.has_hom(f.dom, g.cod) && closure.passed()) {
        closure.counterexample =
            Counterexample{names(conflict, {f.dom, f.cod, g.cod}), "hom(a, c) empty although hom(a, b) and hom(b, c) are not"};
      }
      for (const auto& h : arrows) {
        if (g.cod != h.dom) continue;
        ++associativity.checked;
        try {
          const Morphism lhs = compose(cat, compose(cat, f, g), h);
          const Morphism rhs = compose(cat, f, compose(cat, g, h));
          if (lhs != rhs && associativity.passed()) {
            associativity.counterexample =
                Counterexample{names(conflict, {f.dom, f.cod, g.cod, h.cod}), "(h o g) o f != h o (g o f)"};
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kCompositeMissing) throw;
          ++skipped;
        }
      }
    }
  }
  if (skipped > 0) {
    associativity.notes.push_back(std::to_string(skipped) +
                                  " triples skipped because a composite is missing (see closure)");
  }
  return {identity, left_unit, right_unit, closure, associativity};
}

std::vector<Path> enumerate_paths(const Conflict& conflict, StateId from, StateId to,
                                  std::size_t max_len, const Scope& scope) {
  conflict.require_state(from);
  conflict.require_state(to);
  check_scope(conflict, scope);
  if (max_len == 0) throw Error(ErrorCode::kInvalidArgument, "max_len must be at least 1");

  std::vector<Path> out;
  Path current;
  const std::size_t nobody = conflict.dm_count() + 1;
  auto extend = [&](auto& self, StateId at, std::size_t last) -> void {
    for (const auto& m : conflict.moves_from(at)) {
      if (!scope.movers.contains(m.owner)) continue;
      const std::size_t mover = owner_slot(conflict, m.owner);
      if (scope.rule == LegalRule::kNoConsecutiveRepeat && mover == last) continue;
      current.push_back(m);
      if (m.to == to) out.push_back(current);
      if (current.size() < max_len) self(self, m.to, mover);
      current.pop_back();
    }
  };
  extend(extend, from, nobody);
  return out;
}

// ---------------------------------------------------------------------------

PreferenceFunctor build_preference_functor(const Conflict& conflict, OwnerId dm) {
  conflict.require_dm(dm);
  PreferenceFunctor functor{dm, {}};
  for (auto s : conflict.states()) functor.object_map.push_back(conflict.rank(dm, s));
  return functor;
}

std::vector<LawReport> check_functor_laws(const Conflict& conflict, const PreferenceFunctor& functor,
                                          const FiniteCategory& cat) {
  LawReport identity{"functor_identity"};
  LawReport composition{"functor_composition"};
  LawReport order{"order_consistency"};

  if (functor.object_map.size() != conflict.state_count()) {
    identity.counterexample = Counterexample{{}, "object map is not total"};
    return {identity, composition, order};
  }

  for (std::size_t k = 0; k < cat.object_count(); ++k) {
    const StateId s{k};
    ++identity.checked;
    const int level = functor.map(s);
    if (functor.map(cat.identity(s)) != RankArrow{level, level} && identity.passed()) {
      identity.counterexample = Counterexample{names(conflict, {s}), "P(id) is not an identity"};
    }
  }

  const auto arrows = cat.morphisms();
  for (const auto& f : arrows) {
    for (const auto& g : arrows) {
      if (f.cod != g.dom || !cat.has_hom(f.dom, g.cod)) continue;
      ++composition.checked;
      const RankArrow pf = functor.map(f);
      const RankArrow pg = functor.map(g);
      const bool chained = pf.to == pg.from;
      const RankArrow expected{pf.from, pg.to};
      if ((!chained || functor.map(compose(cat, f, g)) != expected) && composition.passed()) {
        composition.counterexample =
            Counterexample{names(conflict, {f.dom, f.cod, g.cod}), "P(g o f) != P(g) o P(f)"};
      }
    }
  }

  for (auto s1 : conflict.states()) {
    ++order.checked;
    if (functor.map(s1) != conflict.rank(functor.dm, s1) && order.passed()) {
      order.counterexample = Counterexample{names(conflict, {s1}), "level differs from the DM's rank"};
    }
    for (auto s2 : conflict.states()) {
      const bool by_functor = functor.map(s1) <= functor.map(s2);
      const bool by_preference = conflict.rank(functor.dm, s1) <= conflict.rank(functor.dm, s2);
      if (by_functor != by_preference && order.passed()) {
        order.counterexample = Counterexample{names(conflict, {s1, s2}), "level order disagrees with preference"};
      }
    }
  }
  return {identity, composition, order};
}

CPreference c_preference(const PreferenceFunctor& functor, const Morphism& f, const Morphism& g) {
  const int lf = functor.map(f.cod);
  const int lg = functor.map(g.cod);
  if (lf > lg) return CPreference::kStrictlyBetter;
  if (lf < lg) return CPreference::kStrictlyWorse;
  return CPreference::kIndifferent;
}

std::vector<LawReport> check_c_preference_properties(const Conflict& conflict, OwnerId dm,
                                                     const FiniteCategory& cat) {
  const auto functor = build_preference_functor(conflict, dm);
  return check_c_preference_properties(
      conflict, cat, [&](const Morphism& f, const Morphism& g) { return c_preference(functor, f, g); });
}

std::vector<LawReport> check_c_preference_properties(const Conflict& conflict,
                                                     const FiniteCategory& cat,
                                                     const CPreferenceRelation& relation) {
  LawReport reflexive{"c_indifference_reflexive"};
  LawReport symmetric{"c_indifference_symmetric"};
  LawReport asymmetric{"c_strict_asymmetric"};
  LawReport complete{"c_strong_completeness"};
  LawReport opposite{"c_opposite_arrows_asymmetric"};

  const auto arrows = cat.morphisms();
  auto pair_names = [&](const Morphism& f, const Morphism& g) {
    return names(conflict, {f.dom, f.cod, g.dom, g.cod});
  };
  for (const auto& f : arrows) {
    ++reflexive.checked;
    if (relation(f, f) != CPreference::kIndifferent && reflexive.passed()) {
      reflexive.counterexample = Counterexample{names(conflict, {f.dom, f.cod}), "f is not indifferent to itself"};
    }
    for (const auto& g : arrows) {
      const CPreference fg = relation(f, g);
      const CPreference gf = relation(g, f);
      const bool f_over_g = fg == CPreference::kStrictlyBetter;
      const bool g_over_f = gf == CPreference::kStrictlyBetter;

      ++symmetric.checked;
      if ((fg == CPreference::kIndifferent) != (gf == CPreference::kIndifferent) && symmetric.passed()) {
        symmetric.counterexample = Counterexample{pair_names(f, g), "indifference holds in one direction only"};
      }
      ++asymmetric.checked;
      if (f_over_g && g_over_f && asymmetric.passed()) {
        asymmetric.counterexample = Counterexample{pair_names(f, g), "f > g and g > f"};
      }
      ++complete.checked;
      const int holding = int(fg == CPreference::kIndifferent) + int(f_over_g) + int(g_over_f);
      if (holding != 1 && complete.passed()) {
        complete.counterexample = Counterexample{pair_names(f, g), "not exactly one of f ~ g, f > g, g > f"};
      }
      if (f.dom != f.cod && f.dom == g.cod && f.cod == g.dom) {
        ++opposite.checked;
        if (f_over_g && g_over_f && opposite.passed()) {
          opposite.counterexample =
              Counterexample{pair_names(f, g), "opposite transitions each strictly preferred"};
        }
      }
    }
  }
  return {reflexive, symmetric, asymmetric, complete, opposite};
}

std::string to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::kIdentity: return "identity";
    case MorphismKind::kGenerated: return "generated";
    case MorphismKind::kComposite: return "composite";
  }
  return "?";
}

std::string to_string(CPreference verdict) {
  switch (verdict) {
    case CPreference::kStrictlyBetter: return "strictly-better";
    case CPreference::kIndifferent: return "indifferent";
    case CPreference::kStrictlyWorse: return "strictly-worse";
  }
  return "?";
}

std::string describe(const Conflict& conflict, const Morphism& f) {
  std::ostringstream os;
  os << conflict.state_name(f.dom) << " -> " << conflict.state_name(f.cod) << " [";
  if (f.kind == MorphismKind::kIdentity) os << "id";
  for (std::size_t k = 0; k < f.witness.size(); ++k) {
    os << (k ? " " : "") << to_string(conflict, f.witness[k]);
  }
  os << "]";
  return os.str();
}

}  // namespace cgmcr

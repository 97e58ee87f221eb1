#pragma once

#include <functional>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/fincat.hpp"
#include "skewcat/report.hpp"
#include "skewcat/skewmon.hpp"

namespace skewcat {

/// Left skew action ⋆: C × A → A of a skew monoidal category C with
///   α_{X,Y,A}: (X⊗Y)⋆A → X⋆(Y⋆A)   and   λ_A: I⋆A → A.
template <Category C, Category A>
struct SkewAction {
  SkewMonoidal<C> acting;
  std::shared_ptr<const A> carrier;
  std::function<ObjectOf<A>(const ObjectOf<C>&, const ObjectOf<A>&)> star;
  std::function<MorphismOf<A>(const MorphismOf<C>&, const MorphismOf<A>&)> star_map;
  std::function<MorphismOf<A>(const ObjectOf<C>&, const ObjectOf<C>&, const ObjectOf<A>&)> alpha;
  std::function<MorphismOf<A>(const ObjectOf<A>&)> lambda;

  const A& cat() const { return *carrier; }
  const C& base() const { return acting.cat(); }
  ObjectOf<A> operator()(const ObjectOf<C>& x, const ObjectOf<A>& a) const { return star(x, a); }
  MorphismOf<A> map(const MorphismOf<C>& f, const MorphismOf<A>& g) const { return star_map(f, g); }
};

/// C acting on itself by its tensor.
template <Category C>
SkewAction<C, C> tensor_action(const SkewMonoidal<C>& s) {
  return {s, s.carrier, s.tensor, s.tensor_map, s.alpha, s.lambda};
}

/// Tuples for action axioms: (X,Y,Z,A), (X,Y,A), (X,A) and carriers A.
template <Category C, Category A>
struct ActionSample {
  std::vector<std::tuple<ObjectOf<C>, ObjectOf<C>, ObjectOf<C>, ObjectOf<A>>> quads;
  std::vector<std::tuple<ObjectOf<C>, ObjectOf<C>, ObjectOf<A>>> triples;
  std::vector<std::pair<ObjectOf<C>, ObjectOf<A>>> pairs;
  std::vector<ObjectOf<A>> carriers;
};

template <EnumerableCategory C, EnumerableCategory A>
ActionSample<C, A> exhaustive_action_sample(const C& c, const A& a) {
  ActionSample<C, A> s;
  const auto cs = c.objects();
  s.carriers = a.objects();
  for (const auto& t : s.carriers)
    for (const auto& x : cs) {
      s.pairs.push_back({x, t});
      for (const auto& y : cs) {
        s.triples.push_back({x, y, t});
        for (const auto& z : cs) s.quads.push_back({x, y, z, t});
      }
    }
  return s;
}

/// Action sample built from object lists, taking each carrier with a cyclic
/// choice of acting objects.
template <Category C, Category A>
ActionSample<C, A> action_sample_from(const std::vector<ObjectOf<C>>& cs, const std::vector<ObjectOf<A>>& as) {
  ActionSample<C, A> s;
  s.carriers = as;
  if (cs.empty()) return s;
  const std::size_t n = cs.size();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto& x = cs[i % n];
    const auto& y = cs[(i * 3 + 1) % n];
    const auto& z = cs[(i * 7 + 2) % n];
    s.pairs.push_back({x, as[i]});
    s.triples.push_back({x, y, as[i]});
    s.quads.push_back({x, y, z, as[i]});
  }
  return s;
}

/// The three action axioms:
///   lsa1  α_{X,Y,Z⋆A}∘α_{X⊗Y,Z,A} = (1⋆α_{Y,Z,A})∘α_{X,Y⊗Z,A}∘(α_{X,Y,Z}⋆1)
///   lsa2  λ_{Y⋆A}∘α_{I,Y,A} = λ_Y⋆1_A
///   lsa3  (1⋆λ_A)∘α_{X,I,A}∘(ρ_X⋆1_A) = 1_{X⋆A}
template <Category C, Category A>
LawReport check_action(const SkewAction<C, A>& act, const ActionSample<C, A>& sample) {
  const A& a = act.cat();
  const C& c = act.base();
  const auto& s = act.acting;
  auto alpha = [&](const ObjectOf<C>& x, const ObjectOf<C>& y, const ObjectOf<A>& t) {
    auto m = act.alpha(x, y, t);
    expect_endpoints(a, m, act(s(x, y), t), act(x, act(y, t)), "action alpha");
    return m;
  };
  auto lambda = [&](const ObjectOf<A>& t) {
    auto m = act.lambda(t);
    expect_endpoints(a, m, act(s.unit, t), t, "action lambda");
    return m;
  };
  LawReport r;
  r.law("lsa1");
  r.law("lsa2");
  r.law("lsa3");
  for (const auto& [x, y, z, t] : sample.quads) {
    auto lhs = a.compose(alpha(x, y, act(z, t)), alpha(s(x, y), z, t));
    auto rhs = comp(a, act.map(c.identity(x), alpha(y, z, t)), alpha(x, s(y, z), t),
                    act.map(s.alpha(x, y, z), a.identity(t)));
    detail::equation(r, "lsa1", a, lhs, rhs, [&] {
      return Json::array({c.describe(x), c.describe(y), c.describe(z), a.describe(t)});
    });
  }
  for (const auto& [y, t] : sample.pairs) {
    auto lhs = a.compose(lambda(act(y, t)), alpha(s.unit, y, t));
    auto rhs = act.map(s.lambda(y), a.identity(t));
    detail::equation(r, "lsa2", a, lhs, rhs, [&] { return Json::array({c.describe(y), a.describe(t)}); });
    auto lhs3 = comp(a, act.map(c.identity(y), lambda(t)), alpha(y, s.unit, t), act.map(s.rho(y), a.identity(t)));
    detail::equation(r, "lsa3", a, lhs3, a.identity(act(y, t)),
                     [&] { return Json::array({c.describe(y), a.describe(t)}); });
  }
  return r;
}

/// Functoriality of ⋆ and naturality of the action constraints on sampled
/// morphisms: pairs (f in C, g in A) and triples (f, f', g).
template <Category C, Category A>
LawReport check_action_naturality(const SkewAction<C, A>& act,
                                  const std::vector<std::pair<MorphismOf<C>, MorphismOf<A>>>& pairs,
                                  const std::vector<std::tuple<MorphismOf<C>, MorphismOf<C>, MorphismOf<A>>>& triples) {
  const A& a = act.cat();
  const C& c = act.base();
  const auto& s = act.acting;
  LawReport r;
  for (const auto& [f, g] : pairs) {
    auto id = act.map(c.identity(c.dom(f)), a.identity(a.dom(g)));
    detail::equation(r, "star-identity", a, id, a.identity(act(c.dom(f), a.dom(g))), [&] {
      return Json::array({c.describe(f), a.describe(g)});
    });
    // f⋆g = (f⋆1)∘(1⋆g) = (1⋆g)∘(f⋆1)
    auto one = a.compose(act.map(f, a.identity(a.cod(g))), act.map(c.identity(c.dom(f)), g));
    auto two = a.compose(act.map(c.identity(c.cod(f)), g), act.map(f, a.identity(a.dom(g))));
    detail::equation(r, "star-interchange", a, one, act.map(f, g), [&] {
      return Json::array({c.describe(f), a.describe(g)});
    });
    detail::equation(r, "star-interchange", a, two, act.map(f, g), [&] {
      return Json::array({c.describe(f), a.describe(g)});
    });
  }
  for (const auto& [f, f2, g] : triples) {
    auto lhs = a.compose(act.alpha(c.cod(f), c.cod(f2), a.cod(g)), act.map(s.map(f, f2), g));
    auto rhs = a.compose(act.map(f, act.map(f2, g)), act.alpha(c.dom(f), c.dom(f2), a.dom(g)));
    detail::equation(r, "alpha-natural", a, lhs, rhs, [&] {
      return Json::array({c.describe(f), c.describe(f2), a.describe(g)});
    });
    auto lhs2 = a.compose(g, act.lambda(a.dom(g)));
    auto rhs2 = a.compose(act.lambda(a.cod(g)), act.map(s.id(s.unit), g));
    detail::equation(r, "lambda-natural", a, lhs2, rhs2, [&] { return a.describe(g); });
  }
  return r;
}

/// Skew left warping riding an action:
///   T: A → C,  K ∈ A,  v_{A,B}: T(TA⋆B) → TA⊗TB,  v0: TK → I,  k_A: A → TA⋆K.
template <Category C, Category A>
struct SkewWarping {
  SkewAction<C, A> action;
  Functor<A, C> T;
  ObjectOf<A> K;
  std::function<MorphismOf<C>(const ObjectOf<A>&, const ObjectOf<A>&)> v;
  MorphismOf<C> v0;
  std::function<MorphismOf<A>(const ObjectOf<A>&)> k;
};

/// The five warping diagrams:
///   warpassoc  α_{TA,TB,TC}∘(v_{A,B}⊗1)∘v_{TA⋆B,C} = (1⊗v_{B,C})∘v_{A,TB⋆C}∘Tα_{TA,TB,C}∘T(v_{A,B}⋆1)
///   warpunit1  λ_{TB}∘(v0⊗1)∘v_{K,B} = Tλ_B∘T(v0⋆1)
///   warpunit2  (1⊗v0)∘v_{A,K}∘Tk_A = ρ_{TA}
///   warpunit3  α_{TA,TB,K}∘(v_{A,B}⋆1)∘k_{TA⋆B} = 1⋆k_B
///   warpunit4  λ_K∘(v0⋆1)∘k_K = 1_K
template <Category C, Category A>
LawReport check_warping(const SkewWarping<C, A>& w, const ObjectSample<A>& sample) {
  const auto& act = w.action;
  const A& a = act.cat();
  const C& c = act.base();
  const auto& s = act.acting;
  const auto& T = w.T;
  auto v = [&](const ObjectOf<A>& p, const ObjectOf<A>& q) {
    auto m = w.v(p, q);
    expect_endpoints(c, m, T(act(T(p), q)), s(T(p), T(q)), "v");
    return m;
  };
  auto k = [&](const ObjectOf<A>& p) {
    auto m = w.k(p);
    expect_endpoints(a, m, p, act(T(p), w.K), "k");
    return m;
  };
  expect_endpoints(c, w.v0, T(w.K), s.unit, "v0");

  LawReport r;
  for (const auto* n : {"warpassoc", "warpunit1", "warpunit2", "warpunit3", "warpunit4"}) r.law(n);
  for (const auto& [p, q, t] : sample.triples) {
    const auto tp = T(p), tq = T(q), tt = T(t);
    auto lhs = comp(c, s.alpha(tp, tq, tt), s.map(v(p, q), c.identity(tt)), v(act(tp, q), t));
    auto rhs = comp(c, s.map(c.identity(tp), v(q, t)), v(p, act(tq, t)), T.map(act.alpha(tp, tq, t)),
                    T.map(act.map(v(p, q), a.identity(t))));
    detail::equation(r, "warpassoc", c, lhs, rhs, [&] { return detail::describe_all(a, p, q, t); });
  }
  for (const auto& p : sample.singles) {
    const auto tp = T(p);
    auto lhs1 = comp(c, s.lambda(tp), s.map(w.v0, c.identity(tp)), v(w.K, p));
    auto rhs1 = comp(c, T.map(act.lambda(p)), T.map(act.map(w.v0, a.identity(p))));
    detail::equation(r, "warpunit1", c, lhs1, rhs1, [&] { return detail::describe_all(a, p); });
    auto lhs2 = comp(c, s.map(c.identity(tp), w.v0), v(p, w.K), T.map(k(p)));
    detail::equation(r, "warpunit2", c, lhs2, s.rho(tp), [&] { return detail::describe_all(a, p); });
  }
  for (const auto& [p, q] : sample.pairs) {
    const auto tp = T(p), tq = T(q);
    auto lhs = comp(a, act.alpha(tp, tq, w.K), act.map(v(p, q), a.identity(w.K)), k(act(tp, q)));
    auto rhs = act.map(c.identity(tp), k(q));
    detail::equation(r, "warpunit3", a, lhs, rhs, [&] { return detail::describe_all(a, p, q); });
  }
  {
    auto lhs = comp(a, act.lambda(w.K), act.map(w.v0, a.identity(w.K)), k(w.K));
    detail::equation(r, "warpunit4", a, lhs, a.identity(w.K), [&] { return detail::describe_all(a, w.K); });
  }
  return r;
}

/// Naturality of v (in both variables) and of k on sampled morphisms of A.
template <Category C, Category A>
LawReport check_warping_naturality(const SkewWarping<C, A>& w, const MorphismSample<A>& m) {
  const auto& act = w.action;
  const A& a = act.cat();
  const C& c = act.base();
  const auto& s = act.acting;
  const auto& T = w.T;
  LawReport r;
  for (const auto& [f, g] : m.pairs) {
    // v_{A',B'}∘T(Tf⋆g) = (Tf⊗Tg)∘v_{A,B}
    auto lhs = c.compose(w.v(a.cod(f), a.cod(g)), T.map(act.map(T.map(f), g)));
    auto rhs = c.compose(s.map(T.map(f), T.map(g)), w.v(a.dom(f), a.dom(g)));
    detail::equation(r, "v-natural", c, lhs, rhs, [&] { return Json::array({a.describe(f), a.describe(g)}); });
  }
  for (const auto& f : m.singles) {
    auto lhs = a.compose(w.k(a.cod(f)), f);
    auto rhs = a.compose(act.map(T.map(f), a.identity(w.K)), w.k(a.dom(f)));
    detail::equation(r, "k-natural", a, lhs, rhs, [&] { return a.describe(f); });
  }
  return r;
}

template <Category C, Category A>
struct WarpedStructure {
  SkewMonoidal<A> structure;
  OpmonoidalFunctor<A, C> opmonoidal;  // (T, v0, v)
};

/// Skew structure determined by a warping:
///   A⊗̄B = TA⋆B,  unit K,  ᾱ = α_{TA,TB,C}∘(v_{A,B}⋆1),  λ̄ = λ_B∘(v0⋆1),  ρ̄ = k,
/// with (T, v0, v) opmonoidal.
template <Category C, Category A>
WarpedStructure<C, A> warping_to_skew(const SkewWarping<C, A>& w) {
  const auto act = w.action;
  const auto T = w.T;
  const auto v = w.v;
  const auto v0 = w.v0;
  SkewMonoidal<A> bar;
  bar.carrier = act.carrier;
  bar.tensor = [act, T](const ObjectOf<A>& p, const ObjectOf<A>& q) { return act(T(p), q); };
  bar.tensor_map = [act, T](const MorphismOf<A>& f, const MorphismOf<A>& g) { return act.map(T.map(f), g); };
  bar.unit = w.K;
  bar.alpha = [act, T, v](const ObjectOf<A>& p, const ObjectOf<A>& q, const ObjectOf<A>& t) {
    return act.cat().compose(act.alpha(T(p), T(q), t), act.map(v(p, q), act.cat().identity(t)));
  };
  bar.lambda = [act, v0](const ObjectOf<A>& q) {
    return act.cat().compose(act.lambda(q), act.map(v0, act.cat().identity(q)));
  };
  bar.rho = w.k;
  OpmonoidalFunctor<A, C> op{bar, act.acting, T, v0, v};
  return {bar, op};
}

/// Checks the warping on `sample` first; throws PreconditionError when it
/// fails.
template <Category C, Category A>
WarpedStructure<C, A> warping_to_skew(const SkewWarping<C, A>& w, const ObjectSample<A>& sample) {
  auto r = check_warping(w, sample);
  if (!r.ok()) throw PreconditionError("warping fails its axioms: " + r.to_json(3).dump());
  return warping_to_skew(w);
}

/// Identity warping of a skew monoidal category on itself:
///   T = Id, K = I, v = 1, v0 = 1, k = ρ.
template <Category C>
SkewWarping<C, C> identity_warping(const SkewMonoidal<C>& s) {
  auto c = s.carrier;
  SkewWarping<C, C> w{tensor_action(s), identity_functor<C>(), s.unit, nullptr, c->identity(s.unit), s.rho};
  w.v = [s](const ObjectOf<C>& p, const ObjectOf<C>& q) { return s.id(s(p, q)); };
  return w;
}

// ---- Endofunctor categories ----------------------------------------------

/// [A,A] for a small finite A, materialised: objects are the endofunctors,
/// morphisms the natural transformations. Strict monoidal under composition
/// (F⊗G = F∘G) and acting on A by evaluation.
struct EndofunctorCategory {
  FinCatPtr base;
  FinCatPtr cat;
  std::vector<FinFunctor> functors;             // indexed by object of cat
  std::vector<std::vector<Mor>> transformations;  // components, indexed by morphism of cat

  std::optional<Ob> find_functor(const FinFunctor& f) const;
  std::optional<Mor> find_transformation(Ob src, Ob tgt, const std::vector<Mor>& components) const;
  SkewMonoidal<FinCategory> composition() const;
  SkewAction<FinCategory, FinCategory> evaluation() const;
};

struct EndofunctorCaps {
  std::size_t max_objects = 3;
  std::size_t max_morphisms = 8;
  std::size_t max_functors = 4096;
  std::size_t max_transformations = 1 << 16;
};

/// Throws PreconditionError when A or the result exceeds the caps.
EndofunctorCategory endofunctor_category(FinCatPtr a, const EndofunctorCaps& caps = {});

/// The warping over the evaluation action that encodes a skew structure on A:
///   T(A) = A⊗−, K = I, v_{A,B} = α_{A,B,−}, v0 = λ, k = ρ.
/// Throws PreconditionError when the structure's functors are not found in [A,A].
SkewWarping<FinCategory, FinCategory> evaluation_warping(const EndofunctorCategory& e, const SkewMonoidal<FinCategory>& s);

}  // namespace skewcat

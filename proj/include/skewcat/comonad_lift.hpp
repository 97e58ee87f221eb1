#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/reflection.hpp"
#include "skewcat/report.hpp"
#include "skewcat/skewmon.hpp"
#include "skewcat/warping.hpp"

namespace skewcat {

/// Comonad (G, δ, ε) on a skew C-actegory A together with
///   γ_{X,A}: X⋆GA → G(X⋆A)
/// making (G, γ) a morphism of actegories.
template <Category C, Category A>
struct ActegoryComonad {
  SkewAction<C, A> action;
  Functor<A, A> G;
  std::function<MorphismOf<A>(const ObjectOf<C>&, const ObjectOf<A>&)> gamma;
  Components<A, A> delta;  // GA → GGA
  Components<A, A> eps;    // GA → A
};

template <Category C, Category A>
ActegoryComonad<C, A> identity_comonad(const SkewAction<C, A>& act) {
  auto a = act.carrier;
  auto id = [a](const ObjectOf<A>& x) { return a->identity(x); };
  return {act, identity_functor<A>(),
          [act](const ObjectOf<C>& x, const ObjectOf<A>& t) { return act.cat().identity(act(x, t)); }, id, id};
}

/// Comonad laws on carriers, then
///   am1        Gα∘γ_{X⊗Y,A} = γ_{X,Y⋆A}∘(1⋆γ_{Y,A})∘α_{X,Y,GA}
///   am2        Gλ∘γ_{I,A} = λ_{GA}
///   am3-delta  δ_{X⋆A}∘γ_{X,A} = Gγ_{X,A}∘γ_{X,GA}∘(1⋆δ_A)
///   am3-eps    ε_{X⋆A}∘γ_{X,A} = 1⋆ε_A
template <Category C, Category A>
LawReport check_actegory_comonad(const ActegoryComonad<C, A>& m, const ActionSample<C, A>& sample) {
  const auto& act = m.action;
  const A& a = act.cat();
  const C& c = act.base();
  const auto& s = act.acting;
  const auto& G = m.G;
  auto gamma = [&](const ObjectOf<C>& x, const ObjectOf<A>& t) {
    auto g = m.gamma(x, t);
    expect_endpoints(a, g, act(x, G(t)), G(act(x, t)), "gamma");
    return g;
  };
  auto delta = [&](const ObjectOf<A>& t) {
    auto d = m.delta(t);
    expect_endpoints(a, d, G(t), G(G(t)), "delta");
    return d;
  };
  auto eps = [&](const ObjectOf<A>& t) {
    auto e = m.eps(t);
    expect_endpoints(a, e, G(t), t, "eps");
    return e;
  };
  LawReport r;
  for (const auto* n : {"counit-left", "counit-right", "coassociativity", "am1", "am2", "am3-delta", "am3-eps"}) r.law(n);
  for (const auto& t : sample.carriers) {
    const auto gt = G(t);
    auto d = delta(t);
    detail::equation(r, "counit-left", a, a.compose(eps(gt), d), a.identity(gt), [&] { return a.describe(t); });
    detail::equation(r, "counit-right", a, a.compose(G.map(eps(t)), d), a.identity(gt), [&] { return a.describe(t); });
    detail::equation(r, "coassociativity", a, a.compose(delta(gt), d), a.compose(G.map(d), d),
                     [&] { return a.describe(t); });
    detail::equation(r, "am2", a, a.compose(G.map(act.lambda(t)), gamma(s.unit, t)), act.lambda(gt),
                     [&] { return a.describe(t); });
  }
  for (const auto& [x, y, t] : sample.triples) {
    auto lhs = a.compose(G.map(act.alpha(x, y, t)), gamma(s(x, y), t));
    auto rhs = comp(a, gamma(x, act(y, t)), act.map(c.identity(x), gamma(y, t)), act.alpha(x, y, G(t)));
    detail::equation(r, "am1", a, lhs, rhs, [&] { return Json::array({c.describe(x), c.describe(y), a.describe(t)}); });
  }
  for (const auto& [x, t] : sample.pairs) {
    auto g = gamma(x, t);
    auto lhs = a.compose(delta(act(x, t)), g);
    auto rhs = comp(a, G.map(g), gamma(x, G(t)), act.map(c.identity(x), delta(t)));
    detail::equation(r, "am3-delta", a, lhs, rhs, [&] { return Json::array({c.describe(x), a.describe(t)}); });
    detail::equation(r, "am3-eps", a, a.compose(eps(act(x, t)), g), act.map(c.identity(x), eps(t)),
                     [&] { return Json::array({c.describe(x), a.describe(t)}); });
  }
  return r;
}

/// Naturality of γ in both variables and of δ, ε on sampled morphisms.
template <Category C, Category A>
LawReport check_comonad_naturality(const ActegoryComonad<C, A>& m,
                                   const std::vector<std::pair<MorphismOf<C>, MorphismOf<A>>>& pairs,
                                   const std::vector<MorphismOf<A>>& singles) {
  const auto& act = m.action;
  const A& a = act.cat();
  const C& c = act.base();
  const auto& G = m.G;
  LawReport r;
  for (const auto& [f, g] : pairs) {
    auto lhs = a.compose(G.map(act.map(f, g)), m.gamma(c.dom(f), a.dom(g)));
    auto rhs = a.compose(m.gamma(c.cod(f), a.cod(g)), act.map(f, G.map(g)));
    detail::equation(r, "gamma-natural", a, lhs, rhs, [&] { return Json::array({c.describe(f), a.describe(g)}); });
  }
  auto id = identity_functor<A>();
  auto GG = compose_functors<A, A, A>(G, G);
  check_naturality_on<A, A>(r, "delta-natural", a, a, G, GG, m.delta, singles);
  check_naturality_on<A, A>(r, "eps-natural", a, a, G, id, m.eps, singles);
  return r;
}

// ---- Eilenberg–Moore coalgebras -------------------------------------------

template <Category A>
struct Coalgebra {
  ObjectOf<A> carrier;
  MorphismOf<A> coaction;  // carrier → G carrier
};

template <Category A>
struct CoalgebraMorphism {
  Coalgebra<A> dom;
  Coalgebra<A> cod;
  MorphismOf<A> map;
};

/// A^G, presented lazily over the base category: objects are validated by
/// make(), morphisms by lift().
template <Category A>
class CoalgebraCategory {
 public:
  using Object = Coalgebra<A>;
  using Morphism = CoalgebraMorphism<A>;

  CoalgebraCategory(std::shared_ptr<const A> base, Functor<A, A> G, Components<A, A> delta, Components<A, A> eps)
      : base_(std::move(base)), G_(std::move(G)), delta_(std::move(delta)), eps_(std::move(eps)) {}

  const A& base() const { return *base_; }
  std::shared_ptr<const A> base_ptr() const { return base_; }
  const Functor<A, A>& G() const { return G_; }
  MorphismOf<A> delta(const ObjectOf<A>& x) const { return delta_(x); }
  MorphismOf<A> eps(const ObjectOf<A>& x) const { return eps_(x); }

  const Object& dom(const Morphism& f) const { return f.dom; }
  const Object& cod(const Morphism& f) const { return f.cod; }
  Morphism identity(const Object& x) const { return {x, x, base_->identity(x.carrier)}; }
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (!same_object(f.cod, g.dom)) throw StructuralError("coalgebra morphisms are not composable");
    return {f.dom, g.cod, base_->compose(g.map, f.map)};
  }
  bool same_object(const Object& x, const Object& y) const {
    return base_->same_object(x.carrier, y.carrier) && base_->same_morphism(x.coaction, y.coaction);
  }
  bool same_morphism(const Morphism& f, const Morphism& g) const {
    return same_object(f.dom, g.dom) && same_object(f.cod, g.cod) && base_->same_morphism(f.map, g.map);
  }
  // The inverse of a coalgebra morphism is automatically one.
  std::optional<Morphism> inverse(const Morphism& f) const {
    auto inv = base_->inverse(f.map);
    if (!inv) return std::nullopt;
    return Morphism{f.cod, f.dom, *inv};
  }
  Json describe(const Object& x) const {
    return Json{{"carrier", base_->describe(x.carrier)}, {"coaction", base_->describe(x.coaction)}};
  }
  Json describe(const Morphism& f) const { return base_->describe(f.map); }
  Json explain_difference(const Morphism& f, const Morphism& g) const { return mismatch(*base_, f.map, g.map); }

  /// Counit and coassociativity of the coaction.
  LawReport check_coalgebra(const ObjectOf<A>& x, const MorphismOf<A>& a) const {
    const A& b = *base_;
    expect_endpoints(b, a, x, G_(x), "coaction");
    LawReport r;
    detail::equation(r, "coalgebra-counit", b, b.compose(eps_(x), a), b.identity(x), [&] { return b.describe(x); });
    detail::equation(r, "coalgebra-coassociativity", b, b.compose(G_.map(a), a), b.compose(delta_(x), a),
                     [&] { return b.describe(x); });
    return r;
  }
  /// Throws PreconditionError when (x, a) is not a coalgebra.
  Object make(const ObjectOf<A>& x, const MorphismOf<A>& a) const {
    auto r = check_coalgebra(x, a);
    if (!r.ok()) throw PreconditionError("not a coalgebra: " + r.to_json(1).dump());
    return {x, a};
  }
  bool is_morphism(const Object& x, const Object& y, const MorphismOf<A>& f) const {
    const A& b = *base_;
    if (!b.same_object(b.dom(f), x.carrier) || !b.same_object(b.cod(f), y.carrier)) return false;
    return b.same_morphism(b.compose(y.coaction, f), b.compose(G_.map(f), x.coaction));
  }
  /// Throws PreconditionError when f does not preserve the coactions.
  Morphism lift(const Object& x, const Object& y, const MorphismOf<A>& f) const {
    if (!is_morphism(x, y, f)) throw PreconditionError("map is not a coalgebra morphism");
    return {x, y, f};
  }
  Object cofree(const ObjectOf<A>& x) const { return {G_(x), delta_(x)}; }
  Morphism cofree_map(const MorphismOf<A>& f) const {
    return {cofree(base_->dom(f)), cofree(base_->cod(f)), G_.map(f)};
  }

  /// Every coalgebra on every object, when the base is finite.
  std::vector<Object> objects() const
    requires EnumerableCategory<A>
  {
    std::vector<Object> out;
    for (const auto& x : base_->objects())
      for (const auto& a : base_->hom(x, G_(x)))
        if (check_coalgebra(x, a).ok()) out.push_back({x, a});
    return out;
  }
  std::vector<Morphism> hom(const Object& x, const Object& y) const
    requires EnumerableCategory<A>
  {
    std::vector<Morphism> out;
    for (const auto& f : base_->hom(x.carrier, y.carrier))
      if (is_morphism(x, y, f)) out.push_back({x, y, f});
    return out;
  }

 private:
  std::shared_ptr<const A> base_;
  Functor<A, A> G_;
  Components<A, A> delta_;
  Components<A, A> eps_;
};

template <Category A>
using CoalgebraPtr = std::shared_ptr<const CoalgebraCategory<A>>;

template <Category C, Category A>
struct EMCategory {
  CoalgebraPtr<A> category;
  SkewAction<C, CoalgebraCategory<A>> action;  // X⋆(A,a) = (X⋆A, γ∘(X⋆a))
  Functor<CoalgebraCategory<A>, A> forget;     // U
};

template <Category C, Category A>
EMCategory<C, A> em_category(const ActegoryComonad<C, A>& m) {
  using Co = CoalgebraCategory<A>;
  auto cat = std::make_shared<const Co>(m.action.carrier, m.G, m.delta, m.eps);
  const auto act = m.action;
  const auto gamma = m.gamma;
  auto star = [act, gamma](const ObjectOf<C>& x, const Coalgebra<A>& t) -> Coalgebra<A> {
    return {act(x, t.carrier), act.cat().compose(gamma(x, t.carrier), act.map(act.base().identity(x), t.coaction))};
  };
  SkewAction<C, Co> lifted;
  lifted.acting = act.acting;
  lifted.carrier = cat;
  lifted.star = star;
  lifted.star_map = [act, star](const MorphismOf<C>& f, const CoalgebraMorphism<A>& h) -> CoalgebraMorphism<A> {
    const C& c = act.base();
    return {star(c.dom(f), h.dom), star(c.cod(f), h.cod), act.map(f, h.map)};
  };
  lifted.alpha = [act, star](const ObjectOf<C>& x, const ObjectOf<C>& y, const Coalgebra<A>& t) -> CoalgebraMorphism<A> {
    return {star(act.acting(x, y), t), star(x, star(y, t)), act.alpha(x, y, t.carrier)};
  };
  lifted.lambda = [act, star](const Coalgebra<A>& t) -> CoalgebraMorphism<A> {
    return {star(act.acting.unit, t), t, act.lambda(t.carrier)};
  };
  Functor<Co, A> U{[](const Coalgebra<A>& t) { return t.carrier; },
                   [](const CoalgebraMorphism<A>& f) { return f.map; }};
  return {cat, lifted, U};
}

/// Validity of the lifted action: each object produced by ⋆ is a coalgebra and
/// each α, λ component and each X⋆h preserves coactions.
template <Category C, Category A>
LawReport check_lifted_action(const EMCategory<C, A>& em, const ActionSample<C, CoalgebraCategory<A>>& sample,
                              const std::vector<std::pair<MorphismOf<C>, CoalgebraMorphism<A>>>& maps = {}) {
  const auto& co = *em.category;
  const auto& act = em.action;
  LawReport r;
  auto valid = [&](const std::string& law, const CoalgebraMorphism<A>& f, const Json& where) {
    r.record(law, co.is_morphism(f.dom, f.cod, f.map), where);
  };
  for (const auto& [x, t] : sample.pairs) {
    auto obj = act(x, t);
    auto c = co.check_coalgebra(obj.carrier, obj.coaction);
    r.record("star-coalgebra", c.ok(), Json{{"X", act.base().describe(x)}, {"A", co.describe(t)}});
    valid("lambda-coalgebra-morphism", act.lambda(t), co.describe(t));
  }
  for (const auto& [x, y, t] : sample.triples)
    valid("alpha-coalgebra-morphism", act.alpha(x, y, t),
          Json::array({act.base().describe(x), act.base().describe(y), co.describe(t)}));
  for (const auto& [f, h] : maps) valid("star-map-coalgebra-morphism", act.map(f, h), act.base().describe(f));
  return r;
}

// ---- Lifted warping --------------------------------------------------------

namespace detail {

/// γ⁻¹ components computed once per pair. Objects with a hash() are cached;
/// others are recomputed (their inverses are table lookups anyway).
template <Category C, Category A>
class GammaInverse {
 public:
  explicit GammaInverse(ActegoryComonad<C, A> m) : m_(std::move(m)) {}

  MorphismOf<A> operator()(const ObjectOf<C>& x, const ObjectOf<A>& t) {
    if constexpr (requires { x.hash(); t.hash(); }) {
      const std::size_t h = x.hash() * 0x9e3779b97f4a7c15ULL ^ t.hash();
      auto& bucket = cache_[h];
      for (const auto& e : bucket)
        if (m_.action.base().same_object(e.x, x) && m_.action.cat().same_object(e.t, t)) return e.inverse;
      auto inv = compute(x, t);
      bucket.push_back({x, t, inv});
      return inv;
    } else {
      return compute(x, t);
    }
  }

 private:
  struct Entry {
    ObjectOf<C> x;
    ObjectOf<A> t;
    MorphismOf<A> inverse;
  };
  MorphismOf<A> compute(const ObjectOf<C>& x, const ObjectOf<A>& t) const {
    auto inv = m_.action.cat().inverse(m_.gamma(x, t));
    if (!inv)
      throw PreconditionError("gamma is not invertible at (" + m_.action.base().describe(x).dump() + ", " +
                              m_.action.cat().describe(t).dump() + ")");
    return *inv;
  }
  ActegoryComonad<C, A> m_;
  std::unordered_map<std::size_t, std::vector<Entry>> cache_;
};

}  // namespace detail

/// Invertibility of γ_{TA,K} and γ_{TA,TB⋆K} on the sampled coalgebra
/// carriers. Each failure names its component.
template <Category C, Category A>
ConditionReport check_lift_precondition(const SkewWarping<C, A>& w, const ActegoryComonad<C, A>& m,
                                        const ObjectSample<CoalgebraCategory<A>>& sample) {
  const auto& act = w.action;
  const A& a = act.cat();
  ConditionReport r;
  auto probe = [&](const ObjectOf<C>& x, const ObjectOf<A>& t, const std::string& which) {
    ++r.tested;
    if (!a.inverse(m.gamma(x, t)))
      r.failures.push_back(Json{{"component", which}, {"X", act.base().describe(x)}, {"A", a.describe(t)}});
  };
  for (const auto& p : sample.singles) probe(w.T(p.carrier), w.K, "gamma_{TA,K}");
  for (const auto& [p, q] : sample.pairs)
    probe(w.T(p.carrier), act(w.T(q.carrier), w.K), "gamma_{TA,TB*K}");
  return r;
}

/// The warping (T∘U, (GK, δ_K), v, v0∘Tε_K, k′) on A^G with
///   k′_{(A,a)} = γ⁻¹_{TA,K}∘Gk_A∘a.
/// γ⁻¹ is computed lazily; a missing inverse raises PreconditionError naming
/// the component. Use check_lift_precondition to test a sample up front.
template <Category C, Category A>
SkewWarping<C, CoalgebraCategory<A>> lift_warping(const SkewWarping<C, A>& w, const ActegoryComonad<C, A>& m,
                                                  const EMCategory<C, A>& em) {
  using Co = CoalgebraCategory<A>;
  const auto T = w.T;
  const auto U = em.forget;
  const auto act = w.action;
  const auto G = m.G;
  const auto k = w.k;
  const auto K = w.K;
  const auto lifted = em.action;
  auto inv = std::make_shared<detail::GammaInverse<C, A>>(m);

  SkewWarping<C, Co> out;
  out.action = lifted;
  out.T = compose_functors<Co, A, C>(T, U);
  out.K = em.category->cofree(K);
  out.v = [w](const Coalgebra<A>& p, const Coalgebra<A>& q) { return w.v(p.carrier, q.carrier); };
  out.v0 = act.base().compose(w.v0, T.map(m.eps(K)));
  out.k = [=](const Coalgebra<A>& p) -> CoalgebraMorphism<A> {
    const A& a = act.cat();
    const auto tp = T(p.carrier);
    auto map = comp(a, (*inv)(tp, K), G.map(k(p.carrier)), p.coaction);
    return {p, lifted(tp, em.category->cofree(K)), map};
  };
  return out;
}

/// k′ components are coalgebra morphisms.
template <Category C, Category A>
LawReport check_lifted_k(const SkewWarping<C, CoalgebraCategory<A>>& lw, const std::vector<Coalgebra<A>>& sample) {
  const auto& co = lw.action.cat();
  LawReport r;
  for (const auto& p : sample) {
    auto kp = lw.k(p);
    r.record("k-coalgebra-morphism", co.is_morphism(kp.dom, kp.cod, kp.map), co.describe(p));
  }
  return r;
}

/// U takes the lifted tensor to the base warped tensor on the nose, on objects
/// and on morphisms.
template <Category C, Category A>
LawReport check_u_strict(const WarpedStructure<C, CoalgebraCategory<A>>& lifted, const WarpedStructure<C, A>& base,
                         const ObjectSample<CoalgebraCategory<A>>& objects,
                         const std::vector<std::pair<CoalgebraMorphism<A>, CoalgebraMorphism<A>>>& maps = {}) {
  const A& a = base.structure.cat();
  const auto& ls = lifted.structure;
  const auto& bs = base.structure;
  LawReport r;
  for (const auto& [p, q] : objects.pairs) {
    auto t = ls(p, q);
    r.record("u-strict-objects", a.same_object(t.carrier, bs(p.carrier, q.carrier)),
             Json::array({a.describe(p.carrier), a.describe(q.carrier)}));
  }
  for (const auto& [f, g] : maps) {
    auto h = ls.map(f, g);
    bool ok = a.same_morphism(h.map, bs.map(f.map, g.map));
    r.record("u-strict-morphisms", ok, ok ? Json{} : mismatch(a, h.map, bs.map(f.map, g.map)));
  }
  return r;
}

/// U: A^G → A as an opmonoidal functor from the lifted structure to the base
/// one, with ψ = 1 and ψ0 = ε_K.
template <Category C, Category A>
OpmonoidalFunctor<CoalgebraCategory<A>, A> forgetful_opmonoidal(const WarpedStructure<C, CoalgebraCategory<A>>& lifted,
                                                                const WarpedStructure<C, A>& base,
                                                                const EMCategory<C, A>& em, const ObjectOf<A>& K) {
  const auto bs = base.structure;
  return {lifted.structure, bs, em.forget, em.category->eps(K),
          [bs](const Coalgebra<A>& p, const Coalgebra<A>& q) { return bs.id(bs(p.carrier, q.carrier)); }};
}

// ---- Idempotent comonads ----------------------------------------------------

/// U ⊣ cofree as an adjunction with source A^G: unit (A,a) → (GA, δ_A) is a,
/// counit is ε. A coreflection exactly when G is idempotent.
template <Category A>
Adjunction<CoalgebraCategory<A>, A> cofree_adjunction(CoalgebraPtr<A> co) {
  Functor<CoalgebraCategory<A>, A> U{[](const Coalgebra<A>& t) { return t.carrier; },
                                     [](const CoalgebraMorphism<A>& f) { return f.map; }};
  Functor<A, CoalgebraCategory<A>> cofree{[co](const ObjectOf<A>& x) { return co->cofree(x); },
                                          [co](const MorphismOf<A>& f) { return co->cofree_map(f); }};
  auto unit = [co](const Coalgebra<A>& t) -> CoalgebraMorphism<A> { return {t, co->cofree(t.carrier), t.coaction}; };
  auto counit = [co](const ObjectOf<A>& x) { return co->eps(x); };
  return {co, co->base_ptr(), U, cofree, unit, counit};
}

template <Category C>
struct IdempotentComparison {
  LawReport link;          // the three faces of the link diagram
  LawReport coreflection;  // triangles and the coreflection condition
  LawReport routes;        // skew axioms of both structures
  ComparisonReport comparison;
  bool ok() const {
    return link.ok() && coreflection.ok() && routes.ok() && is_structure_isomorphism(comparison);
  }
  Json to_json() const {
    return Json{{"link", link.to_json()},
                {"coreflection", coreflection.to_json()},
                {"routes", routes.to_json()},
                {"comparison", comparison.to_json()},
                {"ok", ok()}};
  }
};

/// For an idempotent comonad on C acting on itself by ⊗: checks the link
/// diagram
///   δ_{X⊗Y}∘G(1⊗ε_Y) = Gγ_{X,Y},  Gε_{X⊗Y}∘Gγ_{X,Y} = G(1⊗ε_Y),  δ∘Gε = 1,
/// builds the structure on C^G both through the coreflection U ⊣ cofree and by
/// lifting the identity warping, and compares them through
///   θ = γ_{A,B}∘(1⊗b): (A⊗B, γ∘(1⊗b)) → (G(A⊗B), δ),   θ0 = 1_{GI}.
/// Throws PreconditionError when δ or γ fails to be invertible on the sample.
template <Category C>
IdempotentComparison<C> idempotent_comparison(const ActegoryComonad<C, C>& m,
                                              const ObjectSample<CoalgebraCategory<C>>& coalgebras,
                                              const std::vector<std::pair<ObjectOf<C>, ObjectOf<C>>>& pairs) {
  using Co = CoalgebraCategory<C>;
  const auto& s = m.action.acting;
  const C& c = s.cat();
  const auto& G = m.G;
  for (const auto& [x, y] : pairs) {
    if (!c.inverse(m.delta(y))) throw PreconditionError("comonad is not idempotent: delta not invertible at " + c.describe(y).dump());
    if (!c.inverse(m.gamma(x, y))) throw PreconditionError("gamma is not invertible at " + Json::array({c.describe(x), c.describe(y)}).dump());
  }

  IdempotentComparison<C> out;
  for (const auto& [x, y] : pairs) {
    const auto xy = s(x, y);
    auto one_eps = G.map(s.map(s.id(x), m.eps(y)));
    auto g_gamma = G.map(m.gamma(x, y));
    auto where = [&] { return Json::array({c.describe(x), c.describe(y)}); };
    detail::equation(out.link, "link-square", c, c.compose(m.delta(xy), one_eps), g_gamma, where);
    detail::equation(out.link, "link-triangle", c, c.compose(G.map(m.eps(xy)), g_gamma), one_eps, where);
    detail::equation(out.link, "link-counit", c, c.compose(m.delta(xy), G.map(m.eps(xy))), c.identity(G(G(xy))), where);
  }

  auto em = em_category(m);
  auto co = em.category;
  auto adj = cofree_adjunction<C>(co);
  std::vector<Coalgebra<C>> cs = coalgebras.singles;
  std::vector<ObjectOf<C>> ys;
  for (const auto& [x, y] : pairs) ys.push_back(y);
  out.coreflection.merge(check_triangles(adj, cs, ys));
  std::vector<std::pair<Coalgebra<C>, ObjectOf<C>>> cond;
  for (std::size_t i = 0; i < cs.size() && !ys.empty(); ++i) cond.push_back({cs[i], ys[i % ys.size()]});
  auto condition = check_coreflection_condition(adj, s, cond);
  out.coreflection.law("coreflection-condition").instances += condition.tested;
  for (const auto& f : condition.failures) out.coreflection.law("coreflection-condition").violations.push_back(f);

  auto coref = build_coreflected_structure(adj, s);
  auto lifted = warping_to_skew(lift_warping(identity_warping(s), m, em));
  out.routes.merge(check_skew_axioms(coref.structure, coalgebras), "coreflection/");
  out.routes.merge(check_skew_axioms(lifted.structure, coalgebras), "lift/");

  const auto ls = lifted.structure;
  const auto cs_ = coref.structure;
  const auto gamma = m.gamma;
  auto theta = [s, ls, cs_, gamma](const Coalgebra<C>& p, const Coalgebra<C>& q) -> CoalgebraMorphism<C> {
    auto map = s.cat().compose(gamma(p.carrier, q.carrier), s.map(s.id(p.carrier), q.coaction));
    return {ls(p, q), cs_(p, q), map};
  };
  for (const auto& [p, q] : coalgebras.pairs) {
    auto t = theta(p, q);
    out.routes.record("theta-coalgebra-morphism", co->is_morphism(t.dom, t.cod, t.map),
                      Json::array({co->describe(p), co->describe(q)}));
  }
  auto cmp = structure_comparison<Co>(ls, cs_, co->identity(co->cofree(s.unit)), theta);
  out.comparison = check_opmonoidal(cmp, coalgebras);
  return out;
}

}  // namespace skewcat

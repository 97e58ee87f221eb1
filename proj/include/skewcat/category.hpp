#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewcat/report.hpp"

namespace skewcat {

/// A computable category: objects and morphisms are values, equality is
/// decidable, and composition/identities/inverses are procedures.
///
/// `compose(g, f)` is g∘f and throws StructuralError unless cod f = dom g.
template <class C>
concept Category = requires(const C& c, const typename C::Object& x, const typename C::Morphism& f) {
  { c.dom(f) } -> std::convertible_to<typename C::Object>;
  { c.cod(f) } -> std::convertible_to<typename C::Object>;
  { c.identity(x) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Morphism>;
  { c.same_object(x, x) } -> std::convertible_to<bool>;
  { c.same_morphism(f, f) } -> std::convertible_to<bool>;
  { c.inverse(f) } -> std::convertible_to<std::optional<typename C::Morphism>>;
  { c.describe(x) } -> std::convertible_to<Json>;
  { c.describe(f) } -> std::convertible_to<Json>;
};

/// Categories whose objects and hom sets can be listed.
template <class C>
concept EnumerableCategory = Category<C> && requires(const C& c, const typename C::Object& x) {
  { c.objects() } -> std::convertible_to<std::vector<typename C::Object>>;
  { c.hom(x, x) } -> std::convertible_to<std::vector<typename C::Morphism>>;
};

template <Category C>
using ObjectOf = typename C::Object;
template <Category C>
using MorphismOf = typename C::Morphism;

/// Applicative composite: comp(c, h, g, f) = h∘g∘f.
template <Category C>
MorphismOf<C> comp(const C&, const MorphismOf<C>& f) {
  return f;
}

template <Category C, class... Rest>
MorphismOf<C> comp(const C& c, const MorphismOf<C>& g, const MorphismOf<C>& f, const Rest&... rest) {
  return c.compose(g, comp(c, f, rest...));
}

/// Witness for an equation that failed: both sides, plus a finer diagnosis
/// when the category offers one (first differing element, ...).
template <Category C>
Json mismatch(const C& c, const MorphismOf<C>& lhs, const MorphismOf<C>& rhs) {
  if constexpr (requires { c.explain_difference(lhs, rhs); }) {
    return c.explain_difference(lhs, rhs);
  } else {
    return Json{{"lhs", c.describe(lhs)}, {"rhs", c.describe(rhs)}};
  }
}

// Throws StructuralError if m does not go from `from` to `to`.
template <Category C>
void expect_endpoints(const C& c, const MorphismOf<C>& m, const ObjectOf<C>& from, const ObjectOf<C>& to,
                      const std::string& what) {
  if (!c.same_object(c.dom(m), from) || !c.same_object(c.cod(m), to))
    throw StructuralError(what + ": component has the wrong domain or codomain");
}

/// Functor between computable categories given by its actions.
template <Category A, Category B>
struct Functor {
  std::function<ObjectOf<B>(const ObjectOf<A>&)> object;
  std::function<MorphismOf<B>(const MorphismOf<A>&)> morphism;

  ObjectOf<B> operator()(const ObjectOf<A>& x) const { return object(x); }
  MorphismOf<B> map(const MorphismOf<A>& f) const { return morphism(f); }
};

template <Category A>
Functor<A, A> identity_functor() {
  return {[](const ObjectOf<A>& x) { return x; }, [](const MorphismOf<A>& f) { return f; }};
}

template <Category A, Category B, Category D>
Functor<A, D> compose_functors(Functor<B, D> g, Functor<A, B> f) {
  return {[g, f](const ObjectOf<A>& x) { return g.object(f.object(x)); },
          [g, f](const MorphismOf<A>& m) { return g.morphism(f.morphism(m)); }};
}

/// Component family of a transformation between functors into B, indexed by
/// objects of A.
template <Category A, Category B>
using Components = std::function<MorphismOf<B>(const ObjectOf<A>&)>;

/// Checks functoriality of F on the given morphisms and composable pairs.
template <Category A, Category B>
LawReport check_functor_on(const A& a, const B& b, const Functor<A, B>& F, const std::vector<ObjectOf<A>>& objects,
                           const std::vector<std::pair<MorphismOf<A>, MorphismOf<A>>>& composable) {
  LawReport r;
  for (const auto& x : objects) {
    auto lhs = F.map(a.identity(x));
    auto rhs = b.identity(F(x));
    r.record("identity", b.same_morphism(lhs, rhs), Json{{"object", a.describe(x)}});
  }
  for (const auto& [g, f] : composable) {
    auto lhs = F.map(a.compose(g, f));
    auto rhs = b.compose(F.map(g), F.map(f));
    bool ok = b.same_morphism(lhs, rhs);
    r.record("composition", ok, ok ? Json{} : Json{{"g", a.describe(g)}, {"f", a.describe(f)}, {"diff", mismatch(b, lhs, rhs)}});
  }
  return r;
}

/// Naturality of t: F ⇒ G on the given morphisms of A:
///   G(f)∘t_x = t_y∘F(f) for f: x → y.
template <Category A, Category B>
void check_naturality_on(LawReport& r, const std::string& law, const A& a, const B& b, const Functor<A, B>& F,
                         const Functor<A, B>& G, const Components<A, B>& t, const std::vector<MorphismOf<A>>& morphisms) {
  for (const auto& f : morphisms) {
    auto x = a.dom(f);
    auto y = a.cod(f);
    auto tx = t(x);
    auto ty = t(y);
    expect_endpoints(b, tx, F(x), G(x), law);
    expect_endpoints(b, ty, F(y), G(y), law);
    auto lhs = b.compose(G.map(f), tx);
    auto rhs = b.compose(ty, F.map(f));
    bool ok = b.same_morphism(lhs, rhs);
    r.record(law, ok, ok ? Json{} : Json{{"morphism", a.describe(f)}, {"diff", mismatch(b, lhs, rhs)}});
  }
}

/// Adjunction left ⊣ right with left: C → D.
///   unit    η_x: x → right(left(x))   (x in C)
///   counit  ε_d: left(right(d)) → d   (d in D)
/// A reflection onto a full subcategory is Adjunction<X, A> with left = L and
/// right = N; a coreflection is Adjunction<A, X> with left = N and right = R.
template <Category C, Category D>
struct Adjunction {
  std::shared_ptr<const C> source;
  std::shared_ptr<const D> target;
  Functor<C, D> left;
  Functor<D, C> right;
  Components<C, C> unit;
  Components<D, D> counit;
};

/// Triangle identities (ε left)∘(left η) = 1 and (right ε)∘(η right) = 1 on
/// the given objects.
template <Category C, Category D>
LawReport check_triangles(const Adjunction<C, D>& adj, const std::vector<ObjectOf<C>>& xs,
                          const std::vector<ObjectOf<D>>& ds) {
  const C& c = *adj.source;
  const D& d = *adj.target;
  LawReport r;
  for (const auto& x : xs) {
    auto lx = adj.left(x);
    auto eta = adj.unit(x);
    expect_endpoints(c, eta, x, adj.right(lx), "unit");
    auto lhs = d.compose(adj.counit(lx), adj.left.map(eta));
    bool ok = d.same_morphism(lhs, d.identity(lx));
    r.record("triangle-left", ok, ok ? Json{} : Json{{"object", c.describe(x)}});
  }
  for (const auto& y : ds) {
    auto ry = adj.right(y);
    auto eps = adj.counit(y);
    expect_endpoints(d, eps, adj.left(ry), y, "counit");
    auto lhs = c.compose(adj.right.map(eps), adj.unit(ry));
    bool ok = c.same_morphism(lhs, c.identity(ry));
    r.record("triangle-right", ok, ok ? Json{} : Json{{"object", d.describe(y)}});
  }
  return r;
}

template <Category C>
Adjunction<C, C> identity_adjunction(std::shared_ptr<const C> c) {
  auto unit = [c](const ObjectOf<C>& x) { return c->identity(x); };
  return {c, c, identity_functor<C>(), identity_functor<C>(), unit, unit};
}

}  // namespace skewcat

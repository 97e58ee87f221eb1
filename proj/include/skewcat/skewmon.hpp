#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/report.hpp"
#include "skewcat/rng.hpp"

namespace skewcat {

/// Left skew monoidal structure on a computable category:
///   α_{A,B,C}: (A⊗B)⊗C → A⊗(B⊗C),  λ_A: I⊗A → A,  ρ_A: A → A⊗I.
template <Category C>
struct SkewMonoidal {
  std::shared_ptr<const C> carrier;
  std::function<ObjectOf<C>(const ObjectOf<C>&, const ObjectOf<C>&)> tensor;
  std::function<MorphismOf<C>(const MorphismOf<C>&, const MorphismOf<C>&)> tensor_map;
  ObjectOf<C> unit;
  std::function<MorphismOf<C>(const ObjectOf<C>&, const ObjectOf<C>&, const ObjectOf<C>&)> alpha;
  std::function<MorphismOf<C>(const ObjectOf<C>&)> lambda;
  std::function<MorphismOf<C>(const ObjectOf<C>&)> rho;

  const C& cat() const { return *carrier; }
  ObjectOf<C> operator()(const ObjectOf<C>& a, const ObjectOf<C>& b) const { return tensor(a, b); }
  MorphismOf<C> map(const MorphismOf<C>& f, const MorphismOf<C>& g) const { return tensor_map(f, g); }
  MorphismOf<C> id(const ObjectOf<C>& a) const { return carrier->identity(a); }
};

/// Object tuples to test laws on, one list per arity.
template <Category C>
struct ObjectSample {
  using O = ObjectOf<C>;
  std::vector<O> singles;
  std::vector<std::array<O, 2>> pairs;
  std::vector<std::array<O, 3>> triples;
  std::vector<std::array<O, 4>> quads;
};

/// Every tuple of objects of a finite category.
template <EnumerableCategory C>
ObjectSample<C> exhaustive_sample(const C& c) {
  ObjectSample<C> s;
  const auto obs = c.objects();
  s.singles = obs;
  for (const auto& a : obs)
    for (const auto& b : obs) {
      s.pairs.push_back({a, b});
      for (const auto& x : obs) {
        s.triples.push_back({a, b, x});
        for (const auto& y : obs) s.quads.push_back({a, b, x, y});
      }
    }
  return s;
}

/// Sample whose lower-arity tuples are the prefixes of the given quadruples.
template <Category C>
ObjectSample<C> sample_from_quads(const std::vector<std::array<ObjectOf<C>, 4>>& quads) {
  ObjectSample<C> s;
  s.quads = quads;
  for (const auto& q : quads) {
    s.singles.push_back(q[0]);
    s.pairs.push_back({q[0], q[1]});
    s.triples.push_back({q[0], q[1], q[2]});
  }
  return s;
}

/// Morphisms to test naturality and functoriality on.
template <Category C>
struct MorphismSample {
  using M = MorphismOf<C>;
  std::vector<M> singles;
  std::vector<std::array<M, 2>> pairs;
  std::vector<std::array<M, 3>> triples;
  std::vector<std::array<M, 2>> composable;  // {g, f} with cod f = dom g
};

/// All morphisms of a finite category; the pair and triple lists are
/// exhaustive up to `cap` entries and a seeded subsample beyond.
template <EnumerableCategory C>
MorphismSample<C> exhaustive_morphisms(const C& c, std::size_t cap = 200000) {
  MorphismSample<C> s;
  for (const auto& a : c.objects())
    for (const auto& b : c.objects())
      for (const auto& f : c.hom(a, b)) s.singles.push_back(f);
  const auto& ms = s.singles;
  const std::size_t m = ms.size();
  Rng rng(0x5eed);
  if (m * m <= cap) {
    for (const auto& f : ms)
      for (const auto& g : ms) s.pairs.push_back({f, g});
  } else {
    for (std::size_t i = 0; i < cap; ++i) s.pairs.push_back({rng.pick(ms), rng.pick(ms)});
  }
  if (m * m * m <= cap) {
    for (const auto& f : ms)
      for (const auto& g : ms)
        for (const auto& h : ms) s.triples.push_back({f, g, h});
  } else {
    for (std::size_t i = 0; i < cap; ++i) s.triples.push_back({rng.pick(ms), rng.pick(ms), rng.pick(ms)});
  }
  for (const auto& f : ms)
    for (const auto& g : ms)
      if (c.same_object(c.cod(f), c.dom(g))) s.composable.push_back({g, f});
  return s;
}

namespace detail {

template <Category C>
void equation(LawReport& r, const std::string& law, const C& c, const MorphismOf<C>& lhs, const MorphismOf<C>& rhs,
              const std::function<Json()>& instance) {
  const bool ok = c.same_morphism(lhs, rhs);
  if (ok) {
    r.record(law, true, Json{});
  } else {
    r.record(law, false, Json{{"instance", instance()}, {"diff", mismatch(c, lhs, rhs)}});
  }
}

template <Category C, class... O>
Json describe_all(const C& c, const O&... objs) {
  return Json::array({c.describe(objs)...});
}

}  // namespace detail

/// The five coherence axioms of a left skew monoidal category:
///   pentagon      α_{A,B,C⊗D}∘α_{A⊗B,C,D} = (1⊗α_{B,C,D})∘α_{A,B⊗C,D}∘(α_{A,B,C}⊗1)
///   left-unit     λ_{B⊗C}∘α_{I,B,C} = λ_B⊗1_C
///   middle-unit   (1_A⊗λ_C)∘α_{A,I,C}∘(ρ_A⊗1_C) = 1_{A⊗C}
///   right-unit    α_{A,B,I}∘ρ_{A⊗B} = 1_A⊗ρ_B
///   unit-unit     λ_I∘ρ_I = 1_I
/// Components with the wrong endpoints raise StructuralError.
template <Category C>
LawReport check_skew_axioms(const SkewMonoidal<C>& s, const ObjectSample<C>& sample) {
  const C& c = s.cat();
  const auto& I = s.unit;
  auto T = [&](const ObjectOf<C>& a, const ObjectOf<C>& b) { return s.tensor(a, b); };
  auto alpha = [&](const ObjectOf<C>& a, const ObjectOf<C>& b, const ObjectOf<C>& x) {
    auto m = s.alpha(a, b, x);
    expect_endpoints(c, m, T(T(a, b), x), T(a, T(b, x)), "alpha");
    return m;
  };
  auto lambda = [&](const ObjectOf<C>& a) {
    auto m = s.lambda(a);
    expect_endpoints(c, m, T(I, a), a, "lambda");
    return m;
  };
  auto rho = [&](const ObjectOf<C>& a) {
    auto m = s.rho(a);
    expect_endpoints(c, m, a, T(a, I), "rho");
    return m;
  };

  LawReport r;
  r.law("pentagon");
  r.law("left-unit");
  r.law("middle-unit");
  r.law("right-unit");
  r.law("unit-unit");
  for (const auto& [a, b, x, y] : sample.quads) {
    auto lhs = c.compose(alpha(a, b, T(x, y)), alpha(T(a, b), x, y));
    auto rhs = comp(c, s.map(s.id(a), alpha(b, x, y)), alpha(a, T(b, x), y), s.map(alpha(a, b, x), s.id(y)));
    detail::equation(r, "pentagon", c, lhs, rhs, [&] { return detail::describe_all(c, a, b, x, y); });
  }
  for (const auto& [b, x] : sample.pairs) {
    auto lhs = c.compose(lambda(T(b, x)), alpha(I, b, x));
    auto rhs = s.map(lambda(b), s.id(x));
    detail::equation(r, "left-unit", c, lhs, rhs, [&] { return detail::describe_all(c, b, x); });
  }
  for (const auto& [a, x] : sample.pairs) {
    auto lhs = comp(c, s.map(s.id(a), lambda(x)), alpha(a, I, x), s.map(rho(a), s.id(x)));
    detail::equation(r, "middle-unit", c, lhs, s.id(T(a, x)), [&] { return detail::describe_all(c, a, x); });
  }
  for (const auto& [a, b] : sample.pairs) {
    auto lhs = c.compose(alpha(a, b, I), rho(T(a, b)));
    auto rhs = s.map(s.id(a), rho(b));
    detail::equation(r, "right-unit", c, lhs, rhs, [&] { return detail::describe_all(c, a, b); });
  }
  {
    auto lhs = c.compose(lambda(I), rho(I));
    detail::equation(r, "unit-unit", c, lhs, s.id(I), [&] { return detail::describe_all(c, I); });
  }
  return r;
}

/// Functoriality of ⊗ and naturality of α, λ, ρ on sampled morphisms.
template <Category C>
LawReport check_skew_naturality(const SkewMonoidal<C>& s, const MorphismSample<C>& m) {
  const C& c = s.cat();
  LawReport r;
  auto T = [&](const ObjectOf<C>& a, const ObjectOf<C>& b) { return s.tensor(a, b); };
  for (const auto& [f, g] : m.pairs) {
    auto lhs = s.map(s.id(c.dom(f)), s.id(c.dom(g)));
    detail::equation(r, "tensor-identity", c, lhs, s.id(T(c.dom(f), c.dom(g))), [&] {
      return Json::array({c.describe(c.dom(f)), c.describe(c.dom(g))});
    });
  }
  const auto& cp = m.composable;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const auto& [g, f] = cp[i];
    const auto& [g2, f2] = cp[(i * 7 + 3) % cp.size()];
    auto lhs = c.compose(s.map(g, g2), s.map(f, f2));
    auto rhs = s.map(c.compose(g, f), c.compose(g2, f2));
    detail::equation(r, "tensor-interchange", c, lhs, rhs, [&] {
      return Json::array({c.describe(g), c.describe(f), c.describe(g2), c.describe(f2)});
    });
  }
  for (const auto& [f, g, h] : m.triples) {
    auto lhs = c.compose(s.alpha(c.cod(f), c.cod(g), c.cod(h)), s.map(s.map(f, g), h));
    auto rhs = c.compose(s.map(f, s.map(g, h)), s.alpha(c.dom(f), c.dom(g), c.dom(h)));
    detail::equation(r, "alpha-natural", c, lhs, rhs, [&] {
      return Json::array({c.describe(f), c.describe(g), c.describe(h)});
    });
  }
  for (const auto& f : m.singles) {
    auto lhs = c.compose(f, s.lambda(c.dom(f)));
    auto rhs = c.compose(s.lambda(c.cod(f)), s.map(s.id(s.unit), f));
    detail::equation(r, "lambda-natural", c, lhs, rhs, [&] { return c.describe(f); });
    auto lhs2 = c.compose(s.map(f, s.id(s.unit)), s.rho(c.dom(f)));
    auto rhs2 = c.compose(s.rho(c.cod(f)), f);
    detail::equation(r, "rho-natural", c, lhs2, rhs2, [&] { return c.describe(f); });
  }
  return r;
}

// ---- Opmonoidal and monoidal functors -----------------------------------

/// Opmonoidal functor F: (X,⊗,I) → (A,⊗̄,Ī) with
///   ψ_{X,Y}: F(X⊗Y) → FX⊗̄FY   and   ψ0: FI → Ī.
template <Category X, Category A>
struct OpmonoidalFunctor {
  SkewMonoidal<X> source;
  SkewMonoidal<A> target;
  Functor<X, A> functor;
  MorphismOf<A> psi0;
  std::function<MorphismOf<A>(const ObjectOf<X>&, const ObjectOf<X>&)> psi;
};

struct ComparisonReport {
  LawReport laws;
  bool unit_invertible = false;  // normal
  bool all_invertible = false;   // strong, on the sampled pairs
  std::size_t invertible_pairs = 0;
  std::size_t tested_pairs = 0;
  std::vector<Json> non_invertible;  // pairs whose comparison is not invertible

  bool ok() const { return laws.ok(); }
  Json to_json() const {
    return Json{{"laws", laws.to_json()},
                {"unit_invertible", unit_invertible},
                {"all_invertible", all_invertible},
                {"invertible_pairs", invertible_pairs},
                {"tested_pairs", tested_pairs},
                {"non_invertible", non_invertible}};
  }
};

/// The three opmonoidal axioms:
///   (O1) ᾱ∘(ψ⊗̄1)∘ψ_{X⊗Y,Z} = (1⊗̄ψ)∘ψ_{X,Y⊗Z}∘Fα
///   (O2) λ̄_{FX}∘(ψ0⊗̄1)∘ψ_{I,X} = Fλ_X
///   (O3) (1⊗̄ψ0)∘ψ_{X,I}∘Fρ_X = ρ̄_{FX}
/// plus an invertibility scan of ψ0 and of ψ on the sampled pairs.
template <Category X, Category A>
ComparisonReport check_opmonoidal(const OpmonoidalFunctor<X, A>& o, const ObjectSample<X>& sample) {
  const X& x = o.source.cat();
  const A& a = o.target.cat();
  const auto& F = o.functor;
  const auto& S = o.source;
  const auto& Tg = o.target;
  auto psi = [&](const ObjectOf<X>& p, const ObjectOf<X>& q) {
    auto m = o.psi(p, q);
    expect_endpoints(a, m, F(S(p, q)), Tg(F(p), F(q)), "psi");
    return m;
  };
  expect_endpoints(a, o.psi0, F(S.unit), Tg.unit, "psi0");

  ComparisonReport rep;
  auto& r = rep.laws;
  r.law("opmonoidal-associativity");
  r.law("opmonoidal-left-unit");
  r.law("opmonoidal-right-unit");
  for (const auto& [p, q, w] : sample.triples) {
    auto lhs = comp(a, Tg.alpha(F(p), F(q), F(w)), Tg.map(psi(p, q), Tg.id(F(w))), psi(S(p, q), w));
    auto rhs = comp(a, Tg.map(Tg.id(F(p)), psi(q, w)), psi(p, S(q, w)), F.map(S.alpha(p, q, w)));
    detail::equation(r, "opmonoidal-associativity", a, lhs, rhs, [&] { return detail::describe_all(x, p, q, w); });
  }
  for (const auto& p : sample.singles) {
    auto lhs = comp(a, Tg.lambda(F(p)), Tg.map(o.psi0, Tg.id(F(p))), psi(S.unit, p));
    detail::equation(r, "opmonoidal-left-unit", a, lhs, F.map(S.lambda(p)), [&] { return detail::describe_all(x, p); });
    auto lhs2 = comp(a, Tg.map(Tg.id(F(p)), o.psi0), psi(p, S.unit), F.map(S.rho(p)));
    detail::equation(r, "opmonoidal-right-unit", a, lhs2, Tg.rho(F(p)), [&] { return detail::describe_all(x, p); });
  }
  rep.unit_invertible = a.inverse(o.psi0).has_value();
  rep.all_invertible = rep.unit_invertible;
  for (const auto& [p, q] : sample.pairs) {
    ++rep.tested_pairs;
    if (a.inverse(psi(p, q))) {
      ++rep.invertible_pairs;
    } else {
      rep.all_invertible = false;
      rep.non_invertible.push_back(detail::describe_all(x, p, q));
    }
  }
  return rep;
}

/// Monoidal (lax) functor R: (X,⊗,I) → (A,⊗̄,Ī) with
///   φ_{X,Y}: RX⊗̄RY → R(X⊗Y)   and   φ0: Ī → RI.
template <Category X, Category A>
struct MonoidalFunctor {
  SkewMonoidal<X> source;
  SkewMonoidal<A> target;
  Functor<X, A> functor;
  MorphismOf<A> phi0;
  std::function<MorphismOf<A>(const ObjectOf<X>&, const ObjectOf<X>&)> phi;
};

/// The three monoidal axioms:
///   (M1) Rα∘φ_{X⊗Y,Z}∘(φ_{X,Y}⊗̄1) = φ_{X,Y⊗Z}∘(1⊗̄φ_{Y,Z})∘ᾱ
///   (M2) Rλ_X∘φ_{I,X}∘(φ0⊗̄1) = λ̄_{RX}
///   (M3) φ_{X,I}∘(1⊗̄φ0)∘ρ̄_{RX} = Rρ_X
template <Category X, Category A>
ComparisonReport check_monoidal(const MonoidalFunctor<X, A>& m, const ObjectSample<X>& sample) {
  const X& x = m.source.cat();
  const A& a = m.target.cat();
  const auto& R = m.functor;
  const auto& S = m.source;
  const auto& Tg = m.target;
  auto phi = [&](const ObjectOf<X>& p, const ObjectOf<X>& q) {
    auto f = m.phi(p, q);
    expect_endpoints(a, f, Tg(R(p), R(q)), R(S(p, q)), "phi");
    return f;
  };
  expect_endpoints(a, m.phi0, Tg.unit, R(S.unit), "phi0");

  ComparisonReport rep;
  auto& r = rep.laws;
  r.law("monoidal-associativity");
  r.law("monoidal-left-unit");
  r.law("monoidal-right-unit");
  for (const auto& [p, q, w] : sample.triples) {
    auto lhs = comp(a, R.map(S.alpha(p, q, w)), phi(S(p, q), w), Tg.map(phi(p, q), Tg.id(R(w))));
    auto rhs = comp(a, phi(p, S(q, w)), Tg.map(Tg.id(R(p)), phi(q, w)), Tg.alpha(R(p), R(q), R(w)));
    detail::equation(r, "monoidal-associativity", a, lhs, rhs, [&] { return detail::describe_all(x, p, q, w); });
  }
  for (const auto& p : sample.singles) {
    auto lhs = comp(a, R.map(S.lambda(p)), phi(S.unit, p), Tg.map(m.phi0, Tg.id(R(p))));
    detail::equation(r, "monoidal-left-unit", a, lhs, Tg.lambda(R(p)), [&] { return detail::describe_all(x, p); });
    auto lhs2 = comp(a, phi(p, S.unit), Tg.map(Tg.id(R(p)), m.phi0), Tg.rho(R(p)));
    detail::equation(r, "monoidal-right-unit", a, lhs2, R.map(S.rho(p)), [&] { return detail::describe_all(x, p); });
  }
  rep.unit_invertible = a.inverse(m.phi0).has_value();
  rep.all_invertible = rep.unit_invertible;
  for (const auto& [p, q] : sample.pairs) {
    ++rep.tested_pairs;
    if (a.inverse(phi(p, q))) {
      ++rep.invertible_pairs;
    } else {
      rep.all_invertible = false;
      rep.non_invertible.push_back(detail::describe_all(x, p, q));
    }
  }
  return rep;
}

/// An isomorphism of skew monoidal structures on the same category is an
/// identity functor that is strong opmonoidal; this packages the comparison
/// maps θ_{A,B}: A⊗B → A⊗'B and θ0: I → I' for check_opmonoidal.
template <Category C>
OpmonoidalFunctor<C, C> structure_comparison(
    const SkewMonoidal<C>& from, const SkewMonoidal<C>& to, MorphismOf<C> unit_map,
    std::function<MorphismOf<C>(const ObjectOf<C>&, const ObjectOf<C>&)> tensor_map) {
  return {from, to, identity_functor<C>(), std::move(unit_map), std::move(tensor_map)};
}

/// True when the comparison passes all three axioms and every sampled
/// comparison map (and the unit map) is invertible.
inline bool is_structure_isomorphism(const ComparisonReport& r) { return r.ok() && r.all_invertible; }

// ---- Internal homs (finite carriers) -------------------------------------

enum class HomSide { Left, Right };

/// Representing object for X(−⊗Y, Z) (left, written [Y,Z]) or for
/// X(X⊗−, Z) (right, written ⟨X,Z⟩), with its evaluation morphism.
template <Category C>
struct InternalHom {
  HomSide side = HomSide::Left;
  ObjectOf<C> object;
  MorphismOf<C> evaluation;  // left: H⊗Y → Z; right: X⊗H → Z
};

namespace detail {

template <Category C>
bool contains(const C& c, const std::vector<MorphismOf<C>>& v, const MorphismOf<C>& m) {
  for (const auto& x : v)
    if (c.same_morphism(x, m)) return true;
  return false;
}

// Is f ↦ post(f) a bijection from `domain` onto `codomain`?
template <Category C>
bool bijective_on(const C& c, const std::vector<MorphismOf<C>>& domain, const std::vector<MorphismOf<C>>& codomain,
                  const std::function<MorphismOf<C>(const MorphismOf<C>&)>& post) {
  if (domain.size() != codomain.size()) return false;
  std::vector<MorphismOf<C>> images;
  for (const auto& f : domain) {
    auto g = post(f);
    if (contains(c, images, g)) return false;
    images.push_back(g);
  }
  return true;
}

}  // namespace detail

/// Searches for [Y,Z]: an object H and u: H⊗Y → Z such that f ↦ u∘(f⊗1_Y)
/// is a bijection X(X,H) → X(X⊗Y,Z) for every X. First hit in object order.
template <EnumerableCategory C>
std::optional<InternalHom<C>> left_hom(const SkewMonoidal<C>& s, const ObjectOf<C>& y, const ObjectOf<C>& z) {
  const C& c = s.cat();
  const auto obs = c.objects();
  for (const auto& h : obs)
    for (const auto& u : c.hom(s(h, y), z)) {
      bool good = true;
      for (const auto& x : obs) {
        auto post = [&](const MorphismOf<C>& f) { return c.compose(u, s.map(f, s.id(y))); };
        if (!detail::bijective_on<C>(c, c.hom(x, h), c.hom(s(x, y), z), post)) {
          good = false;
          break;
        }
      }
      if (good) return InternalHom<C>{HomSide::Left, h, u};
    }
  return std::nullopt;
}

/// Searches for ⟨X,Z⟩: H and u: X⊗H → Z with g ↦ u∘(1_X⊗g) bijective
/// X(Y,H) → X(X⊗Y,Z) for every Y.
template <EnumerableCategory C>
std::optional<InternalHom<C>> right_hom(const SkewMonoidal<C>& s, const ObjectOf<C>& x, const ObjectOf<C>& z) {
  const C& c = s.cat();
  const auto obs = c.objects();
  for (const auto& h : obs)
    for (const auto& u : c.hom(s(x, h), z)) {
      bool good = true;
      for (const auto& y : obs) {
        auto post = [&](const MorphismOf<C>& g) { return c.compose(u, s.map(s.id(x), g)); };
        if (!detail::bijective_on<C>(c, c.hom(y, h), c.hom(s(x, y), z), post)) {
          good = false;
          break;
        }
      }
      if (good) return InternalHom<C>{HomSide::Right, h, u};
    }
  return std::nullopt;
}

/// The unique f: X → H with u∘(f⊗1) = g (left) or u∘(1⊗f) = g (right), where
/// g: X⊗Y → Z (left) or g: X⊗Y → Z with f: Y → H (right).
template <EnumerableCategory C>
std::optional<MorphismOf<C>> transpose(const SkewMonoidal<C>& s, const InternalHom<C>& hom, const ObjectOf<C>& other,
                                       const ObjectOf<C>& var, const MorphismOf<C>& g) {
  const C& c = s.cat();
  for (const auto& f : c.hom(var, hom.object)) {
    auto cand = hom.side == HomSide::Left ? c.compose(hom.evaluation, s.map(f, s.id(other)))
                                          : c.compose(hom.evaluation, s.map(s.id(other), f));
    if (c.same_morphism(cand, g)) return f;
  }
  return std::nullopt;
}

// ---- Reflective lemma ------------------------------------------------------

struct ReflectiveLemmaResult {
  bool in_image = false;            // (i)   Z ≅ NA for some A
  bool restriction_surjective = false;  // (ii)  X(η_X,1): X(NLX,Z) → X(X,Z) onto for all X
  bool unit_split_mono = false;     // (iii) η_Z has a retraction
  bool unit_invertible = false;     // (iv)  η_Z invertible
  bool restriction_bijective = false;   // (v)   X(η_X,1) bijective for all X

  bool all_equal() const {
    return in_image == restriction_surjective && in_image == unit_split_mono && in_image == unit_invertible &&
           in_image == restriction_bijective;
  }
  Json to_json() const {
    return Json{{"i", in_image}, {"ii", restriction_surjective}, {"iii", unit_split_mono},
                {"iv", unit_invertible}, {"v", restriction_bijective}};
  }
};

/// Throws PreconditionError unless every counit component is invertible and
/// the right adjoint is fully faithful.
template <EnumerableCategory X, EnumerableCategory A>
void require_reflection(const Adjunction<X, A>& adj) {
  const X& x = *adj.source;
  const A& a = *adj.target;
  for (const auto& b : a.objects())
    if (!a.inverse(adj.counit(b))) throw PreconditionError("counit is not invertible at " + a.describe(b).dump());
  for (const auto& b : a.objects())
    for (const auto& b2 : a.objects()) {
      auto src = a.hom(b, b2);
      auto tgt = x.hom(adj.right(b), adj.right(b2));
      if (src.size() != tgt.size()) throw PreconditionError("right adjoint is not fully faithful");
      std::vector<MorphismOf<X>> images;
      for (const auto& f : src) {
        auto g = adj.right.map(f);
        if (detail::contains(x, images, g)) throw PreconditionError("right adjoint is not faithful");
        images.push_back(g);
      }
    }
}

/// Evaluates the five equivalent conditions on Z for a reflection L ⊣ N.
template <EnumerableCategory X, EnumerableCategory A>
ReflectiveLemmaResult reflective_lemma(const Adjunction<X, A>& adj, const ObjectOf<X>& z) {
  require_reflection(adj);
  const X& x = *adj.source;
  const A& a = *adj.target;
  ReflectiveLemmaResult res;

  for (const auto& b : a.objects())
    for (const auto& f : x.hom(z, adj.right(b)))
      if (x.inverse(f)) res.in_image = true;

  res.restriction_surjective = true;
  res.restriction_bijective = true;
  for (const auto& w : x.objects()) {
    const auto eta = adj.unit(w);
    const auto from = x.hom(adj.right(adj.left(w)), z);
    const auto to = x.hom(w, z);
    std::vector<MorphismOf<X>> images;
    bool injective = true;
    for (const auto& g : from) {
      auto h = x.compose(g, eta);
      if (detail::contains(x, images, h)) injective = false;
      else images.push_back(h);
    }
    bool surjective = true;
    for (const auto& h : to)
      if (!detail::contains(x, images, h)) surjective = false;
    if (!surjective) res.restriction_surjective = false;
    if (!surjective || !injective) res.restriction_bijective = false;
  }

  const auto eta_z = adj.unit(z);
  for (const auto& nu : x.hom(x.cod(eta_z), z))
    if (x.same_morphism(x.compose(nu, eta_z), x.identity(z))) res.unit_split_mono = true;
  res.unit_invertible = x.inverse(eta_z).has_value();
  return res;
}

}  // namespace skewcat

#include "skewcat/warping.hpp"

#include <map>

namespace skewcat {

namespace {

using Key = std::vector<std::uint32_t>;

Key functor_key(const FinFunctor& f) {
  Key k;
  for (auto o : f.omap) k.push_back(o.index);
  for (auto m : f.mmap) k.push_back(m.index);
  return k;
}

// All functors a → a, by backtracking over morphism images.
std::vector<FinFunctor> enumerate_functors(const FinCatPtr& a, std::size_t cap) {
  const FinCategory& c = *a;
  const std::size_t n = c.object_count();
  const std::size_t m = c.morphism_count();
  std::vector<std::array<std::size_t, 3>> triples;  // (g, f, g∘f)
  for (auto g : c.morphisms())
    for (auto f : c.morphisms())
      if (c.composable(g, f)) triples.push_back({g.index, f.index, c.compose(g, f).index});

  std::vector<FinFunctor> out;
  std::vector<Ob> omap(n);
  std::vector<Mor> mmap(m);
  std::vector<bool> set(m, false);

  auto consistent = [&](std::size_t k) {
    for (const auto& [g, f, gf] : triples) {
      if (g != k && f != k && gf != k) continue;
      if (!set[g] || !set[f] || !set[gf]) continue;
      if (c.compose(mmap[g], mmap[f]) != mmap[gf]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == m) {
      if (out.size() >= cap) throw PreconditionError("endofunctor enumeration exceeds the functor cap");
      out.push_back(FinFunctor{a, a, omap, mmap});
      return;
    }
    const Mor f{static_cast<std::uint32_t>(k)};
    const Ob s = omap[c.dom(f).index];
    const Ob t = omap[c.cod(f).index];
    std::vector<Mor> choices;
    if (c.is_identity(f))
      choices.push_back(c.identity(s));
    else
      choices = c.hom(s, t);
    for (auto g : choices) {
      mmap[k] = g;
      set[k] = true;
      if (consistent(k)) assign(k + 1);
      set[k] = false;
    }
  };
  std::function<void(std::size_t)> objects = [&](std::size_t i) {
    if (i == n) {
      assign(0);
      return;
    }
    for (std::uint32_t o = 0; o < n; ++o) {
      omap[i] = Ob{o};
      objects(i + 1);
    }
  };
  objects(0);
  return out;
}

// All natural transformations f ⇒ g.
void enumerate_transformations(const FinCategory& c, const FinFunctor& f, const FinFunctor& g,
                               std::vector<std::vector<Mor>>& out, std::size_t cap) {
  const std::size_t n = c.object_count();
  std::vector<Mor> comp(n);
  auto natural_upto = [&](std::size_t i) {
    for (auto h : c.morphisms()) {
      const auto s = c.dom(h).index;
      const auto t = c.cod(h).index;
      if (s > i || t > i || (s != i && t != i)) continue;
      if (c.compose(g.map(h), comp[s]) != c.compose(comp[t], f.map(h))) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      if (out.size() >= cap) throw PreconditionError("endofunctor category exceeds the transformation cap");
      out.push_back(comp);
      return;
    }
    const Ob x{static_cast<std::uint32_t>(i)};
    for (auto t : c.hom(f(x), g(x))) {
      comp[i] = t;
      if (natural_upto(i)) go(i + 1);
    }
  };
  go(0);
}

}  // namespace

EndofunctorCategory endofunctor_category(FinCatPtr a, const EndofunctorCaps& caps) {
  if (a->object_count() > caps.max_objects || a->morphism_count() > caps.max_morphisms)
    throw PreconditionError("category too large for a materialised endofunctor category");
  EndofunctorCategory e;
  e.base = a;
  e.functors = enumerate_functors(a, caps.max_functors);
  const FinCategory& c = *a;
  const std::size_t nf = e.functors.size();

  CategoryTables t;
  const FinFunctor id = identity_functor(a);
  for (std::size_t i = 0; i < nf; ++i) t.objects.push_back(e.functors[i] == id ? "Id" : "F" + std::to_string(i));

  std::map<std::tuple<std::size_t, std::size_t, Key>, std::size_t> index;
  t.identities.assign(nf, 0);
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j) {
      std::vector<std::vector<Mor>> comps;
      enumerate_transformations(c, e.functors[i], e.functors[j], comps, caps.max_transformations);
      for (auto& comp : comps) {
        const std::size_t k = t.morphisms.size();
        if (k >= caps.max_transformations) throw PreconditionError("endofunctor category exceeds the transformation cap");
        Key key;
        bool identity = i == j;
        for (std::size_t x = 0; x < comp.size(); ++x) {
          key.push_back(comp[x].index);
          identity = identity && comp[x] == c.identity(e.functors[i](Ob{static_cast<std::uint32_t>(x)}));
        }
        index[{i, j, key}] = k;
        if (identity) t.identities[i] = k;
        t.morphisms.push_back({"t" + std::to_string(k), i, j});
        e.transformations.push_back(std::move(comp));
      }
    }
  const std::size_t nm = t.morphisms.size();
  t.composite.assign(nm, std::vector<std::optional<std::size_t>>(nm));
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f) {
      if (t.morphisms[f].tgt != t.morphisms[g].src) continue;
      Key key;
      for (std::size_t x = 0; x < c.object_count(); ++x)
        key.push_back(c.compose(e.transformations[g][x], e.transformations[f][x]).index);
      t.composite[g][f] = index.at({t.morphisms[f].src, t.morphisms[g].tgt, key});
    }
  e.cat = std::make_shared<const FinCategory>(std::move(t));
  return e;
}

std::optional<Ob> EndofunctorCategory::find_functor(const FinFunctor& f) const {
  for (std::size_t i = 0; i < functors.size(); ++i)
    if (functors[i].omap == f.omap && functors[i].mmap == f.mmap) return Ob{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

std::optional<Mor> EndofunctorCategory::find_transformation(Ob src, Ob tgt, const std::vector<Mor>& components) const {
  for (auto m : cat->hom(src, tgt))
    if (transformations[m.index] == components) return m;
  return std::nullopt;
}

SkewMonoidal<FinCategory> EndofunctorCategory::composition() const {
  const auto self = *this;
  auto tensor = [self](Ob f, Ob g) {
    auto fg = self.find_functor(compose(self.functors[f.index], self.functors[g.index]));
    if (!fg) throw StructuralError("composite functor missing from the endofunctor category");
    return *fg;
  };
  SkewMonoidal<FinCategory> s;
  s.carrier = cat;
  s.tensor = tensor;
  s.tensor_map = [self, tensor](Mor sigma, Mor tau) {
    const FinCategory& a = *self.base;
    const FinCategory& e = *self.cat;
    const auto& F = self.functors[e.dom(sigma).index];
    const auto& G2 = self.functors[e.cod(tau).index];
    std::vector<Mor> comps;
    for (auto x : a.objects())
      comps.push_back(a.compose(self.transformations[sigma.index][G2(x).index], F.map(self.transformations[tau.index][x.index])));
    auto m = self.find_transformation(tensor(e.dom(sigma), e.dom(tau)), tensor(e.cod(sigma), e.cod(tau)), comps);
    if (!m) throw StructuralError("horizontal composite missing from the endofunctor category");
    return *m;
  };
  auto id = self.find_functor(identity_functor(base));
  s.unit = *id;
  const auto c = cat;
  s.alpha = [c, tensor](Ob f, Ob g, Ob h) { return c->identity(tensor(tensor(f, g), h)); };
  s.lambda = [c](Ob f) { return c->identity(f); };
  s.rho = [c](Ob f) { return c->identity(f); };
  return s;
}

SkewAction<FinCategory, FinCategory> EndofunctorCategory::evaluation() const {
  const auto self = *this;
  SkewAction<FinCategory, FinCategory> act;
  act.acting = composition();
  act.carrier = base;
  act.star = [self](Ob f, Ob x) { return self.functors[f.index](x); };
  act.star_map = [self](Mor sigma, Mor h) {
    const auto& F = self.functors[self.cat->dom(sigma).index];
    return self.base->compose(self.transformations[sigma.index][self.base->cod(h).index], F.map(h));
  };
  act.alpha = [self](Ob f, Ob g, Ob x) { return self.base->identity(self.functors[f.index](self.functors[g.index](x))); };
  act.lambda = [self](Ob x) { return self.base->identity(x); };
  return act;
}

SkewWarping<FinCategory, FinCategory> evaluation_warping(const EndofunctorCategory& e,
                                                         const SkewMonoidal<FinCategory>& s) {
  const FinCategory& a = *e.base;
  if (!(s.cat() == a)) throw PreconditionError("structure is not on the base of the endofunctor category");
  const auto objs = a.objects();
  const auto mors = a.morphisms();

  // T(x) = x⊗−, T(f) = f⊗−
  std::vector<Ob> tobj;
  for (auto x : objs) {
    FinFunctor f{e.base, e.base, {}, {}};
    for (auto y : objs) f.omap.push_back(s(x, y));
    for (auto h : mors) f.mmap.push_back(s.map(s.id(x), h));
    auto o = e.find_functor(f);
    if (!o) throw PreconditionError("x⊗- is not a functor for x = " + a.name(x));
    tobj.push_back(*o);
  }
  auto family = [&](Ob src, Ob tgt, const std::function<Mor(Ob)>& comp, const std::string& what) {
    std::vector<Mor> comps;
    for (auto y : objs) comps.push_back(comp(y));
    auto m = e.find_transformation(src, tgt, comps);
    if (!m) throw PreconditionError(what + " is not a natural transformation");
    return *m;
  };
  std::vector<Mor> tmor;
  for (auto h : mors)
    tmor.push_back(family(tobj[a.dom(h).index], tobj[a.cod(h).index], [&](Ob y) { return s.map(h, s.id(y)); },
                          "f⊗- for f = " + a.name(h)));
  const auto act = e.evaluation();
  const auto& comp_s = act.acting;
  std::vector<std::vector<Mor>> v(objs.size());
  for (auto x : objs)
    for (auto y : objs)
      v[x.index].push_back(family(tobj[s(x, y).index], comp_s(tobj[x.index], tobj[y.index]),
                                  [&](Ob z) { return s.alpha(x, y, z); }, "alpha_{x,y,-}"));
  const Mor v0 = family(tobj[s.unit.index], comp_s.unit, [&](Ob z) { return s.lambda(z); }, "lambda");

  SkewWarping<FinCategory, FinCategory> w;
  w.action = act;
  w.T = Functor<FinCategory, FinCategory>{[tobj](Ob x) { return tobj[x.index]; }, [tmor](Mor h) { return tmor[h.index]; }};
  w.K = s.unit;
  w.v = [v](Ob x, Ob y) { return v[x.index][y.index]; };
  w.v0 = v0;
  w.k = s.rho;
  return w;
}

}  // namespace skewcat

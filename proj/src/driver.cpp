#include "skewcat/driver.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "skewcat/slice.hpp"
#include "skewcat/warping.hpp"

namespace skewcat {

namespace {

using Kind = Environment::Kind;
using Err = InputError::Kind;

// Bound on the coalgebra morphism pairs tested for strictness of U.
constexpr std::size_t kMaxMorphismPairs = 4096;

[[noreturn]] void fail(Err k, const Statement& st, const std::string& msg) { throw InputError(k, st.pos, msg); }

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::category: return "category";
    case Kind::map: return "map";
    case Kind::fibred: return "fibred set";
    case Kind::functor: return "functor";
    case Kind::adjunction: return "adjunction";
    case Kind::skew: return "skew structure";
    case Kind::warping: return "warping";
    case Kind::comonad: return "comonad";
  }
  return "declaration";
}

Ob object_named(const FinCategory& c, const std::string& cat, const std::string& n, const Statement& st) {
  auto o = c.find_object(n);
  if (!o) fail(Err::resolution, st, "unknown object '" + n + "' in category " + cat);
  return *o;
}

Mor morphism_named(const FinCategory& c, const std::string& cat, const std::string& n, const Statement& st) {
  auto m = c.find_morphism(n);
  if (!m) fail(Err::resolution, st, "unknown morphism '" + n + "' in category " + cat);
  return *m;
}

// A morphism given explicitly must have the expected endpoints.
Mor typed_morphism(const FinCategory& c, const std::string& cat, const std::string& n, Ob from, Ob to,
                   const Statement& st) {
  const Mor m = morphism_named(c, cat, n, st);
  if (c.dom(m) != from || c.cod(m) != to)
    fail(Err::structure, st, "'" + n + "' must go " + c.name(from) + " -> " + c.name(to));
  return m;
}

// The unique arrow from -> to, or a totality error naming the missing entry.
Mor unique_or_missing(const FinCategory& c, Ob from, Ob to, const Statement& decl, const std::string& entry) {
  const auto& h = c.hom(from, to);
  if (h.size() != 1)
    fail(Err::totality, decl,
         "missing entry '" + entry + "' (" + std::to_string(h.size()) + " arrows " + c.name(from) + " -> " +
             c.name(to) + ")");
  return h.front();
}

class Resolver {
 public:
  Environment env;

  void declaration(const Statement& d) {
    const std::string& name = d.args.at(0);
    if (env.kinds.count(name)) fail(Err::resolution, d, "'" + name + "' is already declared");
    if (d.form == "category") {
      env.categories[name] = category(d);
      env.kinds[name] = Kind::category;
    } else if (d.form == "map") {
      env.maps.emplace(name, map(d));
      env.kinds[name] = Kind::map;
    } else if (d.form == "fibred") {
      env.fibred.emplace(name, fibred(d));
      env.kinds[name] = Kind::fibred;
    } else if (d.form == "functor") {
      env.functors.emplace(name, functor(d));
      env.kinds[name] = Kind::functor;
    } else if (d.form == "adjunction") {
      env.adjunctions.emplace(name, adjunction(d));
      env.kinds[name] = Kind::adjunction;
    } else if (d.form == "reflection") {
      env.adjunctions.emplace(name, reflection(d));
      env.kinds[name] = Kind::adjunction;
    } else if (d.form == "skew") {
      env.skews.emplace(name, skew(d));
      env.kinds[name] = Kind::skew;
    } else if (d.form == "warping") {
      env.warpings.emplace(name, warping(d));
      env.kinds[name] = Kind::warping;
    } else if (d.form == "comonad") {
      env.comonads.emplace(name, comonad(d));
      env.kinds[name] = Kind::comonad;
    } else {
      fail(Err::syntax, d, "unknown declaration '" + d.form + "'");
    }
  }

  void directive(const Statement& d) const;

 private:
  const std::string& require(const Statement& st, const std::string& name, Kind k) const {
    auto it = env.kinds.find(name);
    if (it == env.kinds.end()) fail(Err::resolution, st, "unknown name '" + name + "'");
    if (it->second != k)
      fail(Err::resolution, st, "'" + name + "' is a " + kind_name(it->second) + ", expected a " + kind_name(k));
    return name;
  }

  FinCatPtr category(const Statement& d) {
    FinCategoryBuilder b;
    std::vector<std::string> objects;
    std::map<std::string, std::string> identity_names;
    for (const auto& st : d.body) {
      if (st.form == "objects") {
        for (const auto& o : st.args) {
          if (std::find(objects.begin(), objects.end(), o) != objects.end())
            fail(Err::structure, st, "duplicate object '" + o + "'");
          objects.push_back(o);
        }
      }
    }
    for (const auto& st : d.body) {
      if (st.form != "identity") continue;
      if (std::find(objects.begin(), objects.end(), st.args[0]) == objects.end())
        fail(Err::resolution, st, "unknown object '" + st.args[0] + "'");
      if (!identity_names.emplace(st.args[0], st.args[1]).second)
        fail(Err::structure, st, "identity of '" + st.args[0] + "' named twice");
    }
    std::map<std::string, Ob> obs;
    std::map<std::string, Mor> mors;
    auto add_name = [&mors](const Statement& st, const std::string& n, Mor m) {
      if (!mors.emplace(n, m).second) fail(Err::structure, st, "duplicate morphism '" + n + "'");
    };
    for (const auto& o : objects) {
      obs[o] = b.add_object(o, identity_names.count(o) ? identity_names[o] : std::string{});
      add_name(d, identity_names.count(o) ? identity_names[o] : "id" + o, b.identity(obs[o]));
    }
    auto ob = [&](const Statement& st, const std::string& n) {
      auto it = obs.find(n);
      if (it == obs.end()) fail(Err::resolution, st, "unknown object '" + n + "'");
      return it->second;
    };
    auto mor = [&](const Statement& st, const std::string& n) {
      auto it = mors.find(n);
      if (it == mors.end()) fail(Err::resolution, st, "unknown morphism '" + n + "'");
      return it->second;
    };
    for (const auto& st : d.body) {
      if (st.form != "mor") continue;
      const Ob s = ob(st, st.args[1]);
      const Ob t = ob(st, st.args[2]);
      add_name(st, st.args[0], b.add_morphism(st.args[0], s, t));
    }
    // Endpoints by morphism index, for composability checks.
    std::map<std::uint32_t, std::pair<Ob, Ob>> endpoints;
    for (const auto& o : objects) endpoints[b.identity(obs[o]).index] = {obs[o], obs[o]};
    for (const auto& st : d.body)
      if (st.form == "mor") endpoints[mors[st.args[0]].index] = {obs[st.args[1]], obs[st.args[2]]};
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& st : d.body) {
      if (st.form != "comp") continue;
      const Mor g = mor(st, st.args[0]);
      const Mor f = mor(st, st.args[1]);
      const Mor h = mor(st, st.args[2]);
      const auto [fs, ft] = endpoints[f.index];
      const auto [gs, gt] = endpoints[g.index];
      const auto [hs, ht] = endpoints[h.index];
      if (ft != gs) fail(Err::structure, st, st.args[0] + " and " + st.args[1] + " are not composable");
      if (hs != fs || ht != gt)
        fail(Err::structure, st, "'" + st.args[2] + "' has the wrong endpoints for " + st.args[0] + " o " + st.args[1]);
      if (!seen.insert({g.index, f.index}).second)
        fail(Err::structure, st, "composite " + st.args[0] + " " + st.args[1] + " given twice");
      try {
        b.set_composite(g, f, h);
      } catch (const StructuralError& e) {
        fail(Err::structure, st, e.what());
      }
    }
    try {
      return std::make_shared<const FinCategory>(b.finish());
    } catch (const StructuralError& e) {
      fail(Err::totality, d, std::string("category ") + d.args[0] + ": " + e.what());
    }
  }

  Environment::MapEntry map(const Statement& d) {
    const auto& cod_name = require(d, d.args[2], Kind::category);
    const FinCategory& cod = *env.categories.at(cod_name);
    const std::string& dom_name = d.args[1];
    std::vector<std::string> names;
    std::vector<std::size_t> values;
    std::map<std::string, std::size_t> at;
    for (const auto& st : d.body) {
      if (!at.emplace(st.args[0], values.size()).second)
        fail(Err::structure, st, "'" + st.args[0] + "' is mapped twice");
      names.push_back(st.args[0]);
      values.push_back(object_named(cod, cod_name, st.args[1], st).index);
    }
    auto it = env.kinds.find(dom_name);
    if (it != env.kinds.end() && it->second == Kind::category) {
      // A declared category as domain fixes the elements and their order.
      const FinCategory& dom = *env.categories.at(dom_name);
      std::vector<std::size_t> ordered;
      std::vector<std::string> ordered_names;
      for (auto o : dom.objects()) {
        auto e = at.find(dom.name(o));
        if (e == at.end()) fail(Err::totality, d, "map " + d.args[0] + " does not assign object '" + dom.name(o) + "'");
        ordered.push_back(values[e->second]);
        ordered_names.push_back(dom.name(o));
      }
      for (const auto& st : d.body)
        if (!dom.find_object(st.args[0])) fail(Err::resolution, st, "unknown object '" + st.args[0] + "' in " + dom_name);
      values = std::move(ordered);
      names = std::move(ordered_names);
    }
    return {IndexMap(cod.object_count(), values, names), cod_name};
  }

  Environment::FibredEntry fibred(const Statement& d) {
    const auto& cat_name = require(d, d.args[1], Kind::category);
    const FinCategory& c = *env.categories.at(cat_name);
    std::vector<std::vector<Tag>> fibres(c.object_count());
    std::vector<bool> given(c.object_count(), false);
    for (const auto& st : d.body) {
      const Ob o = object_named(c, cat_name, st.args[0], st);
      if (given[o.index]) fail(Err::structure, st, "fibre over '" + st.args[0] + "' given twice");
      given[o.index] = true;
      for (std::size_t k = 1; k < st.args.size(); ++k) fibres[o.index].push_back(Tag::atom(st.args[k]));
    }
    try {
      return {FibredSet(std::move(fibres)), cat_name};
    } catch (const StructuralError& e) {
      fail(Err::structure, d, e.what());
    }
  }

  // Sorts `x |-> y` entries into object and morphism assignments.
  template <class OnObject, class OnMorphism>
  static void assignments(const Statement& d, const FinCategory& c, const std::string& cat, OnObject on_object,
                          OnMorphism on_morphism) {
    for (const auto& st : d.body) {
      if (st.form != "assign") continue;
      auto o = c.find_object(st.args[0]);
      auto m = c.find_morphism(st.args[0]);
      if (o && m) fail(Err::resolution, st, "'" + st.args[0] + "' names both an object and a morphism of " + cat);
      if (!o && !m) fail(Err::resolution, st, "unknown name '" + st.args[0] + "' in " + cat);
      if (o) on_object(st, *o);
      else on_morphism(st, *m);
    }
  }

  FinFunctor functor(const Statement& d) {
    const auto& dn = require(d, d.args[1], Kind::category);
    const auto& cn = require(d, d.args[2], Kind::category);
    auto dom = env.categories.at(dn);
    auto cod = env.categories.at(cn);
    std::vector<std::optional<Ob>> omap(dom->object_count());
    std::vector<std::optional<Mor>> mmap(dom->morphism_count());
    assignments(
        d, *dom, dn,
        [&](const Statement& st, Ob o) {
          if (omap[o.index]) fail(Err::structure, st, "'" + st.args[0] + "' is mapped twice");
          omap[o.index] = object_named(*cod, cn, st.args[1], st);
        },
        [&](const Statement& st, Mor m) {
          if (mmap[m.index]) fail(Err::structure, st, "'" + st.args[0] + "' is mapped twice");
          mmap[m.index] = morphism_named(*cod, cn, st.args[1], st);
        });
    FinFunctor F{dom, cod, {}, {}};
    for (auto o : dom->objects()) {
      if (!omap[o.index]) fail(Err::totality, d, "functor " + d.args[0] + " does not map object '" + dom->name(o) + "'");
      F.omap.push_back(*omap[o.index]);
    }
    for (auto m : dom->morphisms()) {
      if (mmap[m.index]) {
        F.mmap.push_back(*mmap[m.index]);
      } else if (dom->is_identity(m)) {
        F.mmap.push_back(cod->identity(F.omap[dom->dom(m).index]));
      } else {
        fail(Err::totality, d, "functor " + d.args[0] + " does not map morphism '" + dom->name(m) + "'");
      }
    }
    return F;
  }

  Environment::AdjunctionEntry adjunction(const Statement& d) {
    const FinFunctor& L = env.functors.at(require(d, d.args[1], Kind::functor));
    const FinFunctor& R = env.functors.at(require(d, d.args[2], Kind::functor));
    std::vector<std::optional<Mor>> unit(L.dom->object_count()), counit(L.cod->object_count());
    for (const auto& st : d.body) {
      const bool is_unit = st.form == "unit";
      const FinCategory& c = is_unit ? *L.dom : *L.cod;
      auto& slot = is_unit ? unit : counit;
      const std::string label = is_unit ? "domain of " + d.args[1] : "codomain of " + d.args[1];
      const Ob o = object_named(c, label, st.args[0], st);
      if (slot[o.index]) fail(Err::structure, st, st.form + " at '" + st.args[0] + "' given twice");
      slot[o.index] = morphism_named(c, label, st.args[1], st);
    }
    auto total = [&](const std::vector<std::optional<Mor>>& v, const FinCategory& c, const char* what) {
      std::vector<Mor> out;
      for (auto o : c.objects()) {
        if (!v[o.index]) fail(Err::totality, d, std::string("missing ") + what + " component at '" + c.name(o) + "'");
        out.push_back(*v[o.index]);
      }
      return out;
    };
    auto u = total(unit, *L.dom, "unit");
    auto e = total(counit, *L.cod, "counit");
    try {
      return {fin_adjunction(L, R, std::move(u), std::move(e)), d.args[1]};
    } catch (const StructuralError& ex) {
      fail(Err::structure, d, ex.what());
    }
  }

  Environment::AdjunctionEntry reflection(const Statement& d) {
    const auto& cn = require(d, d.args[1], Kind::category);
    auto c = env.categories.at(cn);
    std::vector<Ob> objects;
    for (std::size_t k = 2; k < d.args.size(); ++k) {
      const Ob o = object_named(*c, cn, d.args[k], d);
      if (std::find(objects.begin(), objects.end(), o) != objects.end())
        fail(Err::structure, d, "object '" + d.args[k] + "' listed twice");
      objects.push_back(o);
    }
    auto r = find_reflection(c, objects);
    if (!r) fail(Err::structure, d, "the listed objects of " + cn + " do not form a reflective subcategory");
    return {r->adjunction(), cn};
  }

  Environment::SkewEntry skew(const Statement& d) {
    const auto& cn = require(d, d.args[1], Kind::category);
    auto c = env.categories.at(cn);
    const std::size_t n = c->object_count();
    const std::size_t m = c->morphism_count();
    std::optional<Ob> unit;
    std::vector<std::optional<Ob>> tensor(n * n);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::string, const Statement*>> tmap;
    std::map<std::vector<std::uint32_t>, std::pair<std::string, const Statement*>> alpha;
    std::vector<std::optional<std::pair<std::string, const Statement*>>> lambda(n), rho(n);
    auto ob = [&](const Statement& st, const std::string& s) { return object_named(*c, cn, s, st); };
    auto once = [](bool inserted, const Statement& st) {
      if (!inserted) fail(Err::structure, st, st.form + " entry given twice");
    };
    for (const auto& st : d.body) {
      const auto& a = st.args;
      if (st.form == "unit") {
        once(!unit, st);
        unit = ob(st, a[0]);
      } else if (st.form == "tensor") {
        auto& slot = tensor[ob(st, a[0]).index * n + ob(st, a[1]).index];
        once(!slot, st);
        slot = ob(st, a[2]);
      } else if (st.form == "tensor-map") {
        const auto f = morphism_named(*c, cn, a[0], st), g = morphism_named(*c, cn, a[1], st);
        once(tmap.emplace(std::pair{f.index, g.index}, std::pair{a[2], &st}).second, st);
      } else if (st.form == "alpha") {
        once(alpha.emplace(std::vector{ob(st, a[0]).index, ob(st, a[1]).index, ob(st, a[2]).index}, std::pair{a[3], &st})
                 .second,
             st);
      } else {
        auto& slot = (st.form == "lambda" ? lambda : rho)[ob(st, a[0]).index];
        once(!slot, st);
        slot = std::pair{a[1], &st};
      }
    }
    if (!unit) fail(Err::totality, d, "skew structure " + d.args[0] + " has no unit");
    std::vector<Ob> T(n * n);
    for (auto a : c->objects())
      for (auto b : c->objects()) {
        const auto& slot = tensor[a.index * n + b.index];
        if (!slot) fail(Err::totality, d, "missing entry 'tensor " + c->name(a) + " " + c->name(b) + "'");
        T[a.index * n + b.index] = *slot;
      }
    auto t = [&T, n](Ob a, Ob b) { return T[a.index * n + b.index]; };
    auto component = [&](const std::optional<std::pair<std::string, const Statement*>>& given, Ob from, Ob to,
                         const std::string& entry) {
      if (given) return typed_morphism(*c, cn, given->first, from, to, *given->second);
      return unique_or_missing(*c, from, to, d, entry);
    };

    auto maps = std::make_shared<std::vector<Mor>>(m * m);
    for (auto f : c->morphisms())
      for (auto g : c->morphisms()) {
        const Ob from = t(c->dom(f), c->dom(g)), to = t(c->cod(f), c->cod(g));
        auto it = tmap.find({f.index, g.index});
        std::optional<std::pair<std::string, const Statement*>> given;
        if (it != tmap.end()) given = it->second;
        Mor h;
        if (!given && c->is_identity(f) && c->is_identity(g)) h = c->identity(from);
        else h = component(given, from, to, "tensor-map " + c->name(f) + " " + c->name(g));
        (*maps)[f.index * m + g.index] = h;
      }
    auto alphas = std::make_shared<std::vector<Mor>>(n * n * n);
    for (auto a : c->objects())
      for (auto b : c->objects())
        for (auto x : c->objects()) {
          auto it = alpha.find({a.index, b.index, x.index});
          std::optional<std::pair<std::string, const Statement*>> given;
          if (it != alpha.end()) given = it->second;
          (*alphas)[(a.index * n + b.index) * n + x.index] =
              component(given, t(t(a, b), x), t(a, t(b, x)),
                        "alpha " + c->name(a) + " " + c->name(b) + " " + c->name(x));
        }
    auto lambdas = std::make_shared<std::vector<Mor>>();
    auto rhos = std::make_shared<std::vector<Mor>>();
    for (auto a : c->objects()) {
      lambdas->push_back(component(lambda[a.index], t(*unit, a), a, "lambda " + c->name(a)));
      rhos->push_back(component(rho[a.index], a, t(a, *unit), "rho " + c->name(a)));
    }

    FinSkew s;
    s.carrier = c;
    s.unit = *unit;
    auto tab = std::make_shared<std::vector<Ob>>(std::move(T));
    s.tensor = [tab, n](Ob a, Ob b) { return (*tab)[a.index * n + b.index]; };
    s.tensor_map = [maps, m](Mor f, Mor g) { return (*maps)[f.index * m + g.index]; };
    s.alpha = [alphas, n](Ob a, Ob b, Ob x) { return (*alphas)[(a.index * n + b.index) * n + x.index]; };
    s.lambda = [lambdas](Ob a) { return (*lambdas)[a.index]; };
    s.rho = [rhos](Ob a) { return (*rhos)[a.index]; };
    return {s, cn};
  }

  Environment::WarpingEntry warping(const Statement& d) {
    const auto& sn = require(d, d.args[2], Kind::skew);
    const auto& s = env.skews.at(sn).structure;
    const std::string& kind = d.args[1];
    if (kind == "identity") return {identity_warping(s), sn, kind};
    if (kind == "evaluation") {
      try {
        auto e = endofunctor_category(s.carrier);
        return {evaluation_warping(e, s), sn, kind};
      } catch (const PreconditionError& ex) {
        fail(Err::structure, d, ex.what());
      }
    }
    fail(Err::resolution, d, "unknown warping kind '" + kind + "' (expected identity or evaluation)");
  }

  Environment::ComonadEntry comonad(const Statement& d) {
    const auto& sn = require(d, d.args[1], Kind::skew);
    const auto& s = env.skews.at(sn).structure;
    const auto c = s.carrier;
    const std::string& cn = env.skews.at(sn).category;
    std::vector<std::optional<Ob>> gobj(c->object_count());
    std::vector<std::optional<std::pair<std::string, const Statement*>>> gmor(c->morphism_count());
    assignments(
        d, *c, cn,
        [&](const Statement& st, Ob o) {
          if (gobj[o.index]) fail(Err::structure, st, "'" + st.args[0] + "' is mapped twice");
          gobj[o.index] = object_named(*c, cn, st.args[1], st);
        },
        [&](const Statement& st, Mor f) {
          if (gmor[f.index]) fail(Err::structure, st, "'" + st.args[0] + "' is mapped twice");
          gmor[f.index] = std::pair{st.args[1], &st};
        });
    std::vector<Ob> G;
    for (auto o : c->objects()) {
      if (!gobj[o.index]) fail(Err::totality, d, "comonad " + d.args[0] + " does not map object '" + c->name(o) + "'");
      G.push_back(*gobj[o.index]);
    }
    auto component = [&](const std::optional<std::pair<std::string, const Statement*>>& given, Ob from, Ob to,
                         const std::string& entry) {
      if (given) return typed_morphism(*c, cn, given->first, from, to, *given->second);
      return unique_or_missing(*c, from, to, d, entry);
    };
    std::vector<Mor> Gm;
    for (auto f : c->morphisms()) {
      const Ob from = G[c->dom(f).index], to = G[c->cod(f).index];
      if (!gmor[f.index] && c->is_identity(f)) Gm.push_back(c->identity(from));
      else Gm.push_back(component(gmor[f.index], from, to, c->name(f) + " |-> ?"));
    }
    using Given = std::optional<std::pair<std::string, const Statement*>>;
    std::vector<Given> delta(c->object_count()), eps(c->object_count());
    std::map<std::pair<std::uint32_t, std::uint32_t>, Given> gamma;
    for (const auto& st : d.body) {
      if (st.form == "assign") continue;
      if (st.form == "gamma") {
        const Ob x = object_named(*c, cn, st.args[0], st), a = object_named(*c, cn, st.args[1], st);
        if (!gamma.emplace(std::pair{x.index, a.index}, std::pair{st.args[2], &st}).second)
          fail(Err::structure, st, "gamma entry given twice");
        continue;
      }
      auto& slot = (st.form == "delta" ? delta : eps)[object_named(*c, cn, st.args[0], st).index];
      if (slot) fail(Err::structure, st, st.form + " entry given twice");
      slot = std::pair{st.args[1], &st};
    }
    std::vector<Mor> dl, ep;
    for (auto a : c->objects()) {
      const Ob ga = G[a.index];
      dl.push_back(component(delta[a.index], ga, G[ga.index], "delta " + c->name(a)));
      ep.push_back(component(eps[a.index], ga, a, "eps " + c->name(a)));
    }
    const std::size_t n = c->object_count();
    std::vector<Mor> gm(n * n);
    for (auto x : c->objects())
      for (auto a : c->objects()) {
        auto it = gamma.find({x.index, a.index});
        Given given = it == gamma.end() ? Given{} : it->second;
        gm[x.index * n + a.index] = component(given, s(x, G[a.index]), G[s(x, a).index],
                                              "gamma " + c->name(x) + " " + c->name(a));
      }

    ActegoryComonad<FinCategory, FinCategory> out;
    out.action = tensor_action(s);
    out.G = Functor<FinCategory, FinCategory>{[G](Ob a) { return G[a.index]; }, [Gm](Mor f) { return Gm[f.index]; }};
    out.delta = [dl](Ob a) { return dl[a.index]; };
    out.eps = [ep](Ob a) { return ep[a.index]; };
    out.gamma = [gm, n](Ob x, Ob a) { return gm[x.index * n + a.index]; };
    return {out, sn};
  }
};

// ---- Directives ------------------------------------------------------------

struct Signature {
  std::string_view verb;
  std::vector<Kind> args;
};

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> table{
      {"check-category", {Kind::category}},
      {"check-functor", {Kind::functor}},
      {"check-adjunction", {Kind::adjunction}},
      {"reflective-lemma", {Kind::adjunction}},
      {"check-skew", {Kind::skew}},
      {"reflection-theorem", {Kind::adjunction, Kind::skew}},
      {"closed-equivalences", {Kind::adjunction, Kind::skew}},
      {"slice-skew", {Kind::category}},
      {"tensor", {Kind::fibred, Kind::fibred}},
      {"coreflection", {Kind::category, Kind::map}},
      {"lift-comonad", {Kind::category, Kind::map}},
      {"idempotent-comparison", {Kind::category, Kind::map}},
      {"idempotent-comparison", {Kind::comonad}},
      {"check-warping", {Kind::warping}},
      {"check-comonad", {Kind::comonad}},
      {"lift", {Kind::warping, Kind::comonad}},
  };
  return table;
}

std::string expected_forms(std::string_view verb) {
  std::string out;
  for (const auto& s : signatures()) {
    if (s.verb != verb) continue;
    if (!out.empty()) out += " | ";
    out += std::string(verb);
    for (auto k : s.args) out += std::string(" <") + kind_name(k) + ">";
  }
  return out;
}

void Resolver::directive(const Statement& d) const {
  const std::string& verb = d.args.at(0);
  const std::vector<std::string> args(d.args.begin() + 1, d.args.end());
  bool known = false;
  for (const auto& s : signatures()) known |= s.verb == verb;
  if (!known) fail(Err::resolution, d, "unknown directive '" + verb + "'");
  for (const auto& a : args)
    if (!env.kinds.count(a)) fail(Err::resolution, d, "unknown name '" + a + "'");
  const Signature* match = nullptr;
  for (const auto& s : signatures()) {
    if (s.verb != verb || s.args.size() != args.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < args.size(); ++k) ok &= env.kinds.at(args[k]) == s.args[k];
    if (ok) match = &s;
  }
  if (match == nullptr) fail(Err::resolution, d, "bad arguments; expected " + expected_forms(verb));

  const auto& kinds = match->args;
  if (kinds.size() == 2 && kinds[0] == Kind::category && kinds[1] == Kind::map &&
      env.maps.at(args[1]).codomain != args[0])
    fail(Err::resolution, d, "map " + args[1] + " does not land in " + args[0]);
  if (verb == "tensor" && env.fibred.at(args[0]).category != env.fibred.at(args[1]).category)
    fail(Err::resolution, d, args[0] + " and " + args[1] + " are fibred over different categories");
  if (kinds.size() == 2 && kinds[0] == Kind::adjunction &&
      env.adjunctions.at(args[0]).source != env.skews.at(args[1]).category)
    fail(Err::resolution, d, "skew structure " + args[1] + " is not on the source of " + args[0]);
  if (verb == "lift") {
    const auto& w = env.warpings.at(args[0]);
    if (w.kind != "identity" || w.skew != env.comonads.at(args[1]).skew)
      fail(Err::resolution, d, "lift needs the identity warping of the structure " + args[1] + " acts on");
  }
}

LawReport condition_laws(const std::string& law, const ConditionReport& c) {
  LawReport r;
  auto& check = r.law(law);
  check.instances = c.tested;
  check.violations = c.failures;
  return r;
}

Json capped(const std::vector<Json>& v, std::size_t cap = 20) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) out.push_back(v[i]);
  return out;
}

template <EnumerableCategory C>
std::vector<std::pair<ObjectOf<C>, ObjectOf<C>>> object_pairs(const C& x, const C& y) {
  std::vector<std::pair<ObjectOf<C>, ObjectOf<C>>> out;
  for (const auto& p : x.objects())
    for (const auto& q : y.objects()) out.push_back({p, q});
  return out;
}

void record_cardinality(LawReport& r, const FinCategory& c, const FibredSet& x, const FibredSet& y,
                        const FibredSet& t) {
  for (std::size_t j = 0; j < c.object_count(); ++j) {
    std::size_t expected = 0;
    for (std::size_t i = 0; i < c.object_count(); ++i)
      expected += x.size(i) * c.hom(Ob{static_cast<std::uint32_t>(i)}, Ob{static_cast<std::uint32_t>(j)}).size() * y.size(j);
    const bool ok = t.size(j) == expected;
    r.record("tensor-cardinality", ok,
             ok ? Json{} : Json{{"fibre", c.name(Ob{static_cast<std::uint32_t>(j)})}, {"expected", expected}, {"actual", t.size(j)}});
  }
}

struct Outcome {
  LawReport laws;
  Json witnesses = Json::object();
};

class Runner {
 public:
  Runner(const Environment& env, const RunConfig& cfg) : env_(env), cfg_(cfg) {}

  Outcome execute(const std::string& verb, const std::vector<std::string>& a) const {
    Rng rng(cfg_.seed);
    Outcome out;
    auto& r = out.laws;
    auto& w = out.witnesses;
    if (verb == "check-category") {
      const auto& c = *env_.categories.at(a[0]);
      r = check_category(c);
      w = {{"objects", c.object_count()}, {"morphisms", c.morphism_count()}};
    } else if (verb == "check-functor") {
      r = check_functor(env_.functors.at(a[0]));
    } else if (verb == "check-adjunction") {
      r = check_fin_adjunction(env_.adjunctions.at(a[0]).adjunction);
    } else if (verb == "reflective-lemma") {
      const auto& adj = env_.adjunctions.at(a[0]).adjunction;
      Json table = Json::object();
      for (auto z : adj.source->objects()) {
        auto res = reflective_lemma(adj, z);
        r.record("conditions-agree", res.all_equal(), Json{{"object", adj.source->name(z)}, {"conditions", res.to_json()}});
        table[adj.source->name(z)] = res.to_json();
      }
      w["table"] = table;
    } else if (verb == "check-skew") {
      const auto& s = env_.skews.at(a[0]).structure;
      r = check_skew_axioms(s, exhaustive_sample(s.cat()));
      r.merge(check_skew_naturality(s, exhaustive_morphisms(s.cat())), "naturality/");
      w["objects"] = s.cat().object_count();
    } else if (verb == "reflection-theorem") {
      reflection_theorem(env_.adjunctions.at(a[0]).adjunction, env_.skews.at(a[1]).structure, out);
    } else if (verb == "closed-equivalences") {
      auto rep = check_closed_equivalences(env_.adjunctions.at(a[0]).adjunction, env_.skews.at(a[1]).structure);
      r.merge(rep.agreement, "agreement/");
      r.merge(rep.closed_reflection, "closed-reflection/");
      w = {{"missing_left_homs", rep.missing_left_homs},
           {"missing_right_homs", rep.missing_right_homs},
           {"nb_homs_exist", rep.nb_homs_exist},
           {"moninv_on_nb", rep.moninv_on_nb},
           {"lclosed_on_nb", rep.lclosed_on_nb},
           {"hom_witnesses", capped(rep.hom_witnesses)}};
    } else if (verb == "slice-skew") {
      slice_skew(env_.categories.at(a[0]), rng, out);
    } else if (verb == "tensor") {
      const auto& x = env_.fibred.at(a[0]);
      const auto& y = env_.fibred.at(a[1]);
      auto c = env_.categories.at(x.category);
      auto s = build_slice_skew(c);
      auto t = s(x.set, y.set);
      record_cardinality(r, *c, x.set, y.set, t);
      w = {{"tensor", t.describe()}, {"sizes", t.sizes()}};
    } else if (verb == "coreflection" || verb == "lift-comonad" || (verb == "idempotent-comparison" && a.size() == 2)) {
      auto c = env_.categories.at(a[0]);
      const auto& m = env_.maps.at(a[1]).map;
      DemoReport d = verb == "coreflection"   ? injective_coreflection_demo(c, m, rng, cfg_.sampling)
                     : verb == "lift-comonad" ? noninjective_comonad_demo(c, m, rng, cfg_.sampling)
                                              : idempotent_slice_demo(c, m, rng, cfg_.sampling);
      r = d.laws;
      w = d.witnesses;
    } else if (verb == "idempotent-comparison") {
      comonad_comparison(env_.comonads.at(a[0]).comonad, out);
    } else if (verb == "check-warping") {
      check_warping_directive(env_.warpings.at(a[0]), out);
    } else if (verb == "check-comonad") {
      check_comonad_directive(env_.comonads.at(a[0]).comonad, out);
    } else if (verb == "lift") {
      lift_directive(env_.warpings.at(a[0]).warping, env_.comonads.at(a[1]).comonad, out);
    } else {
      throw std::logic_error("unhandled directive " + verb);
    }
    return out;
  }

 private:
  static void reflection_theorem(const Adjunction<FinCategory, FinCategory>& adj, const FinSkew& s, Outcome& out) {
    auto& r = out.laws;
    const auto cond = check_reflection_condition(adj, s, object_pairs(*adj.source, *adj.target));
    r.merge(condition_laws("reflection-condition", cond));
    out.witnesses["condition_failures"] = capped(cond.failures);
    if (!cond.ok()) return;
    auto [bar, op] = build_reflected_structure(adj, s);
    r.merge(check_skew_axioms(bar, exhaustive_sample(bar.cat())), "reflected/");
    r.merge(check_skew_naturality(bar, exhaustive_morphisms(bar.cat())), "reflected-naturality/");
    auto rep = check_opmonoidal(op, exhaustive_sample(s.cat()));
    r.merge(rep.laws, "opmonoidal/");
    r.record("opmonoidal-normal", rep.unit_invertible, Json{});
    for (auto x : adj.source->objects())
      for (auto b : adj.target->objects()) {
        bool ok = bar.cat().inverse(op.psi(x, adj.right(b))).has_value();
        r.record("psi-invertible-on-NB", ok,
                 ok ? Json{} : Json{{"X", adj.source->name(x)}, {"B", adj.target->name(b)}});
      }
    out.witnesses["opmonoidal"] = rep.to_json();
  }

  void slice_skew(FinCatPtr c, Rng& rng, Outcome& out) const {
    auto& r = out.laws;
    auto s = build_slice_skew(c);
    const auto& cat = s.cat();
    auto sample = slice_object_sample(cat, rng, cfg_.sampling);
    r = check_skew_axioms(s, sample);
    for (const auto& [x, y] : sample.pairs) record_cardinality(r, *c, x, y, s(x, y));
    MorphismSample<SliceCategory> m;
    const std::size_t bound = cfg_.sampling.fibre_bound;
    for (std::size_t i = 0; i < cfg_.sampling.samples; ++i) {
      auto f = cat.sample_arrow(rng, bound);
      auto g = cat.sample_arrow(rng, bound);
      auto h = cat.sample_arrow(rng, bound);
      m.singles.push_back(f);
      m.pairs.push_back({f, g});
      m.triples.push_back({f, g, h});
      m.composable.push_back({cat.sample_arrow_from(rng, f.cod, bound), f});
    }
    r.merge(check_skew_naturality(s, m), "naturality/");
    out.witnesses = {{"base", c->object_count()},
                     {"quadruples", sample.quads.size()},
                     {"fibre_bound", bound}};
  }

  static void comonad_comparison(const ActegoryComonad<FinCategory, FinCategory>& m, Outcome& out) {
    auto em = em_category(m);
    const auto& co = *em.category;
    const auto& c = m.action.cat();
    auto cmp = idempotent_comparison(m, exhaustive_sample(co), object_pairs(c, c));
    auto& r = out.laws;
    r.merge(cmp.link, "link/");
    r.merge(cmp.coreflection);
    r.merge(cmp.routes);
    r.merge(cmp.comparison.laws, "comparison/");
    r.record("comparison-invertible", cmp.comparison.all_invertible, capped(cmp.comparison.non_invertible));
    out.witnesses = {{"coalgebras", co.objects().size()}};
  }

  static void check_warping_directive(const Environment::WarpingEntry& e, Outcome& out) {
    const auto& w = e.warping;
    const auto& a = w.action.cat();
    auto sample = exhaustive_sample(a);
    auto& r = out.laws;
    r = check_warping(w, sample);
    r.merge(check_warping_naturality(w, exhaustive_morphisms(a)), "naturality/");
    out.witnesses = {{"kind", e.kind}, {"objects", a.object_count()}, {"acting_objects", w.action.acting.cat().object_count()}};
    if (!r.ok()) return;
    auto ws = warping_to_skew(w);
    r.merge(check_skew_axioms(ws.structure, sample), "induced/");
    r.merge(check_skew_naturality(ws.structure, exhaustive_morphisms(a)), "induced-naturality/");
    r.merge(check_opmonoidal(ws.opmonoidal, sample).laws, "opmonoidal/");
  }

  static void check_comonad_directive(const ActegoryComonad<FinCategory, FinCategory>& m, Outcome& out) {
    const auto& c = m.action.cat();
    const auto& x = m.action.acting.cat();
    auto& r = out.laws;
    auto ms = exhaustive_morphisms(c);
    std::vector<std::pair<Mor, Mor>> composable;
    for (const auto& [g, f] : ms.composable) composable.push_back({g, f});
    r = check_functor_on(c, c, m.G, c.objects(), composable);
    r.merge(check_actegory_comonad(m, exhaustive_action_sample(x, c)));
    std::vector<std::pair<Mor, Mor>> pairs;
    for (auto f : x.morphisms())
      for (auto g : c.morphisms()) pairs.push_back({f, g});
    r.merge(check_comonad_naturality(m, pairs, c.morphisms()));
    bool idempotent = true;
    for (auto o : c.objects()) idempotent &= c.inverse(m.delta(o)).has_value();
    out.witnesses = {{"idempotent", idempotent}};
  }

  static void lift_directive(const SkewWarping<FinCategory, FinCategory>& w,
                             const ActegoryComonad<FinCategory, FinCategory>& m, Outcome& out) {
    auto& r = out.laws;
    auto em = em_category(m);
    const auto& co = *em.category;
    const auto cobs = co.objects();
    auto csample = exhaustive_sample(co);
    r.merge(condition_laws("gamma-invertible", check_lift_precondition(w, m, csample)));
    out.witnesses["coalgebras"] = cobs.size();
    if (!r.ok()) return;
    auto lw = lift_warping(w, m, em);
    r.merge(check_lifted_k(lw, cobs));
    r.merge(check_warping(lw, csample), "lifted-warping/");
    if (!r.ok()) return;
    auto lifted = warping_to_skew(lw);
    auto base = warping_to_skew(w);
    r.merge(check_skew_axioms(lifted.structure, csample), "lifted/");
    std::vector<CoalgebraMorphism<FinCategory>> arrows;
    for (const auto& p : cobs)
      for (const auto& q : cobs)
        for (const auto& f : co.hom(p, q)) arrows.push_back(f);
    std::vector<std::pair<CoalgebraMorphism<FinCategory>, CoalgebraMorphism<FinCategory>>> maps;
    for (const auto& f : arrows)
      for (const auto& g : arrows)
        if (maps.size() < kMaxMorphismPairs) maps.push_back({f, g});
    r.merge(check_u_strict(lifted, base, csample, maps));
    r.merge(check_opmonoidal(forgetful_opmonoidal(lifted, base, em, w.K), csample).laws, "u-opmonoidal/");
    out.witnesses["lifted_unit"] = co.describe(lifted.structure.unit);
  }

  const Environment& env_;
  const RunConfig& cfg_;
};

}  // namespace

Environment resolve(const SpecDocument& doc) {
  Resolver r;
  for (const auto& d : doc.declarations) r.declaration(d);
  for (const auto& d : doc.directives) r.directive(d);
  return std::move(r.env);
}

RunResult run(const SpecDocument& doc, const Environment& env, const RunConfig& cfg) {
  RunResult res;
  Runner runner(env, cfg);
  Json directives = Json::array();
  std::size_t passed = 0;
  for (const auto& d : doc.directives) {
    const std::string& verb = d.args.at(0);
    const std::vector<std::string> args(d.args.begin() + 1, d.args.end());
    Json entry{{"directive", verb}, {"args", args}, {"line", d.pos.line}};
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      auto out = runner.execute(verb, args);
      ok = out.laws.ok();
      entry["laws"] = out.laws.to_json();
      entry["witnesses"] = out.witnesses;
    } catch (const PreconditionError& e) {
      entry["error"] = std::string("precondition: ") + e.what();
    } catch (const StructuralError& e) {
      entry["error"] = std::string("structural: ") + e.what();
    }
    res.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    entry["status"] = ok ? "pass" : "fail";
    passed += ok;
    res.passed = res.passed && ok;
    directives.push_back(std::move(entry));
  }
  res.report = Json{{"version", kReportVersion},
                    {"seed", cfg.seed},
                    {"config", {{"samples", cfg.sampling.samples}, {"fibre_bound", cfg.sampling.fibre_bound}}},
                    {"document", print(doc)},
                    {"directives", std::move(directives)},
                    {"summary", {{"passed", passed}, {"failed", doc.directives.size() - passed}}},
                    {"status", res.passed ? "pass" : "fail"}};
  return res;
}

Statement category_statement(const std::string& name, const FinCategory& c) {
  Statement st{"category", {name}, {}, {}};
  std::vector<std::string> objects;
  for (auto o : c.objects()) objects.push_back(c.name(o));
  st.body.push_back({"objects", objects, {}, {}});
  for (auto o : c.objects())
    if (c.name(c.identity(o)) != "id" + c.name(o))
      st.body.push_back({"identity", {c.name(o), c.name(c.identity(o))}, {}, {}});
  for (auto f : c.morphisms())
    if (!c.is_identity(f)) st.body.push_back({"mor", {c.name(f), c.name(c.dom(f)), c.name(c.cod(f))}, {}, {}});
  for (auto f : c.morphisms())
    for (auto g : c.morphisms())
      if (!c.is_identity(f) && !c.is_identity(g) && c.composable(g, f))
        st.body.push_back({"comp", {c.name(g), c.name(f), c.name(c.compose(g, f))}, {}, {}});
  return st;
}

namespace {

// Three objects with two parallel arrows 0 -> 2, one of them through 1.
constexpr std::string_view kThreeObjects = R"(category C {
  objects 0 1 2
  mor f: 0 -> 1
  mor g: 1 -> 2
  mor h: 0 -> 2
  mor k: 0 -> 2
  comp g f = h
}
)";

constexpr std::string_view kWalkingArrow = R"(category W {
  objects 0 1
  mor f: 0 -> 1
}
)";

}  // namespace

std::vector<std::string> demo_names() { return {"section5", "section8"}; }

SpecDocument demo_document(const std::string& name) {
  std::string text;
  if (name == "section5") {
    text = std::string(kThreeObjects) + std::string(kWalkingArrow) + R"(
map mu: U -> C { u |-> 0; v |-> 2 }
map nu: V -> W { t |-> 1 }

run check-category C
run slice-skew C
run coreflection C mu
run idempotent-comparison C mu
run coreflection W nu
run idempotent-comparison W nu
)";
  } else if (name == "section8") {
    text = std::string(kWalkingArrow) + std::string(kThreeObjects) + R"(
map xi: U -> W { u |-> 0; v |-> 0 }
map zeta: V -> C { a |-> 0; b |-> 0; c |-> 2 }

run check-category W
run slice-skew W
run lift-comonad W xi
run lift-comonad C zeta
)";
  } else {
    throw std::invalid_argument("unknown demo '" + name + "'");
  }
  return parse(text);
}

}  // namespace skewcat

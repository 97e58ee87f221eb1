#include "skewcat/reflection.hpp"

#include <algorithm>
#include <map>

namespace skewcat {

FinCategory full_subcategory(const FinCategory& c, const std::vector<Ob>& objects) {
  CategoryTables t;
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].index >= c.object_count()) throw StructuralError("full_subcategory: object out of range");
    if (!pos.emplace(objects[i].index, i).second) throw StructuralError("full_subcategory: repeated object");
    t.objects.push_back(c.name(objects[i]));
  }
  std::vector<std::optional<std::size_t>> local(c.morphism_count());
  for (auto m : c.morphisms()) {
    auto s = pos.find(c.dom(m).index);
    auto d = pos.find(c.cod(m).index);
    if (s == pos.end() || d == pos.end()) continue;
    local[m.index] = t.morphisms.size();
    t.morphisms.push_back({c.name(m), s->second, d->second});
  }
  for (auto o : objects) t.identities.push_back(*local[c.identity(o).index]);
  const std::size_t n = t.morphisms.size();
  t.composite.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (auto g : c.morphisms())
    for (auto f : c.morphisms())
      if (local[g.index] && local[f.index] && c.composable(g, f))
        t.composite[*local[g.index]][*local[f.index]] = *local[c.compose(g, f).index];
  return FinCategory(std::move(t));
}

namespace {

bool universal(const FinCategory& c, Mor eta, const std::vector<Ob>& objects) {
  for (auto s : objects) {
    const auto& from = c.hom(c.cod(eta), s);
    const auto& to = c.hom(c.dom(eta), s);
    if (from.size() != to.size()) return false;
    std::vector<Mor> images;
    for (auto g : from) images.push_back(c.compose(g, eta));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

}  // namespace

std::optional<FinReflection> find_reflection(FinCatPtr x, const std::vector<Ob>& objects) {
  auto sub = std::make_shared<const FinCategory>(full_subcategory(*x, objects));
  const std::size_t nx = x->object_count();
  std::vector<std::optional<std::size_t>> sub_index(nx);
  for (std::size_t i = 0; i < objects.size(); ++i) sub_index[objects[i].index] = i;

  FinReflection r;
  r.ambient = x;
  r.sub = sub;
  r.embed = objects;
  std::vector<Ob> lobj(nx);
  r.unit.resize(nx);
  for (auto o : x->objects()) {
    bool found = false;
    for (auto s : objects) {
      for (auto eta : x->hom(o, s))
        if (universal(*x, eta, objects)) {
          r.unit[o.index] = eta;
          lobj[o.index] = Ob{static_cast<std::uint32_t>(*sub_index[s.index])};
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }

  // X-morphism between chosen objects ↦ A-morphism, in full_subcategory's order.
  std::vector<std::optional<Mor>> local(x->morphism_count());
  std::vector<Mor> global;
  for (auto m : x->morphisms())
    if (sub_index[x->dom(m).index] && sub_index[x->cod(m).index]) {
      local[m.index] = Mor{static_cast<std::uint32_t>(global.size())};
      global.push_back(m);
    }
  auto to_sub = [&](Mor m) {
    if (!local[m.index]) throw StructuralError("morphism outside the full subcategory");
    return *local[m.index];
  };
  auto from_sub = [&](Mor m) { return global.at(m.index); };

  r.N = FinFunctor{sub, x, objects, {}};
  for (auto m : sub->morphisms()) r.N.mmap.push_back(from_sub(m));

  r.L = FinFunctor{x, sub, lobj, {}};
  for (auto f : x->morphisms()) {
    // L f: the unique g with g∘η_X = η_X'∘f.
    auto target = x->compose(r.unit[x->cod(f).index], f);
    auto src = objects[lobj[x->dom(f).index].index];
    auto tgt = objects[lobj[x->cod(f).index].index];
    std::optional<Mor> g;
    for (auto cand : x->hom(src, tgt))
      if (x->compose(cand, r.unit[x->dom(f).index]) == target) g = cand;
    r.L.mmap.push_back(to_sub(*g));
  }

  for (auto a : sub->objects()) {
    // ε_A: LNA → A, the unique e with Ne∘η_{NA} = 1.
    auto na = objects[a.index];
    auto eta = r.unit[na.index];
    std::optional<Mor> e;
    for (auto cand : x->hom(x->cod(eta), na))
      if (x->compose(cand, eta) == x->identity(na)) e = cand;
    r.counit.push_back(to_sub(*e));
  }
  return r;
}

Adjunction<FinCategory, FinCategory> FinReflection::adjunction() const {
  return fin_adjunction(L, N, unit, counit);
}

Json FinReflection::to_json() const {
  Json j;
  j["objects"] = Json::array();
  for (auto o : embed) j["objects"].push_back(ambient->name(o));
  j["unit"] = Json::object();
  for (auto o : ambient->objects()) j["unit"][ambient->name(o)] = ambient->name(unit[o.index]);
  j["counit"] = Json::object();
  for (auto a : sub->objects()) j["counit"][sub->name(a)] = sub->name(counit[a.index]);
  return j;
}

Adjunction<FinCategory, FinCategory> fin_adjunction(const FinFunctor& left, const FinFunctor& right,
                                                    std::vector<Mor> unit, std::vector<Mor> counit) {
  if (!(*left.dom == *right.cod) || !(*left.cod == *right.dom))
    throw StructuralError("adjoint functors are not opposed");
  if (unit.size() != left.dom->object_count() || counit.size() != left.cod->object_count())
    throw StructuralError("adjunction components have the wrong count");
  auto c = left.dom;
  auto d = left.cod;
  for (auto o : c->objects()) {
    auto m = unit[o.index];
    if (m.index >= c->morphism_count()) throw StructuralError("unit component out of range");
    expect_endpoints(*c, m, o, right(left(o)), "unit");
  }
  for (auto o : d->objects()) {
    auto m = counit[o.index];
    if (m.index >= d->morphism_count()) throw StructuralError("counit component out of range");
    expect_endpoints(*d, m, left(right(o)), o, "counit");
  }
  auto l = left.as_functor();
  auto r = right.as_functor();
  return {c, d, l, r, [unit](const Ob& o) { return unit.at(o.index); },
          [counit](const Ob& o) { return counit.at(o.index); }};
}

LawReport check_fin_adjunction(const Adjunction<FinCategory, FinCategory>& adj) {
  auto r = check_triangles(adj, adj.source->objects(), adj.target->objects());
  LawReport nat;
  auto idc = identity_functor<FinCategory>();
  check_naturality_on<FinCategory, FinCategory>(nat, "unit-natural", *adj.source, *adj.source, idc,
                                                compose_functors(adj.right, adj.left), adj.unit,
                                                adj.source->morphisms());
  check_naturality_on<FinCategory, FinCategory>(nat, "counit-natural", *adj.target, *adj.target,
                                                compose_functors(adj.left, adj.right), idc, adj.counit,
                                                adj.target->morphisms());
  r.merge(nat);
  return r;
}

}  // namespace skewcat

#include "skewcat/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skewcat {

namespace {

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

}  // namespace

FinCategory::FinCategory(CategoryTables tables) : t_(std::move(tables)) {
  const std::size_t n = t_.objects.size();
  const std::size_t m = t_.morphisms.size();
  for (const auto& a : t_.morphisms)
    if (a.src >= n || a.tgt >= n) throw StructuralError("morphism " + a.name + " has an endpoint out of range");
  if (t_.identities.size() != n) throw StructuralError("identity table does not cover every object");
  for (std::size_t o = 0; o < n; ++o) {
    const auto id = t_.identities[o];
    if (id >= m) throw StructuralError("identity of " + t_.objects[o] + " out of range");
    if (t_.morphisms[id].src != o || t_.morphisms[id].tgt != o)
      throw StructuralError("identity of " + t_.objects[o] + " is not an endomorphism of it");
  }
  if (t_.composite.size() != m) throw StructuralError("composition table has the wrong number of rows");
  for (std::size_t g = 0; g < m; ++g) {
    if (t_.composite[g].size() != m) throw StructuralError("composition table row has the wrong length");
    for (std::size_t f = 0; f < m; ++f) {
      const bool composable = t_.morphisms[f].tgt == t_.morphisms[g].src;
      const auto& entry = t_.composite[g][f];
      if (composable && !entry)
        throw StructuralError("missing composite " + t_.morphisms[g].name + " o " + t_.morphisms[f].name);
      if (!composable && entry)
        throw StructuralError("composite given for non-composable pair " + t_.morphisms[g].name + " o " +
                              t_.morphisms[f].name);
      if (entry && *entry >= m) throw StructuralError("composite out of range");
    }
  }

  homs_.assign(n * n, {});
  for (std::size_t f = 0; f < m; ++f) homs_[t_.morphisms[f].src * n + t_.morphisms[f].tgt].push_back(Mor{u32(f)});

  inverses_.assign(m, std::nullopt);
  for (std::size_t f = 0; f < m; ++f) {
    const Mor fm{u32(f)};
    for (Mor g : hom(cod(fm), dom(fm))) {
      if (compose(g, fm) == identity(dom(fm)) && compose(fm, g) == identity(cod(fm))) {
        inverses_[f] = g;
        break;
      }
    }
  }
}

std::vector<Ob> FinCategory::objects() const {
  std::vector<Ob> out;
  for (std::size_t i = 0; i < object_count(); ++i) out.push_back(Ob{u32(i)});
  return out;
}

std::vector<Mor> FinCategory::morphisms() const {
  std::vector<Mor> out;
  for (std::size_t i = 0; i < morphism_count(); ++i) out.push_back(Mor{u32(i)});
  return out;
}

Mor FinCategory::compose(Mor g, Mor f) const {
  const auto& entry = t_.composite.at(g.index).at(f.index);
  if (!entry) throw StructuralError("cannot compose " + name(g) + " after " + name(f));
  return Mor{u32(*entry)};
}

std::optional<Ob> FinCategory::find_object(const std::string& n) const {
  for (std::size_t i = 0; i < t_.objects.size(); ++i)
    if (t_.objects[i] == n) return Ob{u32(i)};
  return std::nullopt;
}

std::optional<Mor> FinCategory::find_morphism(const std::string& n) const {
  for (std::size_t i = 0; i < t_.morphisms.size(); ++i)
    if (t_.morphisms[i].name == n) return Mor{u32(i)};
  return std::nullopt;
}

std::optional<Mor> FinCategory::find_isomorphism(Ob a, Ob b) const {
  for (Mor f : hom(a, b))
    if (inverse(f)) return f;
  return std::nullopt;
}

// ---- Builder ------------------------------------------------------------

Ob FinCategoryBuilder::add_object(const std::string& name, const std::string& identity_name) {
  const std::size_t o = t_.objects.size();
  t_.objects.push_back(name);
  t_.identities.push_back(t_.morphisms.size());
  t_.morphisms.push_back({identity_name.empty() ? "id" + name : identity_name, o, o});
  return Ob{u32(o)};
}

Mor FinCategoryBuilder::add_morphism(const std::string& name, Ob src, Ob tgt) {
  if (src.index >= t_.objects.size() || tgt.index >= t_.objects.size())
    throw StructuralError("morphism " + name + " has an endpoint out of range");
  t_.morphisms.push_back({name, src.index, tgt.index});
  return Mor{u32(t_.morphisms.size() - 1)};
}

void FinCategoryBuilder::set_composite(Mor g, Mor f, Mor gf) {
  const std::size_t m = t_.morphisms.size();
  if (g.index >= m || f.index >= m || gf.index >= m) throw StructuralError("composite refers to unknown morphism");
  if (explicit_.size() < m) explicit_.resize(m);
  for (auto& row : explicit_) row.resize(m);
  explicit_[g.index][f.index] = gf.index;
}

CategoryTables FinCategoryBuilder::tables_with_identity_composites() const {
  CategoryTables t = t_;
  const std::size_t m = t.morphisms.size();
  t.composite.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (t.morphisms[f].tgt != t.morphisms[g].src) {
        if (g < explicit_.size() && f < explicit_[g].size() && explicit_[g][f])
          throw StructuralError("composite given for non-composable pair " + t.morphisms[g].name + " o " +
                                t.morphisms[f].name);
        continue;
      }
      if (g < explicit_.size() && f < explicit_[g].size() && explicit_[g][f]) {
        t.composite[g][f] = explicit_[g][f];
      } else if (t.identities[t.morphisms[g].src] == g) {
        t.composite[g][f] = f;
      } else if (t.identities[t.morphisms[f].tgt] == f) {
        t.composite[g][f] = g;
      }
    }
  return t;
}

FinCategory FinCategoryBuilder::finish() const { return FinCategory(tables_with_identity_composites()); }

// ---- Checks -------------------------------------------------------------

LawReport check_category(const FinCategory& c) {
  LawReport r;
  const auto ms = c.morphisms();
  for (Mor f : ms) {
    {
      Mor lhs = c.compose(c.identity(c.cod(f)), f);
      r.record("left-identity", lhs == f, Json{{"identity", c.name(c.identity(c.cod(f)))}, {"f", c.name(f)}, {"got", c.name(lhs)}});
    }
    {
      Mor lhs = c.compose(f, c.identity(c.dom(f)));
      r.record("right-identity", lhs == f, Json{{"f", c.name(f)}, {"identity", c.name(c.identity(c.dom(f)))}, {"got", c.name(lhs)}});
    }
  }
  for (Mor g : ms)
    for (Mor f : ms) {
      if (!c.composable(g, f)) continue;
      Mor gf = c.compose(g, f);
      r.record("endpoints", c.dom(gf) == c.dom(f) && c.cod(gf) == c.cod(g),
               Json{{"g", c.name(g)}, {"f", c.name(f)}, {"composite", c.name(gf)}});
    }
  for (Mor h : ms)
    for (Mor g : ms) {
      if (!c.composable(h, g)) continue;
      Mor hg = c.compose(h, g);
      for (Mor f : ms) {
        if (!c.composable(g, f)) continue;
        Mor gf = c.compose(g, f);
        if (!c.composable(h, gf) || !c.composable(hg, f)) {
          r.record("associativity", false, Json{{"h", c.name(h)}, {"g", c.name(g)}, {"f", c.name(f)}, {"reason", "not composable"}});
          continue;
        }
        Mor a = c.compose(h, gf);
        Mor b = c.compose(hg, f);
        r.record("associativity", a == b,
                 Json{{"h", c.name(h)}, {"g", c.name(g)}, {"f", c.name(f)}, {"h(gf)", c.name(a)}, {"(hg)f", c.name(b)}});
      }
    }
  return r;
}

std::optional<Mor> is_invertible(Mor m, const FinCategory& c) { return c.inverse(m); }

Functor<FinCategory, FinCategory> FinFunctor::as_functor() const {
  auto self = *this;
  return {[self](const Ob& a) { return self(a); }, [self](const Mor& f) { return self.map(f); }};
}

LawReport check_functor(const FinFunctor& F) {
  if (!F.dom || !F.cod) throw StructuralError("functor without domain or codomain");
  const auto& a = *F.dom;
  const auto& b = *F.cod;
  if (F.omap.size() != a.object_count() || F.mmap.size() != a.morphism_count())
    throw StructuralError("functor tables do not cover the domain");
  for (Ob o : F.omap)
    if (o.index >= b.object_count()) throw StructuralError("functor object image out of range");
  for (Mor m : F.mmap)
    if (m.index >= b.morphism_count()) throw StructuralError("functor morphism image out of range");

  LawReport r;
  for (Mor f : a.morphisms()) {
    Mor Ff = F.map(f);
    r.record("source", b.dom(Ff) == F(a.dom(f)), Json{{"morphism", a.name(f)}, {"image", b.name(Ff)}});
    r.record("target", b.cod(Ff) == F(a.cod(f)), Json{{"morphism", a.name(f)}, {"image", b.name(Ff)}});
  }
  for (Ob o : a.objects())
    r.record("identity", F.map(a.identity(o)) == b.identity(F(o)), Json{{"object", a.name(o)}});
  for (Mor g : a.morphisms())
    for (Mor f : a.morphisms()) {
      if (!a.composable(g, f)) continue;
      Mor lhs = F.map(a.compose(g, f));
      Mor Fg = F.map(g), Ff = F.map(f);
      bool ok = b.composable(Fg, Ff) && b.compose(Fg, Ff) == lhs;
      r.record("composition", ok, Json{{"g", a.name(g)}, {"f", a.name(f)}});
    }
  return r;
}

FinFunctor identity_functor(FinCatPtr c) { return {c, c, c->objects(), c->morphisms()}; }

FinFunctor constant_functor(FinCatPtr dom, FinCatPtr cod, Ob target) {
  return {dom, cod, std::vector<Ob>(dom->object_count(), target),
          std::vector<Mor>(dom->morphism_count(), cod->identity(target))};
}

FinFunctor compose(const FinFunctor& G, const FinFunctor& F) {
  if (!(*F.cod == *G.dom)) throw StructuralError("functors are not composable");
  FinFunctor out{F.dom, G.cod, {}, {}};
  for (Ob o : F.omap) out.omap.push_back(G(o));
  for (Mor m : F.mmap) out.mmap.push_back(G.map(m));
  return out;
}

LawReport check_natural(const FinNatTrans& t) {
  const auto& F = t.source;
  const auto& G = t.target;
  if (!(*F.dom == *G.dom) || !(*F.cod == *G.cod)) throw StructuralError("transformation between non-parallel functors");
  const auto& a = *F.dom;
  const auto& b = *F.cod;
  if (t.components.size() != a.object_count()) throw StructuralError("transformation does not cover every object");
  for (Ob o : a.objects()) {
    Mor c = t(o);
    if (c.index >= b.morphism_count() || b.dom(c) != F(o) || b.cod(c) != G(o))
      throw StructuralError("component at " + a.name(o) + " has the wrong endpoints");
  }
  LawReport r;
  for (Mor f : a.morphisms()) {
    Mor lhs = b.compose(G.map(f), t(a.dom(f)));
    Mor rhs = b.compose(t(a.cod(f)), F.map(f));
    r.record("naturality", lhs == rhs, Json{{"morphism", a.name(f)}, {"lhs", b.name(lhs)}, {"rhs", b.name(rhs)}});
  }
  return r;
}

FinNatTrans identity_transformation(const FinFunctor& F) {
  FinNatTrans t{F, F, {}};
  for (Ob o : F.dom->objects()) t.components.push_back(F.cod->identity(F(o)));
  return t;
}

FinNatTrans vertical(const FinNatTrans& s, const FinNatTrans& t) {
  if (!(s.source == t.target)) throw StructuralError("transformations are not composable");
  FinNatTrans out{t.source, s.target, {}};
  for (Ob o : t.source.dom->objects()) out.components.push_back(t.source.cod->compose(s(o), t(o)));
  return out;
}

FinNatTrans whisker_left(const FinFunctor& H, const FinNatTrans& t) {
  FinNatTrans out{compose(H, t.source), compose(H, t.target), {}};
  for (Mor c : t.components) out.components.push_back(H.map(c));
  return out;
}

FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& K) {
  FinNatTrans out{compose(t.source, K), compose(t.target, K), {}};
  for (Ob o : K.dom->objects()) out.components.push_back(t(K(o)));
  return out;
}

bool fully_faithful(const FinFunctor& F) {
  const auto& a = *F.dom;
  const auto& b = *F.cod;
  for (Ob x : a.objects())
    for (Ob y : a.objects()) {
      std::set<Mor> images;
      for (Mor f : a.hom(x, y)) images.insert(F.map(f));
      if (images.size() != a.hom(x, y).size() || images.size() != b.hom(F(x), F(y)).size()) return false;
    }
  return true;
}

// ---- Stock categories ---------------------------------------------------

FinCategory terminal_category() {
  FinCategoryBuilder b;
  b.add_object("0");
  return b.finish();
}

FinCategory walking_arrow() {
  FinCategoryBuilder b;
  auto o0 = b.add_object("0");
  auto o1 = b.add_object("1");
  b.add_morphism("f", o0, o1);
  return b.finish();
}

FinCategory walking_isomorphism() {
  FinCategoryBuilder b;
  auto o0 = b.add_object("0");
  auto o1 = b.add_object("1");
  auto f = b.add_morphism("f", o0, o1);
  auto g = b.add_morphism("g", o1, o0);
  b.set_composite(g, f, b.identity(o0));
  b.set_composite(f, g, b.identity(o1));
  return b.finish();
}

FinCategory discrete_category(std::size_t n) {
  FinCategoryBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  return b.finish();
}

FinCategory codiscrete_category(std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, true));
  return preorder_category(leq);
}

FinCategory parallel_pair() {
  FinCategoryBuilder b;
  auto o0 = b.add_object("0");
  auto o1 = b.add_object("1");
  b.add_morphism("f", o0, o1);
  b.add_morphism("g", o0, o1);
  return b.finish();
}

FinCategory preorder_category(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names) {
  const std::size_t n = leq.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || !leq[i][i]) throw PreconditionError("preorder relation is not reflexive");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) throw PreconditionError("preorder relation is not transitive");
  }
  FinCategoryBuilder b;
  std::vector<Ob> obs;
  std::vector<std::string> label;
  for (std::size_t i = 0; i < n; ++i) {
    label.push_back(names.empty() ? std::to_string(i) : names[i]);
    obs.push_back(b.add_object(label.back()));
  }
  std::vector<std::vector<Mor>> arrow(n, std::vector<Mor>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      arrow[i][j] = i == j ? b.identity(obs[i]) : b.add_morphism(label[i] + "<=" + label[j], obs[i], obs[j]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k]) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return b.finish();
}

FinCategory monoid_category(const std::vector<std::vector<std::size_t>>& table, const std::vector<std::string>& names) {
  const std::size_t m = table.size();
  if (m == 0) throw PreconditionError("empty monoid");
  CategoryTables t;
  t.objects = {"*"};
  for (std::size_t i = 0; i < m; ++i) t.morphisms.push_back({names.empty() ? "m" + std::to_string(i) : names[i], 0, 0});
  t.identities = {0};
  t.composite.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) throw StructuralError("monoid table is not square");
    for (std::size_t b = 0; b < m; ++b) t.composite[a][b] = table[a][b];
  }
  return FinCategory(std::move(t));
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  CategoryTables t;
  const std::size_t na = a.object_count(), nb = b.object_count();
  const std::size_t ma = a.morphism_count(), mb = b.morphism_count();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) t.objects.push_back("(" + a.tables().objects[i] + "," + b.tables().objects[j] + ")");
  for (std::size_t f = 0; f < ma; ++f)
    for (std::size_t g = 0; g < mb; ++g) {
      const auto& fa = a.tables().morphisms[f];
      const auto& gb = b.tables().morphisms[g];
      t.morphisms.push_back({"(" + fa.name + "," + gb.name + ")", fa.src * nb + gb.src, fa.tgt * nb + gb.tgt});
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) t.identities.push_back(a.tables().identities[i] * mb + b.tables().identities[j]);
  const std::size_t m = ma * mb;
  t.composite.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      const auto& ga = a.tables().composite[g / mb][f / mb];
      const auto& gb = b.tables().composite[g % mb][f % mb];
      if (ga && gb) t.composite[g][f] = *ga * mb + *gb;
    }
  return FinCategory(std::move(t));
}

FinCategory concrete_category(const std::vector<std::size_t>& sizes, const std::vector<FunctionArrow>& generators,
                              std::size_t max_morphisms) {
  const std::size_t n = sizes.size();
  using Key = std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;
  std::map<Key, std::size_t> index;
  std::vector<FunctionArrow> arrows;
  auto add = [&](const FunctionArrow& f) {
    Key k{{f.src, f.tgt}, f.table};
    if (index.count(k)) return false;
    if (arrows.size() >= max_morphisms) throw PreconditionError("generated category exceeds the morphism cap");
    index.emplace(k, arrows.size());
    arrows.push_back(f);
    return true;
  };
  for (std::size_t o = 0; o < n; ++o) {
    FunctionArrow id{o, o, {}};
    for (std::size_t e = 0; e < sizes[o]; ++e) id.table.push_back(e);
    add(id);
  }
  for (const auto& g : generators) {
    if (g.src >= n || g.tgt >= n || g.table.size() != sizes[g.src]) throw StructuralError("generator has wrong shape");
    for (auto v : g.table)
      if (v >= sizes[g.tgt]) throw StructuralError("generator value out of range");
    add(g);
  }
  // Close under composition.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t cur = arrows.size();
    for (std::size_t gi = 0; gi < cur; ++gi)
      for (std::size_t fi = 0; fi < cur; ++fi) {
        const auto g = arrows[gi];
        const auto f = arrows[fi];
        if (f.tgt != g.src) continue;
        FunctionArrow h{f.src, g.tgt, {}};
        for (auto v : f.table) h.table.push_back(g.table[v]);
        grew = add(h) || grew;
      }
  }
  CategoryTables t;
  for (std::size_t o = 0; o < n; ++o) t.objects.push_back(std::to_string(o));
  std::vector<std::size_t> counter(n * n, 0);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& f = arrows[i];
    std::string name;
    if (i < n) {
      name = "id" + std::to_string(i);
    } else {
      name = "f" + std::to_string(f.src) + std::to_string(f.tgt) + "_" + std::to_string(counter[f.src * n + f.tgt]++);
    }
    t.morphisms.push_back({name, f.src, f.tgt});
  }
  for (std::size_t o = 0; o < n; ++o) t.identities.push_back(o);
  const std::size_t m = arrows.size();
  t.composite.assign(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t gi = 0; gi < m; ++gi)
    for (std::size_t fi = 0; fi < m; ++fi) {
      const auto& g = arrows[gi];
      const auto& f = arrows[fi];
      if (f.tgt != g.src) continue;
      FunctionArrow h{f.src, g.tgt, {}};
      for (auto v : f.table) h.table.push_back(g.table[v]);
      t.composite[gi][fi] = index.at(Key{{h.src, h.tgt}, h.table});
    }
  return FinCategory(std::move(t));
}

}  // namespace skewcat

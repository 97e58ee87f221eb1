#include "skewcat/slice.hpp"

#include <numeric>

#include "skewcat/reflection.hpp"

namespace skewcat {

namespace {

Tag num(std::size_t n) { return Tag::number(static_cast<std::int64_t>(n)); }

// Position of each morphism inside its hom list, plus hom sizes.
struct HomIndex {
  FinCatPtr c;
  std::size_t n = 0;
  std::vector<std::uint32_t> pos;

  explicit HomIndex(FinCatPtr cat) : c(std::move(cat)), n(c->object_count()), pos(c->morphism_count()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto& h = hom(i, j);
        for (std::uint32_t p = 0; p < h.size(); ++p) pos[h[p].index] = p;
      }
  }
  const std::vector<Mor>& hom(std::size_t i, std::size_t j) const { return c->hom(Ob{std::uint32_t(i)}, Ob{std::uint32_t(j)}); }
};

// Offsets of the i-summands inside (X⊗Y)_j.
std::vector<std::vector<std::size_t>> offsets(const HomIndex& h, const FibredSet& x, const FibredSet& y) {
  std::vector<std::vector<std::size_t>> off(h.n, std::vector<std::size_t>(h.n, 0));
  for (std::size_t j = 0; j < h.n; ++j) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < h.n; ++i) {
      off[j][i] = acc;
      acc += x.size(i) * h.hom(i, j).size() * y.size(j);
    }
  }
  return off;
}

void require_base(const HomIndex& h, const FibredSet& x) {
  if (x.base() != h.n) throw StructuralError("slice tensor: object over the wrong base");
}

FibredSet tensor(const HomIndex& h, const FibredSet& x, const FibredSet& y) {
  require_base(h, x);
  require_base(h, y);
  std::vector<std::vector<Tag>> fibres(h.n);
  for (std::size_t j = 0; j < h.n; ++j) {
    auto& out = fibres[j];
    for (std::size_t i = 0; i < h.n; ++i) {
      const auto& hom = h.hom(i, j);
      out.reserve(out.size() + x.size(i) * hom.size() * y.size(j));
      for (const auto& xe : x.fibre(i))
        for (auto m : hom)
          for (const auto& ye : y.fibre(j)) out.push_back(Tag::tuple({xe, num(m.index), ye}));
    }
  }
  return FibredSet(std::move(fibres));
}

using Image = std::vector<std::vector<std::uint32_t>>;

FibreMap tensor_map(const HomIndex& h, const FibreMap& f, const FibreMap& g) {
  FibreMap m{tensor(h, f.dom, g.dom), tensor(h, f.cod, g.cod), Image(h.n)};
  const auto off = offsets(h, f.cod, g.cod);
  for (std::size_t j = 0; j < h.n; ++j) {
    auto& img = m.image[j];
    img.reserve(m.dom.size(j));
    const std::size_t ny = g.cod.size(j);
    for (std::size_t i = 0; i < h.n; ++i) {
      const std::size_t nh = h.hom(i, j).size();
      for (std::uint32_t xk = 0; xk < f.dom.size(i); ++xk)
        for (std::size_t p = 0; p < nh; ++p)
          for (std::uint32_t yk = 0; yk < g.dom.size(j); ++yk)
            img.push_back(static_cast<std::uint32_t>(off[j][i] + (f(i, xk) * nh + p) * ny + g(j, yk)));
    }
  }
  return m;
}

FibreMap alpha(const HomIndex& h, const FibredSet& x, const FibredSet& y, const FibredSet& z) {
  const auto xy = tensor(h, x, y);
  const auto yz = tensor(h, y, z);
  FibreMap m{tensor(h, xy, z), tensor(h, x, yz), Image(h.n)};
  const auto off_yz = offsets(h, y, z);
  const auto off_cod = offsets(h, x, yz);
  const FinCategory& c = *h.c;
  for (std::size_t k = 0; k < h.n; ++k) {
    auto& img = m.image[k];
    img.reserve(m.dom.size(k));
    const std::size_t nz = z.size(k);
    const std::size_t nyz = yz.size(k);
    for (std::size_t j = 0; j < h.n; ++j) {
      const auto& hjk = h.hom(j, k);
      for (std::size_t i = 0; i < h.n; ++i) {
        const auto& hij = h.hom(i, j);
        const std::size_t nik = h.hom(i, k).size();
        for (std::size_t xk = 0; xk < x.size(i); ++xk)
          for (auto a : hij)
            for (std::size_t yk = 0; yk < y.size(j); ++yk)
              for (auto b : hjk) {
                const std::size_t ba = h.pos[c.compose(b, a).index];
                const std::size_t yz_index = off_yz[k][j] + (yk * hjk.size() + h.pos[b.index]) * nz;
                const std::size_t base = off_cod[k][i] + (xk * nik + ba) * nyz;
                for (std::size_t zk = 0; zk < nz; ++zk) img.push_back(static_cast<std::uint32_t>(base + yz_index + zk));
              }
      }
    }
  }
  return m;
}

FibreMap lambda(const HomIndex& h, const FibredSet& unit, const FibredSet& y) {
  FibreMap m{tensor(h, unit, y), y, Image(h.n)};
  for (std::size_t j = 0; j < h.n; ++j)
    for (std::size_t i = 0; i < h.n; ++i)
      for (std::size_t p = 0; p < h.hom(i, j).size(); ++p)
        for (std::uint32_t yk = 0; yk < y.size(j); ++yk) m.image[j].push_back(yk);
  return m;
}

FibreMap rho(const HomIndex& h, const FibredSet& x, const FibredSet& unit) {
  FibreMap m{x, tensor(h, x, unit), Image(h.n)};
  const auto off = offsets(h, x, unit);
  for (std::size_t j = 0; j < h.n; ++j) {
    const auto id = h.c->identity(Ob{std::uint32_t(j)});
    const std::size_t nh = h.hom(j, j).size();
    for (std::size_t xk = 0; xk < x.size(j); ++xk)
      m.image[j].push_back(static_cast<std::uint32_t>(off[j][j] + xk * nh + h.pos[id.index]));
  }
  return m;
}

void record_condition(LawReport& r, const std::string& law, const ConditionReport& c) {
  auto& l = r.law(law);
  l.instances += c.tested;
  l.violations.insert(l.violations.end(), c.failures.begin(), c.failures.end());
}

std::size_t cardinality_oracle(const FinCategory& c, const IndexMap& xi, const FibredSet& a, const FibredSet& b,
                               std::size_t w) {
  std::size_t n = 0;
  for (std::size_t u = 0; u < xi.dom_size(); ++u)
    n += a.size(u) * c.hom(Ob{std::uint32_t(xi(u))}, Ob{std::uint32_t(xi(w))}).size() * b.size(w);
  return n;
}

}  // namespace

SliceSkew build_slice_skew(FinCatPtr c) {
  auto h = std::make_shared<const HomIndex>(c);
  auto cat = std::make_shared<const SliceCategory>(c->object_count());
  const FibredSet unit = FibredSet::terminal(c->object_count());
  SliceSkew s;
  s.carrier = cat;
  s.unit = unit;
  s.tensor = [h](const FibredSet& x, const FibredSet& y) { return tensor(*h, x, y); };
  s.tensor_map = [h](const FibreMap& f, const FibreMap& g) { return tensor_map(*h, f, g); };
  s.alpha = [h](const FibredSet& x, const FibredSet& y, const FibredSet& z) { return alpha(*h, x, y, z); };
  s.lambda = [h, unit](const FibredSet& y) { return lambda(*h, unit, y); };
  s.rho = [h, unit](const FibredSet& x) { return rho(*h, x, unit); };
  return s;
}

FullImage full_image(const IndexMap& xi, FinCatPtr c) {
  if (xi.cod_size != c->object_count()) throw PreconditionError("full image: map does not land in the objects of C");
  const std::size_t nu = xi.dom_size();
  const bool keep_names = xi.injective();
  HomIndex h(c);
  auto cob = [&](std::size_t u) { return Ob{std::uint32_t(xi(u))}; };

  CategoryTables t;
  std::vector<std::size_t> first(nu * nu, 0);  // index of the first morphism u → v
  std::vector<Mor> image;
  for (std::size_t u = 0; u < nu; ++u) t.objects.push_back(xi.name(u));
  for (std::size_t u = 0; u < nu; ++u)
    for (std::size_t v = 0; v < nu; ++v) {
      first[u * nu + v] = t.morphisms.size();
      for (auto m : c->hom(cob(u), cob(v))) {
        std::string name = keep_names ? c->name(m) : c->name(m) + "[" + xi.name(u) + "," + xi.name(v) + "]";
        t.morphisms.push_back({std::move(name), u, v});
        image.push_back(m);
      }
    }
  auto index = [&](std::size_t u, std::size_t v, Mor m) { return first[u * nu + v] + h.pos[m.index]; };
  for (std::size_t u = 0; u < nu; ++u) t.identities.push_back(index(u, u, c->identity(cob(u))));
  const std::size_t nm = t.morphisms.size();
  t.composite.assign(nm, std::vector<std::optional<std::size_t>>(nm));
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f)
      if (t.morphisms[f].tgt == t.morphisms[g].src)
        t.composite[g][f] = index(t.morphisms[f].src, t.morphisms[g].tgt, c->compose(image[g], image[f]));

  auto a = std::make_shared<const FinCategory>(std::move(t));
  FinFunctor F{a, c, {}, image};
  for (std::size_t u = 0; u < nu; ++u) F.omap.push_back(cob(u));
  return {a, F};
}

ActegoryComonad<SliceCategory, SliceCategory> slice_comonad(const SliceSkew& s, const IndexMap& xi) {
  if (xi.cod_size != s.cat().base()) throw PreconditionError("comonad: map does not land in the base");
  auto adj = slice_adjunction(xi);
  auto N = adj.left;
  auto R = adj.right;
  auto unit = adj.unit;
  auto G = compose_functors<SliceCategory, SliceCategory, SliceCategory>(N, R);
  auto delta = [N, R, unit](const FibredSet& x) { return N.map(unit(R(x))); };
  auto gamma = [s, G](const FibredSet& x, const FibredSet& y) {
    return FibreMap::from_tags(s(x, G(y)), G(s(x, y)), [](std::size_t, const Tag& t) {
      const Tag& uy = t[2];
      return Tag::tuple({uy[0], Tag::tuple({t[0], t[1], uy[1]})});
    });
  };
  return {tensor_action(s), G, gamma, delta, adj.counit};
}

CoalgebraEquivalence coalgebra_equivalence(const IndexMap& xi, CoalgebraPtr<SliceCategory> co) {
  auto adj = slice_adjunction(xi);
  auto N = adj.left;
  auto unit = adj.unit;
  auto object = [N, unit](const FibredSet& p) -> SliceCoalgebra { return {N(p), N.map(unit(p))}; };
  Functor<SliceCategory, SliceCoalgebras> from{
      object, [N, object](const FibreMap& f) -> SliceCoalgebraMap { return {object(f.dom), object(f.cod), N.map(f)}; }};

  auto to_object = [xi](const SliceCoalgebra& q) {
    std::vector<std::vector<Tag>> fibres(xi.dom_size());
    for (std::size_t u = 0; u < xi.dom_size(); ++u) {
      const std::size_t i = xi(u);
      const auto& elems = q.carrier.fibre(i);
      for (std::uint32_t k = 0; k < elems.size(); ++k) {
        const Tag& img = q.coaction.image_tag(i, k);
        if (img[0].as_number() == static_cast<std::int64_t>(u) && img[1] == elems[k]) fibres[u].push_back(elems[k]);
      }
    }
    return FibredSet(std::move(fibres));
  };
  Functor<SliceCoalgebras, SliceCategory> to{
      to_object, [xi, to_object](const SliceCoalgebraMap& h) {
        const FibreMap& f = h.map;
        return FibreMap::from_tags(to_object(h.dom), to_object(h.cod), [xi, &f](std::size_t u, const Tag& t) {
          const std::size_t i = xi(u);
          return f.image_tag(i, f.dom.index_of(i, t));
        });
      }};
  auto iota = [from, to](const FibredSet& p) {
    return FibreMap::from_tags(p, to(from(p)), [](std::size_t u, const Tag& t) { return Tag::tuple({num(u), t}); });
  };
  auto e = [from, to](const SliceCoalgebra& q) -> SliceCoalgebraMap {
    auto fq = from(to(q));
    return {fq, q, FibreMap::from_tags(fq.carrier, q.carrier, [](std::size_t, const Tag& t) { return t[1]; })};
  };
  return {co, std::make_shared<const SliceCategory>(xi.dom_size()), from, to, iota, e};
}

FibreMap full_image_comparison(const FullImage& fi, const SliceSkew& fi_structure, const FibredSet& a,
                               const FibredSet& b, const FibredSet& target) {
  const FinCategory& cat = *fi.category;
  const FinFunctor& F = fi.functor;
  return FibreMap::from_tags(fi_structure(a, b), target, [&](std::size_t w, const Tag& t) {
    const Mor m{static_cast<std::uint32_t>(t[1].as_number())};
    return Tag::tuple({Tag::tuple({num(cat.dom(m).index), t[0]}), num(F.map(m).index), Tag::tuple({num(w), t[2]})});
  });
}

FibreMap singleton_map(const FibredSet& from, const FibredSet& to) {
  if (from.base() != to.base()) throw StructuralError("singleton map between different bases");
  FibreMap m{from, to, Image(from.base())};
  for (std::size_t j = 0; j < from.base(); ++j) {
    if (to.size(j) != 1) throw StructuralError("singleton map: target fibre " + std::to_string(j) + " is not a singleton");
    m.image[j].assign(from.size(j), 0);
  }
  return m;
}

SliceCoproduct slice_coproduct(const FibredSet& x, const FibredSet& y) {
  if (x.base() != y.base()) throw StructuralError("coproduct of objects over different bases");
  const std::size_t n = x.base();
  std::vector<std::vector<Tag>> fibres(n);
  Image left(n), right(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : x.fibre(j)) {
      left[j].push_back(static_cast<std::uint32_t>(fibres[j].size()));
      fibres[j].push_back(Tag::tuple({num(0), t}));
    }
    for (const auto& t : y.fibre(j)) {
      right[j].push_back(static_cast<std::uint32_t>(fibres[j].size()));
      fibres[j].push_back(Tag::tuple({num(1), t}));
    }
  }
  FibredSet sum(std::move(fibres));
  return {sum, FibreMap{x, sum, std::move(left)}, FibreMap{y, sum, std::move(right)}};
}

namespace {

bool jointly_bijective(const FibreMap& f, const FibreMap& g) {
  for (std::size_t j = 0; j < f.cod.base(); ++j) {
    std::vector<int> hits(f.cod.size(j), 0);
    for (auto k : f.image[j]) ++hits[k];
    for (auto k : g.image[j]) ++hits[k];
    for (int h : hits)
      if (h != 1) return false;
  }
  return true;
}

}  // namespace

bool preserves_coproducts(const SliceSkew& s, const FibredSet& x, const FibredSet& y, const FibredSet& z) {
  const auto sum = slice_coproduct(x, y);
  const auto idz = s.id(z);
  return jointly_bijective(s.map(sum.left, idz), s.map(sum.right, idz)) &&
         jointly_bijective(s.map(idz, sum.left), s.map(idz, sum.right));
}

Json DemoReport::to_json() const {
  return Json{{"name", name}, {"ok", ok()}, {"laws", laws.to_json()}, {"witnesses", witnesses}};
}

Json bijection_json(const FibreMap& f) {
  Json out = Json::array();
  for (std::size_t j = 0; j < f.dom.base(); ++j) {
    Json pairs = Json::array();
    for (std::uint32_t k = 0; k < f.dom.size(j); ++k)
      pairs.push_back(Json::array({f.dom.element(j, k).to_json(), f.image_tag(j, k).to_json()}));
    out.push_back(Json{{"fibre", j}, {"pairs", pairs}});
  }
  return out;
}

ObjectSample<SliceCategory> slice_object_sample(const SliceCategory& cat, Rng& rng, const SamplingConfig& cfg,
                                                const std::string& prefix) {
  std::vector<std::array<FibredSet, 4>> quads;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    quads.push_back({cat.sample_object(rng, cfg.fibre_bound, prefix), cat.sample_object(rng, cfg.fibre_bound, prefix),
                     cat.sample_object(rng, cfg.fibre_bound, prefix), cat.sample_object(rng, cfg.fibre_bound, prefix)});
  return sample_from_quads<SliceCategory>(quads);
}

// ---- Worked examples --------------------------------------------------------

namespace {

// The comparison from the full-image slice structure into `target`, checked
// as an opmonoidal functor and for invertibility; records the first sampled
// bijection as a witness.
void compare_with_full_image(DemoReport& rep, FinCatPtr c, const IndexMap& xi, const SliceSkew& target,
                             const ObjectSample<SliceCategory>& us) {
  auto fi = full_image(xi, c);
  rep.laws.record("full-image-fully-faithful", fully_faithful(fi.functor), Json{});
  const auto fis = build_slice_skew(fi.category);
  auto theta = [fi, fis, target](const FibredSet& a, const FibredSet& b) {
    return full_image_comparison(fi, fis, a, b, target(a, b));
  };
  for (const auto& [a, b] : us.pairs) {
    auto t = target(a, b);
    bool card = true;
    for (std::size_t w = 0; w < xi.dom_size(); ++w) card = card && t.size(w) == cardinality_oracle(*c, xi, a, b, w);
    rep.laws.record("tensor-cardinality", card, Json{{"A", a.describe()}, {"B", b.describe()}});
    rep.laws.record("explicit-bijection", theta(a, b).bijective(), Json{{"A", a.describe()}, {"B", b.describe()}});
  }
  auto cmp = structure_comparison<SliceCategory>(fis, target, singleton_map(fis.unit, target.unit), theta);
  auto report = check_opmonoidal(cmp, us);
  rep.laws.merge(report.laws, "full-image-iso/");
  rep.laws.record("full-image-iso-invertible", report.unit_invertible && report.all_invertible,
                  Json{{"non_invertible", report.non_invertible}});
  if (!us.pairs.empty()) {
    const auto& [a, b] = us.pairs.front();
    rep.witnesses["bijection"] = Json{{"A", a.describe()}, {"B", b.describe()}, {"map", bijection_json(theta(a, b))}};
  }
}

}  // namespace

DemoReport injective_coreflection_demo(FinCatPtr c, const IndexMap& mu, Rng& rng, const SamplingConfig& cfg) {
  if (!mu.injective()) throw PreconditionError("mu is not injective; the comonad route handles arbitrary maps");
  if (mu.cod_size != c->object_count()) throw PreconditionError("mu does not land in the objects of C");
  DemoReport rep{"injective-coreflection", {}, Json::object()};
  const auto s = build_slice_skew(c);
  const auto adj = slice_adjunction(mu);
  const SliceCategory& setU = *adj.source;
  const SliceCategory& setO = *adj.target;
  const auto us = slice_object_sample(setU, rng, cfg, "a");
  const auto xs = slice_object_sample(setO, rng, cfg, "x");

  rep.laws.merge(check_triangles(adj, us.singles, xs.singles));
  for (const auto& a : us.singles) rep.laws.record("unit-invertible", setU.inverse(adj.unit(a)).has_value(), a.describe());

  // G(X⊗ε_Y) against the elementwise chain (u,(x,c,(u,y))) ↦ (u,(x,c,y)).
  const auto m = slice_comonad(s, mu);
  for (const auto& [x, y] : xs.pairs) {
    auto lhs = m.G.map(s.map(s.id(x), m.eps(y)));
    rep.laws.record("strengthened-condition", setO.inverse(lhs).has_value(), Json{{"X", x.describe()}, {"Y", y.describe()}});
    auto chain = FibreMap::from_tags(m.G(s(x, m.G(y))), m.G(s(x, y)), [](std::size_t, const Tag& t) {
      const Tag& e = t[1];
      return Tag::tuple({t[0], Tag::tuple({e[0], e[1], e[2][1]})});
    });
    detail::equation(rep.laws, "chain-formula", setO, lhs, chain,
                     [&] { return Json{{"X", x.describe()}, {"Y", y.describe()}}; });
  }

  std::vector<std::pair<FibredSet, FibredSet>> pairs;
  for (std::size_t i = 0; i < us.singles.size(); ++i) pairs.push_back({us.singles[i], xs.singles[i % xs.singles.size()]});
  record_condition(rep.laws, "coreflection-condition", check_coreflection_condition(adj, s, pairs));

  const auto coref = build_coreflected_structure(adj, s);
  rep.laws.merge(check_skew_axioms(coref.structure, us), "axioms/");
  const auto mon = check_monoidal(coref.monoidal, xs);
  rep.laws.merge(mon.laws, "monoidal/");
  rep.laws.record("monoidal-normal", mon.unit_invertible, Json{});
  for (const auto& [a, y] : pairs) {
    auto phi = coref.monoidal.phi(adj.left(a), y);
    rep.laws.record("phi-NA-invertible", setU.inverse(phi).has_value(), Json{{"A", a.describe()}, {"Y", y.describe()}});
  }
  rep.witnesses["phi_non_invertible"] = nullptr;
  for (const auto& [x, y] : xs.pairs) {
    auto phi = coref.monoidal.phi(x, y);
    if (!setU.inverse(phi)) {
      rep.witnesses["phi_non_invertible"] = Json{{"X", x.describe()}, {"Y", y.describe()}, {"phi", setU.describe(phi)}};
      break;
    }
  }
  compare_with_full_image(rep, c, mu, coref.structure, us);
  return rep;
}

DemoReport noninjective_comonad_demo(FinCatPtr c, const IndexMap& xi, Rng& rng, const SamplingConfig& cfg) {
  if (xi.cod_size != c->object_count()) throw PreconditionError("xi does not land in the objects of C");
  DemoReport rep{"comonad-lift", {}, Json::object()};
  const auto s = build_slice_skew(c);
  const auto m = slice_comonad(s, xi);
  const SliceCategory& setO = s.cat();
  const SliceCategory setU(xi.dom_size());
  const auto us = slice_object_sample(setU, rng, cfg, "a");
  const auto xs = slice_object_sample(setO, rng, cfg, "x");

  rep.laws.merge(check_actegory_comonad(m, action_sample_from<SliceCategory, SliceCategory>(xs.singles, xs.singles)),
                 "comonad/");
  {
    std::vector<std::pair<FibreMap, FibreMap>> arrows;
    std::vector<FibreMap> singles;
    const std::size_t count = std::min<std::size_t>(cfg.samples, 20);
    for (std::size_t i = 0; i < count; ++i) {
      arrows.push_back({setO.sample_arrow(rng, cfg.fibre_bound), setO.sample_arrow(rng, cfg.fibre_bound)});
      singles.push_back(arrows.back().second);
    }
    rep.laws.merge(check_comonad_naturality(m, arrows, singles), "comonad-naturality/");
  }

  const auto em = em_category(m);
  const auto eq = coalgebra_equivalence(xi, em.category);
  const auto& co = *em.category;

  std::vector<std::array<SliceCoalgebra, 4>> cquads;
  for (const auto& q : us.quads) cquads.push_back({eq.from_slice(q[0]), eq.from_slice(q[1]), eq.from_slice(q[2]), eq.from_slice(q[3])});
  const auto cs = sample_from_quads<SliceCoalgebras>(cquads);

  for (std::size_t i = 0; i < us.singles.size(); ++i) {
    const auto& p = us.singles[i];
    const auto& q = cs.singles[i];
    rep.laws.record("from-slice-coalgebra", co.check_coalgebra(q.carrier, q.coaction).ok(), p.describe());
    rep.laws.record("equivalence-unit", eq.iota(p).bijective(), p.describe());
    // The counit at a cofree coalgebra, which is not in the image of from_slice on the nose.
    const auto cofree = co.cofree(xs.singles[i % xs.singles.size()]);
    for (const auto* t : {&q, &cofree}) {
      auto e = eq.e(*t);
      rep.laws.record("equivalence-counit", co.is_morphism(e.dom, e.cod, e.map) && co.inverse(e).has_value(),
                      co.describe(*t));
    }
  }

  rep.laws.merge(check_lifted_action(em, action_sample_from<SliceCategory, SliceCoalgebras>(xs.singles, cs.singles)),
                 "lifted-action/");
  const auto w = identity_warping(s);
  record_condition(rep.laws, "lift-precondition", check_lift_precondition(w, m, cs));
  const auto lw = lift_warping(w, m, em);
  rep.laws.merge(check_lifted_k(lw, cs.singles));
  rep.laws.merge(check_warping(lw, cs), "lifted-warping/");
  const auto base = warping_to_skew(w);
  const auto lifted = warping_to_skew(lw);
  rep.laws.merge(check_skew_axioms(lifted.structure, cs), "lifted-axioms/");
  rep.laws.merge(check_u_strict(lifted, base, cs));
  auto uop = check_opmonoidal(forgetful_opmonoidal(lifted, base, em, s.unit), cs);
  rep.laws.merge(uop.laws, "u-opmonoidal/");
  rep.laws.record("lifted-unit-cofree", co.same_object(lifted.structure.unit, co.cofree(s.unit)), Json{});

  auto transported = transport_structure<SliceCategory, SliceCoalgebras>(lifted.structure, eq.slices, eq.from_slice,
                                                                          eq.to_slice, eq.iota, eq.e);
  rep.laws.merge(check_skew_axioms(transported, us), "transported-axioms/");
  {
    bool terminal = true;
    for (std::size_t u = 0; u < setU.base(); ++u) terminal = terminal && transported.unit.size(u) == 1;
    rep.laws.record("unit-terminal", terminal, transported.unit.describe());
  }
  for (std::size_t i = 0; i < us.pairs.size(); ++i) {
    const auto& [a, b] = us.pairs[i];
    const auto& a2 = us.singles[(i + 1) % us.singles.size()];
    rep.laws.record("preserves-coproducts", preserves_coproducts(transported, a, a2, b),
                    Json{{"A", a.describe()}, {"A'", a2.describe()}, {"B", b.describe()}});
  }
  compare_with_full_image(rep, c, xi, transported, us);
  rep.witnesses["lifted_unit"] = co.describe(lifted.structure.unit);
  return rep;
}

DemoReport idempotent_slice_demo(FinCatPtr c, const IndexMap& mu, Rng& rng, const SamplingConfig& cfg) {
  if (!mu.injective()) throw PreconditionError("the comonad of a non-injective map is not idempotent");
  DemoReport rep{"idempotent-comparison", {}, Json::object()};
  const auto s = build_slice_skew(c);
  const auto m = slice_comonad(s, mu);
  const auto em = em_category(m);
  const auto eq = coalgebra_equivalence(mu, em.category);
  const auto us = slice_object_sample(*eq.slices, rng, cfg, "a");
  const auto xs = slice_object_sample(s.cat(), rng, cfg, "x");
  std::vector<std::array<SliceCoalgebra, 4>> cquads;
  for (const auto& q : us.quads) cquads.push_back({eq.from_slice(q[0]), eq.from_slice(q[1]), eq.from_slice(q[2]), eq.from_slice(q[3])});
  const auto cs = sample_from_quads<SliceCoalgebras>(cquads);
  std::vector<std::pair<FibredSet, FibredSet>> pairs;
  for (const auto& [x, y] : xs.pairs) pairs.push_back({x, y});
  auto r = idempotent_comparison(m, cs, pairs);
  rep.laws.merge(r.link);
  rep.laws.merge(r.coreflection);
  rep.laws.merge(r.routes);
  rep.laws.merge(r.comparison.laws, "comparison/");
  rep.laws.record("comparison-invertible", r.comparison.unit_invertible && r.comparison.all_invertible,
                  Json{{"non_invertible", r.comparison.non_invertible}});
  return rep;
}

}  // namespace skewcat

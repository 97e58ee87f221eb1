#include "skewcat/corpus.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace skewcat {

namespace {

std::string set_name(std::uint32_t s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t b = 0; b < 32; ++b)
    if (s & (1u << b)) {
      if (!first) out += ",";
      out += std::to_string(b);
      first = false;
    }
  return out + "}";
}

Mor unique_arrow(const FinCategory& c, Ob a, Ob b, const char* what) {
  const auto& h = c.hom(a, b);
  if (h.empty()) throw PreconditionError(std::string("thin structure: missing ") + what + " arrow " + c.name(a) + " -> " + c.name(b));
  if (h.size() > 1) throw PreconditionError("thin structure on a category that is not thin");
  return h.front();
}

}  // namespace

Lattice moore_lattice(std::vector<std::uint32_t> family, std::uint32_t ground) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Order by size then value so that bottom comes first.
  std::stable_sort(family.begin(), family.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < family.size(); ++i) pos[family[i]] = i;
  if (!pos.count(ground)) throw PreconditionError("Moore family must contain the ground set");
  const std::size_t n = family.size();
  Lattice l;
  l.sets = family;
  l.meet.assign(n, std::vector<std::size_t>(n));
  l.join.assign(n, std::vector<std::size_t>(n));
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(set_name(family[i]));
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = (family[i] & ~family[j]) == 0;
      auto it = pos.find(family[i] & family[j]);
      if (it == pos.end()) throw PreconditionError("family is not closed under intersection");
      l.meet[i][j] = it->second;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Least member above both: the meet of all upper bounds.
      std::uint32_t acc = ground;
      for (auto s : family)
        if (((family[i] | family[j]) & ~s) == 0) acc &= s;
      l.join[i][j] = pos.at(acc);
    }
  l.top = pos.at(ground);
  std::uint32_t bottom = ground;
  for (auto s : family) bottom &= s;
  l.bottom = pos.at(bottom);
  l.cat = std::make_shared<const FinCategory>(preorder_category(leq, names));
  return l;
}

Lattice downset_lattice(const std::vector<std::uint32_t>& below) {
  const std::size_t n = below.size();
  std::vector<std::uint32_t> family;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool down = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((s & (1u << i)) && (below[i] & ~s)) down = false;
    if (down) family.push_back(s);
  }
  return moore_lattice(family, (1u << n) - 1);
}

FinSkew thin_skew(FinCatPtr c, std::vector<std::vector<Ob>> tensor, Ob unit) {
  const std::size_t n = c->object_count();
  const std::size_t m = c->morphism_count();
  if (tensor.size() != n) throw StructuralError("tensor table has the wrong size");
  for (const auto& row : tensor)
    if (row.size() != n) throw StructuralError("tensor table has the wrong size");
  auto T = [&](Ob a, Ob b) { return tensor[a.index][b.index]; };

  auto maps = std::make_shared<std::vector<Mor>>(m * m);
  for (auto f : c->morphisms())
    for (auto g : c->morphisms())
      (*maps)[f.index * m + g.index] = unique_arrow(*c, T(c->dom(f), c->dom(g)), T(c->cod(f), c->cod(g)), "tensor");
  auto alpha = std::make_shared<std::vector<Mor>>(n * n * n);
  for (auto a : c->objects())
    for (auto b : c->objects())
      for (auto d : c->objects())
        (*alpha)[(a.index * n + b.index) * n + d.index] = unique_arrow(*c, T(T(a, b), d), T(a, T(b, d)), "alpha");
  auto lambda = std::make_shared<std::vector<Mor>>();
  auto rho = std::make_shared<std::vector<Mor>>();
  for (auto a : c->objects()) {
    lambda->push_back(unique_arrow(*c, T(unit, a), a, "lambda"));
    rho->push_back(unique_arrow(*c, a, T(a, unit), "rho"));
  }
  auto table = std::make_shared<const std::vector<std::vector<Ob>>>(std::move(tensor));

  FinSkew s;
  s.carrier = c;
  s.tensor = [table](const Ob& a, const Ob& b) { return (*table)[a.index][b.index]; };
  s.tensor_map = [maps, m](const Mor& f, const Mor& g) { return (*maps)[f.index * m + g.index]; };
  s.unit = unit;
  s.alpha = [alpha, n](const Ob& a, const Ob& b, const Ob& d) { return (*alpha)[(a.index * n + b.index) * n + d.index]; };
  s.lambda = [lambda](const Ob& a) { return (*lambda)[a.index]; };
  s.rho = [rho](const Ob& a) { return (*rho)[a.index]; };
  return s;
}

FinSkew meet_structure(const Lattice& l) {
  std::vector<std::vector<Ob>> t(l.size(), std::vector<Ob>(l.size()));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) t[i][j] = l.ob(l.meet[i][j]);
  return thin_skew(l.cat, t, l.ob(l.top));
}

FinSkew closure_structure(const Lattice& l, const std::vector<std::size_t>& h) {
  std::vector<std::vector<Ob>> t(l.size(), std::vector<Ob>(l.size()));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) t[i][j] = l.ob(l.meet[h.at(i)][j]);
  return thin_skew(l.cat, t, l.ob(l.top));
}

std::vector<std::size_t> closure_of(const Lattice& l, const std::vector<std::size_t>& closed) {
  std::vector<std::size_t> h(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::size_t best = l.top;
    for (auto s : closed)
      if (l.leq(x, s) && l.leq(s, best)) best = s;
    h[x] = best;
  }
  return h;
}

std::vector<std::size_t> random_moore_family(const Lattice& l, Rng& rng) {
  std::set<std::size_t> s{l.top};
  const std::size_t picks = rng.below(l.size() / 2 + 1) + 1;
  for (std::size_t i = 0; i < picks; ++i) s.insert(rng.below(l.size()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew = s.insert(l.meet[a][b]).second || grew;
  }
  return {s.begin(), s.end()};
}

FinSkew monoid_twist(const FinSkew& p, const std::vector<std::vector<std::size_t>>& table, std::size_t u,
                     std::size_t u_inverse, const std::vector<std::string>& names) {
  const std::size_t k = table.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (table[a][b] != table[b][a]) throw PreconditionError("monoid_twist needs a commutative monoid");
  if (table[u][u_inverse] != 0) throw PreconditionError("monoid_twist: u_inverse is not inverse to u");
  auto monoid = monoid_category(table, names);
  auto cat = std::make_shared<const FinCategory>(product_category(p.cat(), monoid));
  auto mt = std::make_shared<const std::vector<std::vector<std::size_t>>>(table);
  auto pair = [k](Mor f, std::size_t a) { return Mor{static_cast<std::uint32_t>(f.index * k + a)}; };

  FinSkew s;
  s.carrier = cat;
  s.tensor = p.tensor;  // objects of P×M are those of P (M has one object)
  s.tensor_map = [p, mt, k, pair](const Mor& f, const Mor& g) {
    Mor pf{static_cast<std::uint32_t>(f.index / k)};
    Mor pg{static_cast<std::uint32_t>(g.index / k)};
    return pair(p.map(pf, pg), (*mt)[f.index % k][g.index % k]);
  };
  s.unit = p.unit;
  s.alpha = [p, pair](const Ob& a, const Ob& b, const Ob& c) { return pair(p.alpha(a, b, c), 0); };
  s.lambda = [p, pair, u](const Ob& a) { return pair(p.lambda(a), u); };
  s.rho = [p, pair, u_inverse](const Ob& a) { return pair(p.rho(a), u_inverse); };
  return s;
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

FinCategory random_preorder(Rng& rng, std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.below(3) == 0) leq[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return preorder_category(leq);
}

FinCategory random_category(Rng& rng, std::size_t max_objects, std::size_t max_morphisms) {
  for (;;) {
    const std::size_t n = rng.between(1, max_objects);
    if (rng.coin()) {
      auto p = random_preorder(rng, n);
      if (p.morphism_count() <= max_morphisms) return p;
      continue;
    }
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < n; ++i) sizes.push_back(rng.between(1, 3));
    std::vector<FunctionArrow> gens;
    const std::size_t g = rng.between(0, 4);
    for (std::size_t i = 0; i < g; ++i) {
      FunctionArrow f;
      f.src = rng.below(n);
      f.tgt = rng.below(n);
      for (std::size_t e = 0; e < sizes[f.src]; ++e) f.table.push_back(rng.below(sizes[f.tgt]));
      gens.push_back(f);
    }
    try {
      return concrete_category(sizes, gens, max_morphisms);
    } catch (const PreconditionError&) {
      // Closure too large; draw again.
    }
  }
}

IndexMap random_index_map(Rng& rng, std::size_t dom, std::size_t cod, bool injective) {
  std::vector<std::size_t> values;
  if (injective) {
    if (dom > cod) throw PreconditionError("no injective map into a smaller set");
    std::vector<std::size_t> pool(cod);
    for (std::size_t i = 0; i < cod; ++i) pool[i] = i;
    for (std::size_t i = 0; i < dom; ++i) {
      auto j = i + rng.below(cod - i);
      std::swap(pool[i], pool[j]);
      values.push_back(pool[i]);
    }
  } else {
    for (std::size_t i = 0; i < dom; ++i) values.push_back(rng.below(cod));
  }
  return IndexMap(cod, values);
}

namespace {

std::vector<std::uint32_t> random_poset(Rng& rng, std::size_t n) {
  // below[i] ∋ j for j ≤ i, with j < i in index order when related.
  std::vector<std::uint32_t> below(n);
  for (std::size_t i = 0; i < n; ++i) {
    below[i] = 1u << i;
    for (std::size_t j = 0; j < i; ++j)
      if (rng.below(3) == 0) below[i] |= below[j];
  }
  return below;
}

Lattice random_lattice(Rng& rng) {
  if (rng.coin()) return downset_lattice(random_poset(rng, rng.between(2, 3)));
  // Random Moore family on a 3-element ground set.
  const std::uint32_t ground = 7;
  std::set<std::uint32_t> fam{ground};
  const std::size_t picks = rng.between(1, 4);
  for (std::size_t i = 0; i < picks; ++i) fam.insert(static_cast<std::uint32_t>(rng.below(8)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(fam.begin(), fam.end());
    for (auto a : cur)
      for (auto b : cur) grew = fam.insert(a & b).second || grew;
  }
  return moore_lattice({fam.begin(), fam.end()}, ground);
}

std::vector<Ob> as_obs(const std::vector<std::size_t>& v) {
  std::vector<Ob> out;
  for (auto i : v) out.push_back(Ob{static_cast<std::uint32_t>(i)});
  return out;
}

}  // namespace

std::vector<ReflectionInstance> reflection_corpus(std::uint64_t seed, std::size_t target) {
  Rng rng(seed);
  std::vector<ReflectionInstance> out;
  std::size_t round = 0;
  while (out.size() < target) {
    const std::size_t kind = round++ % 4;
    auto l = random_lattice(rng);
    auto closed = random_moore_family(l, rng);
    FinSkew s;
    std::string name;
    FinCatPtr ambient = l.cat;
    std::vector<Ob> sub = as_obs(closed);
    if (kind == 0) {
      s = meet_structure(l);
      name = "lattice-meet";
    } else if (kind == 1 || kind == 2) {
      s = closure_structure(l, closure_of(l, random_moore_family(l, rng)));
      name = "lattice-closure";
    } else {
      if (l.size() > 5) continue;
      const std::size_t order = rng.between(2, 3);
      s = monoid_twist(meet_structure(l), cyclic_table(order), 1, order - 1);
      ambient = s.carrier;
      name = "lattice-meet-twisted-z" + std::to_string(order);
    }
    auto r = find_reflection(ambient, sub);
    if (!r) throw StructuralError("corpus: expected a reflection onto a Moore family");
    out.push_back({name + "-" + std::to_string(out.size()), s, *r});
  }
  return out;
}

std::vector<FinReflection> plain_reflection_corpus(std::uint64_t seed, std::size_t target) {
  Rng rng(seed);
  std::vector<FinReflection> out;
  std::size_t attempts = 0;
  while (out.size() < target && attempts < 20000) {
    ++attempts;
    FinCatPtr x;
    switch (attempts % 3) {
      case 0:
        x = std::make_shared<const FinCategory>(random_category(rng, 4, 12));
        break;
      case 1:
        x = random_lattice(rng).cat;
        break;
      default: {
        auto base = random_category(rng, 3, 6);
        x = std::make_shared<const FinCategory>(product_category(base, monoid_category(cyclic_table(2))));
      }
    }
    std::vector<Ob> sub;
    for (auto o : x->objects())
      if (rng.coin()) sub.push_back(o);
    if (sub.empty()) continue;
    if (auto r = find_reflection(x, sub)) out.push_back(*r);
  }
  return out;
}

namespace {

// Small structures whose endofunctor categories stay within the default caps.
FinSkew small_structure(Rng& rng, std::string& name) {
  switch (rng.below(4)) {
    case 0: {
      auto l = downset_lattice(rng.coin() ? std::vector<std::uint32_t>{0b1} : std::vector<std::uint32_t>{0b1, 0b11});
      name = "chain-meet";
      return meet_structure(l);
    }
    case 1: {
      auto l = downset_lattice({0b1, 0b11});
      name = "chain-closure";
      return closure_structure(l, closure_of(l, random_moore_family(l, rng)));
    }
    case 2:
      name = "point-twisted-z3";
      return monoid_twist(meet_structure(downset_lattice({})), cyclic_table(3), 1, 2);
    default:
      name = "chain-twisted-z2";
      return monoid_twist(meet_structure(downset_lattice({0b1})), cyclic_table(2), 1, 1);
  }
}

}  // namespace

std::vector<WarpingInstance> warping_corpus(std::uint64_t seed, std::size_t target) {
  Rng rng(seed);
  std::vector<WarpingInstance> out;
  std::size_t round = 0;
  while (out.size() < target) {
    const std::size_t kind = round++ % 4;
    std::string name;
    if (kind == 3) {
      auto s = small_structure(rng, name);
      auto e = endofunctor_category(s.carrier);
      out.push_back({"evaluation-" + name + "-" + std::to_string(out.size()), evaluation_warping(e, s)});
      continue;
    }
    auto l = random_lattice(rng);
    FinSkew s;
    if (kind == 0) {
      s = meet_structure(l);
      name = "identity-lattice-meet";
    } else if (kind == 1) {
      s = closure_structure(l, closure_of(l, random_moore_family(l, rng)));
      name = "identity-lattice-closure";
    } else {
      if (l.size() > 5) continue;
      s = monoid_twist(meet_structure(l), cyclic_table(2), 1, 1);
      name = "identity-lattice-twisted-z2";
    }
    out.push_back({name + "-" + std::to_string(out.size()), identity_warping(s)});
  }
  return out;
}

ActegoryComonad<FinCategory, FinCategory> meet_comonad(const Lattice& l, const FinSkew& s, std::size_t c) {
  const auto cat = l.cat;
  auto G_obj = [l, c](Ob a) { return l.ob(l.meet[a.index][c]); };
  Functor<FinCategory, FinCategory> G{G_obj, [cat, G_obj](Mor f) {
                                        return unique_arrow(*cat, G_obj(cat->dom(f)), G_obj(cat->cod(f)), "G");
                                      }};
  auto gamma = [cat, s, G_obj](Ob x, Ob a) { return unique_arrow(*cat, s(x, G_obj(a)), G_obj(s(x, a)), "gamma"); };
  auto delta = [cat, G_obj](Ob a) { return unique_arrow(*cat, G_obj(a), G_obj(G_obj(a)), "delta"); };
  auto eps = [cat, G_obj](Ob a) { return unique_arrow(*cat, G_obj(a), a, "eps"); };
  return {tensor_action(s), G, gamma, delta, eps};
}

}  // namespace skewcat

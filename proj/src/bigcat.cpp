#include "skewcat/bigcat.hpp"

#include <algorithm>

namespace skewcat {

// ---- IndexMap -----------------------------------------------------------

IndexMap::IndexMap(std::size_t cod, std::vector<std::size_t> values, std::vector<std::string> names)
    : cod_size(cod), map(std::move(values)), dom_names(std::move(names)) {
  for (auto v : map)
    if (v >= cod_size) throw StructuralError("index map value out of range");
}

bool IndexMap::injective() const {
  std::vector<bool> hit(cod_size, false);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool IndexMap::surjective() const {
  std::vector<bool> hit(cod_size, false);
  for (auto v : map) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::size_t> IndexMap::preimage(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < map.size(); ++u)
    if (map[u] == i) out.push_back(u);
  return out;
}

IndexMap IndexMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return IndexMap(n, std::move(v));
}

// ---- FibredSet ----------------------------------------------------------

FibredSet::FibredSet(std::vector<std::vector<Tag>> fibres) {
  auto d = std::make_shared<Data>();
  d->fibres = std::move(fibres);
  d->index.resize(d->fibres.size());
  std::size_t h = 0xf1b5ULL + d->fibres.size();
  for (std::size_t j = 0; j < d->fibres.size(); ++j) {
    auto& idx = d->index[j];
    idx.reserve(d->fibres[j].size());
    h ^= 0x100000001b3ULL * (j + 1) + d->fibres[j].size();
    for (std::uint32_t k = 0; k < d->fibres[j].size(); ++k) {
      const Tag& t = d->fibres[j][k];
      if (!idx.emplace(t, k).second)
        throw StructuralError("element " + t.str() + " repeated in fibre " + std::to_string(j));
      h = (h * 1099511628211ULL) ^ t.hash();
    }
  }
  d->hash = h;
  d_ = std::move(d);
}

FibredSet FibredSet::terminal(std::size_t base) {
  return FibredSet(std::vector<std::vector<Tag>>(base, std::vector<Tag>{Tag::atom("*")}));
}

std::size_t FibredSet::total() const {
  std::size_t n = 0;
  for (const auto& f : d_->fibres) n += f.size();
  return n;
}

std::vector<std::size_t> FibredSet::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& f : d_->fibres) out.push_back(f.size());
  return out;
}

std::optional<std::uint32_t> FibredSet::find(std::size_t j, const Tag& t) const {
  if (j >= d_->index.size()) return std::nullopt;
  auto it = d_->index[j].find(t);
  if (it == d_->index[j].end()) return std::nullopt;
  return it->second;
}

std::uint32_t FibredSet::index_of(std::size_t j, const Tag& t) const {
  auto k = find(j, t);
  if (!k) throw StructuralError("element " + t.str() + " is not in fibre " + std::to_string(j));
  return *k;
}

bool operator==(const FibredSet& a, const FibredSet& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->hash == b.d_->hash && a.d_->fibres == b.d_->fibres;
}

Json FibredSet::describe() const {
  if (total() > 16) return Json{{"sizes", sizes()}};
  Json out = Json::array();
  for (const auto& f : d_->fibres) {
    Json fib = Json::array();
    for (const auto& t : f) fib.push_back(t.to_json());
    out.push_back(std::move(fib));
  }
  return out;
}

// ---- FibreMap -----------------------------------------------------------

FibreMap FibreMap::from_tags(const FibredSet& dom, const FibredSet& cod,
                             const std::function<Tag(std::size_t, const Tag&)>& f) {
  if (dom.base() != cod.base()) throw StructuralError("fibre map between different bases");
  FibreMap m{dom, cod, {}};
  m.image.resize(dom.base());
  for (std::size_t j = 0; j < dom.base(); ++j) {
    m.image[j].reserve(dom.size(j));
    for (const auto& t : dom.fibre(j)) m.image[j].push_back(cod.index_of(j, f(j, t)));
  }
  return m;
}

bool FibreMap::bijective() const {
  for (std::size_t j = 0; j < dom.base(); ++j) {
    if (dom.size(j) != cod.size(j)) return false;
    std::vector<bool> hit(cod.size(j), false);
    for (auto v : image[j]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

// ---- SliceCategory ------------------------------------------------------

void SliceCategory::require_base(const FibredSet& x) const {
  if (x.base() != base_) throw StructuralError("object is fibred over a base of the wrong size");
}

FibreMap SliceCategory::identity(const FibredSet& x) const {
  require_base(x);
  FibreMap m{x, x, {}};
  m.image.resize(base_);
  for (std::size_t j = 0; j < base_; ++j)
    for (std::uint32_t k = 0; k < x.size(j); ++k) m.image[j].push_back(k);
  return m;
}

FibreMap SliceCategory::compose(const FibreMap& g, const FibreMap& f) const {
  if (!(f.cod == g.dom)) throw StructuralError("cannot compose fibre maps: codomain and domain differ");
  FibreMap m{f.dom, g.cod, {}};
  m.image.resize(base_);
  for (std::size_t j = 0; j < base_; ++j) {
    m.image[j].reserve(f.image[j].size());
    for (auto v : f.image[j]) m.image[j].push_back(g.image[j][v]);
  }
  return m;
}

bool SliceCategory::same_morphism(const FibreMap& f, const FibreMap& g) const {
  return f.image == g.image && f.dom == g.dom && f.cod == g.cod;
}

std::optional<FibreMap> SliceCategory::inverse(const FibreMap& f) const {
  if (!f.bijective()) return std::nullopt;
  FibreMap m{f.cod, f.dom, {}};
  m.image.resize(base_);
  for (std::size_t j = 0; j < base_; ++j) {
    m.image[j].assign(f.cod.size(j), 0);
    for (std::uint32_t k = 0; k < f.image[j].size(); ++k) m.image[j][f.image[j][k]] = k;
  }
  return m;
}

Json SliceCategory::describe(const FibreMap& f) const {
  if (f.dom.total() > 16) return Json{{"dom", f.dom.describe()}, {"cod", f.cod.describe()}};
  Json out = Json::array();
  for (std::size_t j = 0; j < base_; ++j)
    for (std::uint32_t k = 0; k < f.dom.size(j); ++k)
      out.push_back(Json{j, f.dom.element(j, k).to_json(), f.image_tag(j, k).to_json()});
  return out;
}

Json SliceCategory::explain_difference(const FibreMap& f, const FibreMap& g) const {
  if (!(f.dom == g.dom)) return Json{{"reason", "domains differ"}, {"lhs", f.dom.describe()}, {"rhs", g.dom.describe()}};
  if (!(f.cod == g.cod)) return Json{{"reason", "codomains differ"}, {"lhs", f.cod.describe()}, {"rhs", g.cod.describe()}};
  for (std::size_t j = 0; j < base_; ++j)
    for (std::uint32_t k = 0; k < f.dom.size(j); ++k)
      if (f.image[j][k] != g.image[j][k])
        return Json{{"fibre", j},
                    {"element", f.dom.element(j, k).to_json()},
                    {"lhs", f.image_tag(j, k).to_json()},
                    {"rhs", g.image_tag(j, k).to_json()}};
  return Json{{"reason", "equal"}};
}

std::size_t SliceCategory::hom_count(const FibredSet& x, const FibredSet& y) const {
  std::size_t n = 1;
  for (std::size_t j = 0; j < base_; ++j)
    for (std::size_t k = 0; k < x.size(j); ++k) {
      n *= y.size(j);
      if (n == 0) return 0;
    }
  return n;
}

std::vector<FibreMap> SliceCategory::hom(const FibredSet& x, const FibredSet& y, std::size_t cap) const {
  require_base(x);
  require_base(y);
  const std::size_t count = hom_count(x, y);
  if (count > cap) throw PreconditionError("hom set too large to enumerate");
  std::vector<FibreMap> out;
  if (count == 0) return out;
  // Odometer over all elements of x.
  std::vector<std::pair<std::size_t, std::uint32_t>> slots;
  for (std::size_t j = 0; j < base_; ++j)
    for (std::uint32_t k = 0; k < x.size(j); ++k) slots.emplace_back(j, k);
  std::vector<std::uint32_t> digit(slots.size(), 0);
  while (true) {
    FibreMap m{x, y, std::vector<std::vector<std::uint32_t>>(base_)};
    for (std::size_t j = 0; j < base_; ++j) m.image[j].resize(x.size(j));
    for (std::size_t s = 0; s < slots.size(); ++s) m.image[slots[s].first][slots[s].second] = digit[s];
    out.push_back(std::move(m));
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++digit[s] < y.size(slots[s].first)) break;
      digit[s] = 0;
    }
    if (s == slots.size()) break;
  }
  return out;
}

FibredSet SliceCategory::sample_object(Rng& rng, std::size_t bound, const std::string& prefix) const {
  std::vector<std::vector<Tag>> fibres(base_);
  for (std::size_t j = 0; j < base_; ++j) {
    const auto n = rng.below(bound + 1);
    for (std::size_t k = 0; k < n; ++k)
      fibres[j].push_back(Tag::atom(prefix + std::to_string(j) + "." + std::to_string(k)));
  }
  return FibredSet(std::move(fibres));
}

std::optional<FibreMap> SliceCategory::sample_morphism(Rng& rng, const FibredSet& x, const FibredSet& y) const {
  if (hom_count(x, y) == 0) return std::nullopt;
  FibreMap m{x, y, std::vector<std::vector<std::uint32_t>>(base_)};
  for (std::size_t j = 0; j < base_; ++j)
    for (std::size_t k = 0; k < x.size(j); ++k) m.image[j].push_back(static_cast<std::uint32_t>(rng.below(y.size(j))));
  return m;
}

FibreMap SliceCategory::sample_arrow_from(Rng& rng, const FibredSet& x, std::size_t bound) const {
  std::vector<std::vector<Tag>> fibres(base_);
  for (std::size_t j = 0; j < base_; ++j) {
    auto n = rng.below(bound + 1);
    if (x.size(j) > 0 && n == 0) n = 1;
    for (std::size_t k = 0; k < n; ++k) fibres[j].push_back(Tag::atom("y" + std::to_string(j) + "." + std::to_string(k)));
  }
  return *sample_morphism(rng, x, FibredSet(std::move(fibres)));
}

FibreMap SliceCategory::sample_arrow(Rng& rng, std::size_t bound) const {
  return sample_arrow_from(rng, sample_object(rng, bound), bound);
}

// ---- Direct and inverse image ------------------------------------------

SliceFunctor direct_image(const IndexMap& xi) {
  auto object = [xi](const FibredSet& a) {
    if (a.base() != xi.dom_size()) throw StructuralError("direct image: object over the wrong base");
    std::vector<std::vector<Tag>> fibres(xi.cod_size);
    for (std::size_t u = 0; u < xi.dom_size(); ++u)
      for (const auto& t : a.fibre(u)) fibres[xi(u)].push_back(Tag::tuple({Tag::number(static_cast<std::int64_t>(u)), t}));
    return FibredSet(std::move(fibres));
  };
  auto morphism = [xi, object](const FibreMap& f) {
    FibredSet d = object(f.dom);
    FibredSet c = object(f.cod);
    FibreMap m{d, c, std::vector<std::vector<std::uint32_t>>(xi.cod_size)};
    // Summands appear in increasing u, so offsets line up between d and c.
    std::vector<std::uint32_t> offset(xi.cod_size, 0);
    for (std::size_t u = 0; u < xi.dom_size(); ++u) {
      const auto i = xi(u);
      for (std::uint32_t k = 0; k < f.dom.size(u); ++k) m.image[i].push_back(offset[i] + f(u, k));
      offset[i] += static_cast<std::uint32_t>(f.cod.size(u));
    }
    return m;
  };
  return {object, morphism};
}

SliceFunctor inverse_image(const IndexMap& xi) {
  auto object = [xi](const FibredSet& x) {
    if (x.base() != xi.cod_size) throw StructuralError("inverse image: object over the wrong base");
    std::vector<std::vector<Tag>> fibres;
    for (std::size_t u = 0; u < xi.dom_size(); ++u) fibres.push_back(x.fibre(xi(u)));
    return FibredSet(std::move(fibres));
  };
  auto morphism = [xi, object](const FibreMap& f) {
    FibreMap m{object(f.dom), object(f.cod), {}};
    for (std::size_t u = 0; u < xi.dom_size(); ++u) m.image.push_back(f.image[xi(u)]);
    return m;
  };
  return {object, morphism};
}

Adjunction<SliceCategory, SliceCategory> slice_adjunction(const IndexMap& xi) {
  auto setU = std::make_shared<const SliceCategory>(xi.dom_size());
  auto setO = std::make_shared<const SliceCategory>(xi.cod_size);
  auto N = direct_image(xi);
  auto R = inverse_image(xi);
  auto unit = [N, R](const FibredSet& a) {
    FibredSet rna = R(N(a));
    return FibreMap::from_tags(a, rna, [](std::size_t u, const Tag& t) {
      return Tag::tuple({Tag::number(static_cast<std::int64_t>(u)), t});
    });
  };
  auto counit = [N, R](const FibredSet& x) {
    FibredSet nrx = N(R(x));
    return FibreMap::from_tags(nrx, x, [](std::size_t, const Tag& t) { return t[1]; });
  };
  return {setU, setO, N, R, unit, counit};
}

SliceFunctor dependent_product(const IndexMap& mu) {
  if (!mu.injective()) throw PreconditionError("dependent product is only provided along injective maps");
  auto object = [mu](const FibredSet& a) {
    if (a.base() != mu.dom_size()) throw StructuralError("dependent product: object over the wrong base");
    std::vector<std::vector<Tag>> fibres(mu.cod_size, std::vector<Tag>{Tag::atom("*")});
    for (std::size_t u = 0; u < mu.dom_size(); ++u) fibres[mu(u)] = a.fibre(u);
    return FibredSet(std::move(fibres));
  };
  auto morphism = [mu, object](const FibreMap& f) {
    FibreMap m{object(f.dom), object(f.cod), std::vector<std::vector<std::uint32_t>>(mu.cod_size, {0})};
    for (std::size_t u = 0; u < mu.dom_size(); ++u) m.image[mu(u)] = f.image[u];
    return m;
  };
  return {object, morphism};
}

Adjunction<SliceCategory, SliceCategory> product_reflection(const IndexMap& mu) {
  auto setO = std::make_shared<const SliceCategory>(mu.cod_size);
  auto setU = std::make_shared<const SliceCategory>(mu.dom_size());
  auto L = inverse_image(mu);
  auto N = dependent_product(mu);
  std::vector<bool> in_image(mu.cod_size, false);
  for (auto v : mu.map) in_image[v] = true;
  auto unit = [L, N, in_image](const FibredSet& x) {
    return FibreMap::from_tags(x, N(L(x)), [in_image](std::size_t i, const Tag& t) {
      return in_image[i] ? t : Tag::atom("*");
    });
  };
  auto counit = [L, N](const FibredSet& a) {
    return FibreMap::from_tags(L(N(a)), a, [](std::size_t, const Tag& t) { return t; });
  };
  return {setO, setU, L, N, unit, counit};
}

}  // namespace skewcat

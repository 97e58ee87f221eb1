#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/rng.hpp"
#include "skewcat/tag.hpp"

namespace skewcat {

/// Total function between finite sets {0..dom_size-1} → {0..cod_size-1}.
struct IndexMap {
  std::size_t cod_size = 0;
  std::vector<std::size_t> map;
  std::vector<std::string> dom_names;  // optional labels for the domain

  IndexMap() = default;
  // Throws StructuralError if a value is out of range.
  IndexMap(std::size_t cod, std::vector<std::size_t> values, std::vector<std::string> names = {});

  std::size_t dom_size() const { return map.size(); }
  std::size_t operator()(std::size_t u) const { return map.at(u); }
  bool injective() const;
  bool surjective() const;
  std::vector<std::size_t> preimage(std::size_t i) const;
  std::string name(std::size_t u) const { return u < dom_names.size() ? dom_names[u] : std::to_string(u); }

  static IndexMap identity(std::size_t n);
  friend bool operator==(const IndexMap& a, const IndexMap& b) { return a.cod_size == b.cod_size && a.map == b.map; }
};

/// Object of Set/O: a finite set split into fibres over the base {0..n-1}.
/// Elements are identified by (fibre, tag); tags are unique within a fibre.
/// Immutable and cheap to copy.
class FibredSet {
 public:
  FibredSet() : FibredSet(std::vector<std::vector<Tag>>{}) {}
  // Throws StructuralError on a repeated tag inside one fibre.
  explicit FibredSet(std::vector<std::vector<Tag>> fibres);

  static FibredSet empty(std::size_t base) { return FibredSet(std::vector<std::vector<Tag>>(base)); }
  static FibredSet terminal(std::size_t base);

  std::size_t base() const { return d_->fibres.size(); }
  const std::vector<Tag>& fibre(std::size_t j) const { return d_->fibres.at(j); }
  const Tag& element(std::size_t j, std::uint32_t k) const { return d_->fibres.at(j).at(k); }
  std::size_t size(std::size_t j) const { return d_->fibres.at(j).size(); }
  std::size_t total() const;
  std::vector<std::size_t> sizes() const;
  std::optional<std::uint32_t> find(std::size_t j, const Tag& t) const;
  // Throws StructuralError if absent.
  std::uint32_t index_of(std::size_t j, const Tag& t) const;

  std::size_t hash() const { return d_->hash; }
  friend bool operator==(const FibredSet& a, const FibredSet& b);
  Json describe() const;

 private:
  struct Data {
    std::vector<std::vector<Tag>> fibres;
    std::vector<std::unordered_map<Tag, std::uint32_t, TagHash>> index;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Data> d_;
};

/// Morphism of Set/O: fibre-preserving function, stored as image indices.
struct FibreMap {
  FibredSet dom;
  FibredSet cod;
  std::vector<std::vector<std::uint32_t>> image;  // image[j][k] indexes cod.fibre(j)

  std::uint32_t operator()(std::size_t j, std::uint32_t k) const { return image.at(j).at(k); }
  const Tag& image_tag(std::size_t j, std::uint32_t k) const { return cod.element(j, image[j][k]); }

  // Builds the map x ↦ f(j, x) (as tags); throws StructuralError if an image
  // is not an element of the codomain fibre.
  static FibreMap from_tags(const FibredSet& dom, const FibredSet& cod,
                            const std::function<Tag(std::size_t, const Tag&)>& f);
  bool bijective() const;
};

/// Set/O for O = {0..base-1}, presented computably. Objects are generated on
/// demand; hom sets are enumerable but usually only sampled.
class SliceCategory {
 public:
  using Object = FibredSet;
  using Morphism = FibreMap;

  explicit SliceCategory(std::size_t base) : base_(base) {}
  std::size_t base() const { return base_; }

  const FibredSet& dom(const FibreMap& f) const { return f.dom; }
  const FibredSet& cod(const FibreMap& f) const { return f.cod; }
  FibreMap identity(const FibredSet& x) const;
  FibreMap compose(const FibreMap& g, const FibreMap& f) const;
  bool same_object(const FibredSet& a, const FibredSet& b) const { return a == b; }
  bool same_morphism(const FibreMap& f, const FibreMap& g) const;
  std::optional<FibreMap> inverse(const FibreMap& f) const;
  Json describe(const FibredSet& x) const { return x.describe(); }
  Json describe(const FibreMap& f) const;
  Json explain_difference(const FibreMap& f, const FibreMap& g) const;

  /// All fibre-preserving maps X → Y. Throws PreconditionError above `cap`.
  std::vector<FibreMap> hom(const FibredSet& x, const FibredSet& y, std::size_t cap = 4096) const;
  std::size_t hom_count(const FibredSet& x, const FibredSet& y) const;

  /// Random object with fibre sizes uniform in [0, bound]; elements are
  /// labelled `<prefix><fibre>.<k>`.
  FibredSet sample_object(Rng& rng, std::size_t bound, const std::string& prefix = "x") const;
  /// Random map X → Y, or nothing when hom(X, Y) is empty.
  std::optional<FibreMap> sample_morphism(Rng& rng, const FibredSet& x, const FibredSet& y) const;
  /// Random morphism with a freshly sampled domain and codomain.
  FibreMap sample_arrow(Rng& rng, std::size_t bound) const;
  /// Random morphism out of `x` into a fresh codomain.
  FibreMap sample_arrow_from(Rng& rng, const FibredSet& x, std::size_t bound) const;

  friend bool operator==(const SliceCategory& a, const SliceCategory& b) { return a.base_ == b.base_; }

 private:
  void require_base(const FibredSet& x) const;
  std::size_t base_;
};

using SlicePtr = std::shared_ptr<const SliceCategory>;
using SliceFunctor = Functor<SliceCategory, SliceCategory>;

/// Sampling knobs for the large categories.
struct SamplingConfig {
  std::size_t fibre_bound = 3;
  std::size_t samples = 50;
};

/// ξ_!: Set/U → Set/O, (NA)_i = Σ_{ξ(u)=i} A_u with elements tagged (u, a).
SliceFunctor direct_image(const IndexMap& xi);
/// ξ*: Set/O → Set/U, (RX)_u = X_{ξ(u)}; elements keep their tags.
SliceFunctor inverse_image(const IndexMap& xi);
/// ξ_! ⊣ ξ*, as an adjunction with source Set/U.
///   unit    a ↦ (u, a)  in (ξ*ξ_!A)_u
///   counit  (u, x) ↦ x  in X_i
Adjunction<SliceCategory, SliceCategory> slice_adjunction(const IndexMap& xi);

/// ξ_*: Set/U → Set/O for injective ξ: (ξ_*A)_i = A_u if i = ξ(u), a singleton
/// otherwise. Right adjoint to ξ*, fully faithful.
SliceFunctor dependent_product(const IndexMap& mu);
/// ξ* ⊣ ξ_* for injective ξ, a reflection of Set/O onto Set/U.
Adjunction<SliceCategory, SliceCategory> product_reflection(const IndexMap& mu);

}  // namespace skewcat

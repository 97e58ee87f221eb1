#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/report.hpp"

namespace skewcat {

/// Object of a finite category: a dense index.
struct Ob {
  std::uint32_t index = 0;
  friend auto operator<=>(const Ob&, const Ob&) = default;
};

/// Morphism of a finite category: a dense index.
struct Mor {
  std::uint32_t index = 0;
  friend auto operator<=>(const Mor&, const Mor&) = default;
};

/// Raw tables of a finite category. `composite[g][f]` holds g∘f when
/// tgt(f) = src(g) and is empty otherwise.
struct CategoryTables {
  struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::size_t> identities;
  std::vector<std::vector<std::optional<std::size_t>>> composite;

  friend bool operator==(const CategoryTables&, const CategoryTables&) = default;
};

/// Explicit finite category. Every table is total and immutable once built;
/// construction validates structure only (ranges, which composites are
/// defined). Associativity and unit laws are checked by check_category.
class FinCategory {
 public:
  using Object = Ob;
  using Morphism = Mor;

  // Throws StructuralError on malformed tables.
  explicit FinCategory(CategoryTables tables);

  std::size_t object_count() const { return t_.objects.size(); }
  std::size_t morphism_count() const { return t_.morphisms.size(); }
  const CategoryTables& tables() const { return t_; }

  std::vector<Ob> objects() const;
  std::vector<Mor> morphisms() const;
  const std::vector<Mor>& hom(Ob a, Ob b) const { return homs_[a.index * object_count() + b.index]; }

  Ob dom(Mor f) const { return Ob{static_cast<std::uint32_t>(t_.morphisms.at(f.index).src)}; }
  Ob cod(Mor f) const { return Ob{static_cast<std::uint32_t>(t_.morphisms.at(f.index).tgt)}; }
  Mor identity(Ob a) const { return Mor{static_cast<std::uint32_t>(t_.identities.at(a.index))}; }
  bool composable(Mor g, Mor f) const { return cod(f) == dom(g); }
  Mor compose(Mor g, Mor f) const;
  bool same_object(Ob a, Ob b) const { return a == b; }
  bool same_morphism(Mor f, Mor g) const { return f == g; }
  std::optional<Mor> inverse(Mor f) const { return inverses_.at(f.index); }
  bool is_identity(Mor f) const { return identity(dom(f)) == f && dom(f) == cod(f); }

  const std::string& name(Ob a) const { return t_.objects.at(a.index); }
  const std::string& name(Mor f) const { return t_.morphisms.at(f.index).name; }
  std::optional<Ob> find_object(const std::string& name) const;
  std::optional<Mor> find_morphism(const std::string& name) const;

  Json describe(Ob a) const { return name(a); }
  Json describe(Mor f) const { return name(f); }

  // Isomorphism search between two objects, first in hom order.
  std::optional<Mor> find_isomorphism(Ob a, Ob b) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) { return a.t_ == b.t_; }

 private:
  CategoryTables t_;
  std::vector<std::vector<Mor>> homs_;
  std::vector<std::optional<Mor>> inverses_;
};

using FinCatPtr = std::shared_ptr<const FinCategory>;

/// Incremental construction. Composites with identities are filled in
/// automatically unless set explicitly; finish() rejects any other missing
/// composite.
class FinCategoryBuilder {
 public:
  Ob add_object(const std::string& name, const std::string& identity_name = {});
  Mor add_morphism(const std::string& name, Ob src, Ob tgt);
  void set_composite(Mor g, Mor f, Mor gf);
  Mor identity(Ob a) const { return Mor{static_cast<std::uint32_t>(t_.identities.at(a.index))}; }
  // Throws StructuralError when a composable pair has no composite.
  FinCategory finish() const;
  CategoryTables tables_with_identity_composites() const;

 private:
  CategoryTables t_;
  std::vector<std::vector<std::optional<std::size_t>>> explicit_;
};

// ---- Checks -------------------------------------------------------------

/// Associativity and unit laws; each violation names its morphisms.
LawReport check_category(const FinCategory& c);

std::optional<Mor> is_invertible(Mor m, const FinCategory& c);

/// Functor between finite categories given by tables.
struct FinFunctor {
  FinCatPtr dom;
  FinCatPtr cod;
  std::vector<Ob> omap;
  std::vector<Mor> mmap;

  Ob operator()(Ob a) const { return omap.at(a.index); }
  Mor map(Mor f) const { return mmap.at(f.index); }
  Functor<FinCategory, FinCategory> as_functor() const;
  friend bool operator==(const FinFunctor& a, const FinFunctor& b) {
    return *a.dom == *b.dom && *a.cod == *b.cod && a.omap == b.omap && a.mmap == b.mmap;
  }
};

/// Throws StructuralError when tables are out of range.
LawReport check_functor(const FinFunctor& F);

FinFunctor identity_functor(FinCatPtr c);
FinFunctor constant_functor(FinCatPtr dom, FinCatPtr cod, Ob target);
FinFunctor compose(const FinFunctor& G, const FinFunctor& F);

/// Natural transformation between parallel finite functors.
struct FinNatTrans {
  FinFunctor source;
  FinFunctor target;
  std::vector<Mor> components;

  Mor operator()(Ob a) const { return components.at(a.index); }
};

/// Throws StructuralError when the functors are not parallel or a component
/// has the wrong endpoints.
LawReport check_natural(const FinNatTrans& t);

FinNatTrans identity_transformation(const FinFunctor& F);
FinNatTrans vertical(const FinNatTrans& s, const FinNatTrans& t);       // s∘t
FinNatTrans whisker_left(const FinFunctor& H, const FinNatTrans& t);    // H t
FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& K);   // t K

/// Is the functor full and faithful (bijective on every hom set)?
bool fully_faithful(const FinFunctor& F);

// ---- Stock categories ---------------------------------------------------

FinCategory terminal_category();
FinCategory walking_arrow();        // 0 --f--> 1
FinCategory walking_isomorphism();  // f: 0 → 1, g: 1 → 0 inverse
FinCategory discrete_category(std::size_t n);
FinCategory codiscrete_category(std::size_t n);
FinCategory parallel_pair();        // f, g: 0 → 1
/// Preorder on n objects; leq[i][j] means a unique arrow i → j. The relation
/// must be reflexive and transitive.
FinCategory preorder_category(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names = {});
/// One-object category of a finite monoid with unit 0 and table[a][b] = a·b
/// (as the composite a∘b).
FinCategory monoid_category(const std::vector<std::vector<std::size_t>>& table,
                            const std::vector<std::string>& names = {});
FinCategory product_category(const FinCategory& a, const FinCategory& b);
/// Category of functions between finite sets of the given sizes, generated by
/// `generators` (src, tgt, table) under composition. Throws PreconditionError
/// if the closure exceeds `max_morphisms`.
struct FunctionArrow {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<std::size_t> table;
};
FinCategory concrete_category(const std::vector<std::size_t>& sizes, const std::vector<FunctionArrow>& generators,
                              std::size_t max_morphisms = 64);

}  // namespace skewcat

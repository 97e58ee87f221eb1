#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/bigcat.hpp"
#include "skewcat/fincat.hpp"
#include "skewcat/reflection.hpp"
#include "skewcat/rng.hpp"
#include "skewcat/skewmon.hpp"
#include "skewcat/warping.hpp"
#include "skewcat/comonad_lift.hpp"

namespace skewcat {

using FinSkew = SkewMonoidal<FinCategory>;

/// Finite lattice presented as a thin category. Elements are bitmasks over a
/// small ground set ordered by inclusion; meets are intersections.
struct Lattice {
  FinCatPtr cat;
  std::vector<std::uint32_t> sets;
  std::vector<std::vector<std::size_t>> meet;
  std::vector<std::vector<std::size_t>> join;
  std::size_t top = 0;
  std::size_t bottom = 0;

  Ob ob(std::size_t i) const { return Ob{static_cast<std::uint32_t>(i)}; }
  std::size_t size() const { return sets.size(); }
  bool leq(std::size_t a, std::size_t b) const { return (sets[a] & ~sets[b]) == 0; }
};

/// Lattice of the given family of subsets, which must contain the full ground
/// set and be closed under intersection. Throws PreconditionError otherwise.
Lattice moore_lattice(std::vector<std::uint32_t> family, std::uint32_t ground);
/// Down-sets of a poset on n points (a distributive, hence Heyting, lattice).
/// `below[i]` is the bitmask of points ≤ i.
Lattice downset_lattice(const std::vector<std::uint32_t>& below);

/// Skew structure on a thin category given by an object table; each
/// constraint is the unique arrow of its type. Throws PreconditionError when
/// a required arrow is missing.
FinSkew thin_skew(FinCatPtr c, std::vector<std::vector<Ob>> tensor, Ob unit);
/// Cartesian (meet) monoidal structure with unit top.
FinSkew meet_structure(const Lattice& l);
/// Skew structure A⊗B = h(A)∧B with unit top, for a closure operator h.
FinSkew closure_structure(const Lattice& l, const std::vector<std::size_t>& h);
/// Closure operator sending x to the least member of `closed` above it.
std::vector<std::size_t> closure_of(const Lattice& l, const std::vector<std::size_t>& closed);
/// Random family of lattice elements containing top and closed under meets.
std::vector<std::size_t> random_moore_family(const Lattice& l, Rng& rng);

/// Product of a skew structure with a commutative monoid M acting as a
/// one-object monoidal category with constraints α = 1, λ = u, ρ = u⁻¹ for a
/// unit u of M. `table[a][b]` is a·b with neutral element 0.
FinSkew monoid_twist(const FinSkew& p, const std::vector<std::vector<std::size_t>>& table, std::size_t u,
                     std::size_t u_inverse, const std::vector<std::string>& names = {});
/// Cyclic group Z_n as a monoid table.
std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n);

/// Random finite category with at most the given numbers of objects and
/// morphisms: either a concrete category of functions or a preorder.
FinCategory random_category(Rng& rng, std::size_t max_objects = 4, std::size_t max_morphisms = 12);
/// Random preorder on n points.
FinCategory random_preorder(Rng& rng, std::size_t n);
/// Random function U → O.
IndexMap random_index_map(Rng& rng, std::size_t dom, std::size_t cod, bool injective);

/// A finite skew monoidal category together with a reflection.
struct ReflectionInstance {
  std::string name;
  FinSkew structure;
  FinReflection reflection;
};

/// Deterministic corpus of finite reflections with skew structures on the
/// ambient category: lattices with meet and closure-warped tensors,
/// monoid-twisted products, and reflections of random categories.
std::vector<ReflectionInstance> reflection_corpus(std::uint64_t seed, std::size_t target = 24);

/// Finite categories with a reflective full subcategory, without a skew
/// structure; includes non-thin examples.
std::vector<FinReflection> plain_reflection_corpus(std::uint64_t seed, std::size_t target = 24);

/// A skew warping on a finite category, named for reports.
struct WarpingInstance {
  std::string name;
  SkewWarping<FinCategory, FinCategory> warping;
};

/// Identity warpings of lattice and monoid-twisted structures, and
/// evaluation-action warpings of the structures small enough for [A,A].
std::vector<WarpingInstance> warping_corpus(std::uint64_t seed, std::size_t target = 12);

/// The comonad A ↦ c∧A on a lattice carrying a structure X⊗A = h(X)∧A, with
/// every component the unique arrow of its type. Idempotent and strong.
ActegoryComonad<FinCategory, FinCategory> meet_comonad(const Lattice& l, const FinSkew& s, std::size_t c);

}  // namespace skewcat

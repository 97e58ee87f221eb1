#pragma once

#include <memory>
#include <string>
#include <vector>

#include "skewcat/bigcat.hpp"
#include "skewcat/comonad_lift.hpp"
#include "skewcat/fincat.hpp"
#include "skewcat/report.hpp"
#include "skewcat/rng.hpp"
#include "skewcat/skewmon.hpp"

namespace skewcat {

using SliceSkew = SkewMonoidal<SliceCategory>;
using SliceCoalgebras = CoalgebraCategory<SliceCategory>;
using SliceCoalgebra = Coalgebra<SliceCategory>;
using SliceCoalgebraMap = CoalgebraMorphism<SliceCategory>;

/// Skew structure on Set/ob(C):
///   (X⊗Y)_j = Σ_i X_i × C(i,j) × Y_j, elements tagged (x, c, y) with c the
///   morphism index in C;  I_j = {*};
///   α((x,a,y),b,z) = (x, b∘a, (y,b,z)),  λ(*,c,y) = y,  ρ(x) = (x, 1_j, *).
SliceSkew build_slice_skew(FinCatPtr c);

/// The full image of ξ: U → ob(C): objects U, A(u,v) = C(ξu, ξv), with the
/// fully faithful functor A → C acting as ξ on objects.
struct FullImage {
  FinCatPtr category;
  FinFunctor functor;
};
FullImage full_image(const IndexMap& xi, FinCatPtr c);

/// G = ξ_!ξ* on Set/O acting on itself by ⊗. Elements of GX are (u, x):
///   δ(u,x) = (u,(u,x)),  ε(u,x) = x,  γ(x,c,(u,y)) = (u,(x,c,y)).
ActegoryComonad<SliceCategory, SliceCategory> slice_comonad(const SliceSkew& s, const IndexMap& xi);

/// The equivalence between G-coalgebras and Set/U.
///   from_slice P = (ξ_!P, (u,p) ↦ (u,(u,p)))
///   to_slice (X,a) has fibre {x ∈ X_{ξu} : a(x) = (u,x)} over u
///   iota_P: P → to_slice(from_slice P),  p ↦ (u,p)
///   e_Q: from_slice(to_slice Q) → Q,     (u,x) ↦ x
struct CoalgebraEquivalence {
  CoalgebraPtr<SliceCategory> coalgebras;
  SlicePtr slices;
  Functor<SliceCategory, SliceCoalgebras> from_slice;
  Functor<SliceCoalgebras, SliceCategory> to_slice;
  Components<SliceCategory, SliceCategory> iota;
  Components<SliceCoalgebras, SliceCoalgebras> e;
};
CoalgebraEquivalence coalgebra_equivalence(const IndexMap& xi, CoalgebraPtr<SliceCategory> co);

/// θ: (A ⊗_full-image B) → target, (a, m, b) ↦ ((u,a), Fm, (v,b)) for m: u → v.
/// Throws StructuralError if target lacks an image element.
FibreMap full_image_comparison(const FullImage& fi, const SliceSkew& fi_structure, const FibredSet& a,
                               const FibredSet& b, const FibredSet& target);

/// The unique map between objects whose fibres are all singletons.
FibreMap singleton_map(const FibredSet& from, const FibredSet& to);

/// Binary coproduct in Set/O with injections; elements tagged (0, x) / (1, y).
struct SliceCoproduct {
  FibredSet object;
  FibreMap left;
  FibreMap right;
};
SliceCoproduct slice_coproduct(const FibredSet& x, const FibredSet& y);

/// The canonical comparisons X⊗Z + Y⊗Z → (X+Y)⊗Z and Z⊗X + Z⊗Y → Z⊗(X+Y)
/// are bijections.
bool preserves_coproducts(const SliceSkew& s, const FibredSet& x, const FibredSet& y, const FibredSet& z);

/// Outcome of a worked example: laws checked, plus explicit witnesses
/// (bijections as element pairs, non-invertible components).
struct DemoReport {
  std::string name;
  LawReport laws;
  Json witnesses = Json::object();

  bool ok() const { return laws.ok(); }
  Json to_json() const;
};

/// Element pairs of a fibre map, fibre by fibre.
Json bijection_json(const FibreMap& f);

/// Injective μ: the coreflection ξ_! ⊣ ξ*, the strengthened condition
/// G(X⊗ε_Y) invertible (and equal to the elementwise chain), the coreflected
/// structure, invertibility of φ_{NA,Y}, a search for a non-invertible φ_{X,Y},
/// and the isomorphism to the slice structure of the full image.
/// Throws PreconditionError when μ is not injective.
DemoReport injective_coreflection_demo(FinCatPtr c, const IndexMap& mu, Rng& rng, const SamplingConfig& cfg = {});

/// Arbitrary ξ: the comonad G = ξ_!ξ*, its actegory axioms, the lifted
/// identity warping on coalgebras, the transport to Set/U and the
/// isomorphism to the slice structure of the full image.
DemoReport noninjective_comonad_demo(FinCatPtr c, const IndexMap& xi, Rng& rng, const SamplingConfig& cfg = {});

/// The idempotent comparison for injective μ on sampled coalgebras.
DemoReport idempotent_slice_demo(FinCatPtr c, const IndexMap& mu, Rng& rng, const SamplingConfig& cfg = {});

/// Random sample of quadruples of objects of Set/n.
ObjectSample<SliceCategory> slice_object_sample(const SliceCategory& cat, Rng& rng, const SamplingConfig& cfg,
                                                const std::string& prefix = "x");

}  // namespace skewcat

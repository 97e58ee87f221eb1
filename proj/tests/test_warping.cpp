#include <memory>

#include "doctest.h"
#include "skewcat/corpus.hpp"
#include "skewcat/slice.hpp"
#include "skewcat/warping.hpp"

using namespace skewcat;

namespace {

FinCatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

// Strict monoidal structure on the one-object category of the commutative
// idempotent monoid {1, e}: ⊗ on arrows is multiplication.
FinSkew idempotent_monoid_structure() {
  auto c = share(monoid_category({{0, 1}, {1, 1}}, {"1", "e"}));
  FinSkew s;
  s.carrier = c;
  s.unit = Ob{0};
  s.tensor = [](Ob, Ob) { return Ob{0}; };
  s.tensor_map = [c](Mor f, Mor g) { return c->compose(f, g); };
  s.alpha = [c](Ob, Ob, Ob) { return c->identity(Ob{0}); };
  s.lambda = [c](Ob) { return c->identity(Ob{0}); };
  s.rho = [c](Ob) { return c->identity(Ob{0}); };
  return s;
}

template <Category C>
bool same_structure_on(const SkewMonoidal<C>& a, const SkewMonoidal<C>& b, const ObjectSample<C>& sample) {
  const C& c = a.cat();
  if (!c.same_object(a.unit, b.unit)) return false;
  for (const auto& [x, y, z] : sample.triples) {
    if (!c.same_object(a(x, y), b(x, y))) return false;
    if (!c.same_morphism(a.alpha(x, y, z), b.alpha(x, y, z))) return false;
  }
  for (const auto& x : sample.singles)
    if (!c.same_morphism(a.lambda(x), b.lambda(x)) || !c.same_morphism(a.rho(x), b.rho(x))) return false;
  return true;
}

}  // namespace

TEST_CASE("tensor as action: the action axioms are the pentagon, left-unit and middle-unit axioms") {
  Rng rng(3);
  std::vector<FinSkew> structures{meet_structure(downset_lattice({0b01, 0b10})), idempotent_monoid_structure()};
  // A broken associator on a monoid twist fails the pentagon.
  auto broken = monoid_twist(meet_structure(downset_lattice({0b1})), cyclic_table(3), 1, 2);
  auto good_alpha = broken.alpha;
  auto c = broken.carrier;
  broken.alpha = [good_alpha, c](Ob a, Ob b, Ob x) {
    auto m = good_alpha(a, b, x);
    return c->hom(c->dom(m), c->cod(m)).back() == m ? c->hom(c->dom(m), c->cod(m)).front() : c->hom(c->dom(m), c->cod(m)).back();
  };
  structures.push_back(broken);
  for (const auto& s : structures) {
    auto sample = exhaustive_sample(s.cat());
    auto axioms = check_skew_axioms(s, sample);
    auto act = check_action(tensor_action(s), exhaustive_action_sample(s.cat(), s.cat()));
    CHECK(act.find("lsa1")->ok() == axioms.find("pentagon")->ok());
    CHECK(act.find("lsa2")->ok() == axioms.find("left-unit")->ok());
    CHECK(act.find("lsa3")->ok() == axioms.find("middle-unit")->ok());
  }
  CHECK_FALSE(check_skew_axioms(broken, exhaustive_sample(broken.cat())).ok());
}

TEST_CASE("a rotated left action constraint fails lsa2") {
  auto c = share(walking_arrow());
  auto s = build_slice_skew(c);
  auto act = tensor_action(s);
  // λ followed by a cyclic shift inside each fibre.
  auto lam = act.lambda;
  act.lambda = [lam](const FibredSet& y) {
    auto m = lam(y);
    for (std::size_t j = 0; j < y.base(); ++j)
      for (auto& k : m.image[j]) k = static_cast<std::uint32_t>((k + 1) % y.size(j));
    return m;
  };
  std::vector<FibredSet> obs;
  Rng rng(2);
  for (int i = 0; i < 6; ++i) obs.push_back(s.cat().sample_object(rng, 3));
  obs.push_back(FibredSet(std::vector<std::vector<Tag>>{{Tag::atom("p"), Tag::atom("q")}, {Tag::atom("r"), Tag::atom("s")}}));
  auto r = check_action(act, action_sample_from<SliceCategory, SliceCategory>(obs, obs));
  CHECK(r.find("lsa1")->ok());
  REQUIRE_FALSE(r.find("lsa2")->ok());
  CHECK(r.find("lsa2")->violations.front().contains("diff"));
  CHECK(check_action(tensor_action(s), action_sample_from<SliceCategory, SliceCategory>(obs, obs)).ok());
}

TEST_CASE("evaluation action of the endofunctor category") {
  for (auto a : {share(walking_arrow()), share(monoid_category(cyclic_table(2))), share(codiscrete_category(2)),
                 share(parallel_pair())}) {
    auto e = endofunctor_category(a);
    CHECK(check_category(*e.cat).ok());
    auto comp = e.composition();
    CHECK(check_skew_axioms(comp, exhaustive_sample(*e.cat)).ok());
    CHECK(check_skew_naturality(comp, exhaustive_morphisms(*e.cat, 20000)).ok());
    auto act = e.evaluation();
    CHECK(check_action(act, exhaustive_action_sample(*e.cat, *a)).ok());
    std::vector<std::pair<Mor, Mor>> pairs;
    std::vector<std::tuple<Mor, Mor, Mor>> triples;
    for (auto s : e.cat->morphisms())
      for (auto f : a->morphisms()) {
        pairs.push_back({s, f});
        triples.push_back({s, e.cat->morphisms().front(), f});
      }
    CHECK(check_action_naturality(act, pairs, triples).ok());
  }
  // Counting oracle: endofunctors of the walking arrow are the monotone maps of {0 < 1}.
  CHECK(endofunctor_category(share(walking_arrow())).functors.size() == 3);
  // Z2 has two monoid endomorphisms and [Z2,Z2] has the centre {0,1} as each hom... at the identity.
  CHECK(endofunctor_category(share(monoid_category(cyclic_table(2)))).functors.size() == 2);
  CHECK_THROWS_AS(endofunctor_category(share(discrete_category(4))), PreconditionError);
}

TEST_CASE("identity warping round trip is exact") {
  Rng rng(17);
  auto l = downset_lattice({0b001, 0b011, 0b100});
  for (const auto& s : {meet_structure(l), closure_structure(l, closure_of(l, random_moore_family(l, rng))),
                        monoid_twist(meet_structure(downset_lattice({0b1})), cyclic_table(3), 1, 2)}) {
    auto w = identity_warping(s);
    auto sample = exhaustive_sample(s.cat());
    auto r = check_warping(w, sample);
    CHECK_MESSAGE(r.ok(), r.to_json().dump());
    CHECK(check_warping_naturality(w, exhaustive_morphisms(s.cat())).ok());
    auto out = warping_to_skew(w, sample);
    CHECK(same_structure_on(out.structure, s, sample));
    CHECK(check_opmonoidal(out.opmonoidal, sample).ok());
  }
  // The slice structure too, on samples.
  auto s = build_slice_skew(share(walking_arrow()));
  auto sample = slice_object_sample(s.cat(), rng, {2, 10});
  auto w = identity_warping(s);
  CHECK(check_warping(w, sample).ok());
  CHECK(same_structure_on(warping_to_skew(w).structure, s, sample));
}

TEST_CASE("a non-identity v0 breaks warpunit4") {
  auto s = idempotent_monoid_structure();
  auto sample = exhaustive_sample(s.cat());
  REQUIRE(check_skew_axioms(s, sample).ok());
  auto w = identity_warping(s);
  CHECK(check_warping(w, sample).ok());
  w.v0 = Mor{1};  // e: TK → I
  auto r = check_warping(w, sample);
  CHECK_FALSE(r.find("warpunit4")->ok());
  CHECK_THROWS_AS(warping_to_skew(w, sample), PreconditionError);
}

TEST_CASE("evaluation-action warpings encode the structure they come from") {
  auto l = downset_lattice({0b1, 0b11});
  Rng rng(4);
  for (const auto& s : {meet_structure(l), closure_structure(l, closure_of(l, random_moore_family(l, rng))),
                        monoid_twist(meet_structure(downset_lattice({})), cyclic_table(3), 1, 2),
                        idempotent_monoid_structure()}) {
    auto e = endofunctor_category(s.carrier);
    auto w = evaluation_warping(e, s);
    auto sample = exhaustive_sample(s.cat());
    auto r = check_warping(w, sample);
    CHECK_MESSAGE(r.ok(), r.to_json().dump());
    CHECK(check_warping_naturality(w, exhaustive_morphisms(s.cat())).ok());
    auto out = warping_to_skew(w, sample);
    // A⊗̄B = (TA)(B) is the original tensor, and the constraints agree.
    CHECK(same_structure_on(out.structure, s, sample));
    CHECK(check_skew_axioms(out.structure, sample).ok());
    auto op = check_opmonoidal(out.opmonoidal, sample);
    CHECK(op.ok());
  }
}

TEST_CASE("every corpus warping yields a skew structure with T opmonoidal") {
  auto corpus = warping_corpus(99, 12);
  CHECK(corpus.size() == 12);
  std::size_t evaluation = 0;
  for (const auto& inst : corpus) {
    CAPTURE(inst.name);
    auto sample = exhaustive_sample(inst.warping.action.cat());
    REQUIRE(check_warping(inst.warping, sample).ok());
    auto out = warping_to_skew(inst.warping, sample);
    CHECK(check_skew_axioms(out.structure, sample).ok());
    CHECK(check_skew_naturality(out.structure, exhaustive_morphisms(out.structure.cat())).ok());
    CHECK(check_opmonoidal(out.opmonoidal, sample).ok());
    if (inst.name.rfind("evaluation", 0) == 0) ++evaluation;
  }
  CHECK(evaluation >= 3);
}

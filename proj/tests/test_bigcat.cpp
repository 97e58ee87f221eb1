#include "doctest.h"
#include "skewcat/bigcat.hpp"

using namespace skewcat;

namespace {
FibredSet fs(std::vector<std::vector<std::string>> fibres) {
  std::vector<std::vector<Tag>> out;
  for (auto& f : fibres) {
    out.emplace_back();
    for (auto& s : f) out.back().push_back(Tag::atom(s));
  }
  return FibredSet(out);
}
std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}
}  // namespace

TEST_CASE("hom sets of Set/1 are all functions") {
  SliceCategory s(1);
  auto x = fs({{"a", "b"}});
  auto y = fs({{"p", "q", "r"}});
  CHECK(s.hom(x, y).size() == ipow(3, 2));
  CHECK(s.hom_count(x, y) == 9);
  auto homs = s.hom(x, x);
  bool has_id = false;
  for (auto& m : homs) has_id = has_id || s.same_morphism(m, s.identity(x));
  CHECK(has_id);
}

TEST_CASE("empty fibres") {
  SliceCategory s(2);
  CHECK(s.hom(fs({{}, {"a"}}), fs({{"p"}, {"q"}})).size() == 1);
  CHECK(s.hom(fs({{"a"}, {}}), fs({{}, {"q"}})).empty());
  CHECK(s.hom(fs({{}, {}}), fs({{}, {}})).size() == 1);
}

TEST_CASE("direct image sums fibres") {
  auto n = direct_image(IndexMap(2, {0}));
  auto na = n(fs({{"a"}}));
  CHECK(na.sizes() == std::vector<std::size_t>{1, 0});
  auto n2 = direct_image(IndexMap(1, {0, 0}));
  CHECK(n2(fs({{"a"}, {"b"}})).sizes() == std::vector<std::size_t>{2});
  auto id = direct_image(IndexMap::identity(2));
  CHECK(id(fs({{"a"}, {"b", "c"}})).sizes() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("inverse image pulls back") {
  auto r = inverse_image(IndexMap(2, {0, 0}));
  auto rx = r(fs({{"p", "q"}, {"r"}}));
  CHECK(rx.sizes() == std::vector<std::size_t>{2, 2});
  CHECK(rx.fibre(0) == rx.fibre(1));
  CHECK(r(FibredSet::empty(2)).sizes() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("slice adjunction") {
  Rng rng(1);
  for (auto xi : {IndexMap(3, {2, 0}), IndexMap(1, {0, 0}), IndexMap::identity(2), IndexMap(2, {1, 1, 0})}) {
    auto adj = slice_adjunction(xi);
    std::vector<FibredSet> as, xs;
    for (int i = 0; i < 10; ++i) {
      as.push_back(adj.source->sample_object(rng, 3));
      xs.push_back(adj.target->sample_object(rng, 3));
    }
    CHECK(check_triangles(adj, as, xs).ok());
    for (auto& x : xs) {
      auto g = adj.left(adj.right(x));
      for (std::size_t j = 0; j < xi.cod_size; ++j) CHECK(g.size(j) == x.size(j) * xi.preimage(j).size());
    }
    if (xi.injective())
      for (auto& a : as) CHECK(adj.unit(a).bijective());
    std::vector<FibreMap> fa, fx;
    for (int i = 0; i < 10; ++i) {
      fa.push_back(adj.source->sample_arrow(rng, 3));
      fx.push_back(adj.target->sample_arrow(rng, 3));
    }
    LawReport r;
    auto idS = identity_functor<SliceCategory>();
    check_naturality_on<SliceCategory, SliceCategory>(r, "unit", *adj.source, *adj.source, idS,
                                                      compose_functors(adj.right, adj.left), adj.unit, fa);
    check_naturality_on<SliceCategory, SliceCategory>(r, "counit", *adj.target, *adj.target,
                                                      compose_functors(adj.left, adj.right), idS, adj.counit, fx);
    CHECK(r.ok());
  }
}

TEST_CASE("counit outside the image is the empty map") {
  auto adj = slice_adjunction(IndexMap(2, {1}));
  auto x = fs({{"p"}, {"q"}});
  auto e = adj.counit(x);
  CHECK(e.dom.size(0) == 0);
  CHECK(e.dom.size(1) == 1);
  CHECK(e.image_tag(1, 0) == Tag::atom("q"));
}

TEST_CASE("non-injective counit is not invertible") {
  auto adj = slice_adjunction(IndexMap(1, {0, 0}));
  auto e = adj.counit(fs({{"p"}}));
  CHECK(e.dom.size(0) == 2);
  CHECK_FALSE(adj.target->inverse(e));
}

TEST_CASE("product reflection for injective maps") {
  Rng rng(3);
  auto adj = product_reflection(IndexMap(3, {2, 0}));
  std::vector<FibredSet> xs, as;
  for (int i = 0; i < 10; ++i) {
    xs.push_back(adj.source->sample_object(rng, 3));
    as.push_back(adj.target->sample_object(rng, 3));
  }
  CHECK(check_triangles(adj, xs, as).ok());
  for (auto& a : as) CHECK(adj.counit(a).bijective());
  CHECK_THROWS_AS(dependent_product(IndexMap(1, {0, 0})), PreconditionError);
}

#include "doctest.h"
#include "skewcat/rng.hpp"
#include "skewcat/tag.hpp"

using namespace skewcat;

TEST_CASE("tags compare structurally") {
  auto a = Tag::tuple({Tag::atom("x"), Tag::number(3), Tag::atom("y")});
  auto b = Tag::tuple({Tag::atom("x"), Tag::number(3), Tag::atom("y")});
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.str() == "(x,3,y)");
  CHECK(a[1].as_number() == 3);
  CHECK_FALSE(a == Tag::tuple({Tag::atom("x"), Tag::number(4), Tag::atom("y")}));
  CHECK(Tag() == Tag::number(0));
}

TEST_CASE("tags round-trip through json") {
  auto t = Tag::tuple({Tag::number(1), Tag::tuple({Tag::atom("p"), Tag::number(0)})});
  CHECK(Tag::from_json(t.to_json()) == t);
}

TEST_CASE("rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(7);
    CHECK(x == b.below(7));
    CHECK(x < 7);
  }
}

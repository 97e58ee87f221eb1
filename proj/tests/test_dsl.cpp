#include "doctest.h"
#include "skewcat/driver.hpp"

using namespace skewcat;

namespace {

InputError::Kind error_kind(const std::string& text) {
  try {
    resolve(parse(text));
  } catch (const InputError& e) {
    return e.kind();
  }
  FAIL("document was accepted: " << text);
  return InputError::Kind::syntax;
}

SourcePos error_pos(const std::string& text) {
  try {
    resolve(parse(text));
  } catch (const InputError& e) {
    return e.pos();
  }
  FAIL("document was accepted");
  return {};
}

}  // namespace

TEST_CASE("empty and trivial documents") {
  auto empty = parse("");
  CHECK(empty.declarations.empty());
  CHECK(empty.directives.empty());
  CHECK(parse("  # only a comment\n\n;;\n") == empty);

  auto doc = parse("category T { objects x }");
  auto env = resolve(doc);
  const auto& t = *env.categories.at("T");
  CHECK(t.object_count() == 1);
  CHECK(t.morphism_count() == 1);
  CHECK(t.name(t.identity(Ob{0})) == "idx");
}

TEST_CASE("category declarations build the declared tables") {
  auto env = resolve(parse(R"(
category C {
  objects 0 1 2
  identity 2 = one
  mor f: 0 -> 1; mor g: 1 -> 2
  mor h: 0 -> 2
  comp g f = h
}
)"));
  const auto& c = *env.categories.at("C");
  CHECK(c.object_count() == 3);
  CHECK(c.morphism_count() == 6);
  CHECK(c.name(c.identity(Ob{2})) == "one");
  auto f = *c.find_morphism("f"), g = *c.find_morphism("g");
  CHECK(c.name(c.compose(g, f)) == "h");
  CHECK(check_category(c).ok());
}

TEST_CASE("round trip through the printer") {
  const char* text = R"(# comment
category C { objects 0 1; mor f: 0 -> 1 }
category D
{
  objects a
}
map xi: U -> C { u |-> 0; v |-> 0 }
fibred X over C { 0: p q; 1: r }
functor F: D -> C { a |-> 1 }
functor G: C -> D { 0 |-> a; 1 |-> a; f |-> ida }
adjunction A: G -| F { unit 0 = f; unit 1 = id1; counit a = ida }
adjunction R = reflect C onto 1
skew S on C { unit 1; tensor 0 0 = 0; tensor 0 1 = 0; tensor 1 0 = 0; tensor 1 1 = 1 }
warping W = identity S
comonad K on S { 0 |-> 0; 1 |-> 1 }
run check-category C; run slice-skew C
run lift-comonad C xi
)";
  auto doc = parse(text);
  CHECK(doc.declarations.size() == 11);
  CHECK(doc.directives.size() == 3);
  const auto printed = print(doc);
  CHECK(parse(printed) == doc);
  CHECK(print(parse(printed)) == printed);
  CHECK_NOTHROW(resolve(doc));
  for (const auto& name : demo_names()) {
    auto d = demo_document(name);
    CHECK(parse(print(d)) == d);
  }
}

TEST_CASE("category_statement reproduces stock categories") {
  for (const auto& c : {walking_arrow(), parallel_pair(), walking_isomorphism(), codiscrete_category(3),
                        monoid_category({{0, 1}, {1, 0}}, {"e", "s"})}) {
    SpecDocument doc;
    doc.declarations.push_back(category_statement("C", c));
    auto again = parse(print(doc));
    CHECK(again == doc);
    const auto env = resolve(again);
    const auto& built = *env.categories.at("C");
    CHECK(built.object_count() == c.object_count());
    CHECK(built.morphism_count() == c.morphism_count());
    for (auto g : c.morphisms())
      for (auto f : c.morphisms())
        if (c.composable(g, f))
          CHECK(built.name(built.compose(*built.find_morphism(c.name(g)), *built.find_morphism(c.name(f)))) ==
                c.name(c.compose(g, f)));
  }
}

TEST_CASE("quoted names") {
  auto doc = parse(R"(category "two words" { objects "0<=1" "say \"hi\"" unit; mor "a\\b": "0<=1" -> unit })");
  const auto& st = doc.declarations.at(0);
  CHECK(st.args[0] == "two words");
  CHECK(st.body[0].args == std::vector<std::string>{"0<=1", "say \"hi\"", "unit"});
  CHECK(st.body[1].args[0] == "a\\b");
  CHECK(parse(print(doc)) == doc);
  // A quoted keyword is a name.
  auto c = parse(R"(category K { objects a; mor delta: a -> a; comp delta delta = delta }
skew S on K { unit a; tensor a a = a; tensor-map ida delta = delta; tensor-map delta ida = delta; tensor-map delta delta = delta; alpha a a a = ida; lambda a = ida; rho a = ida }
comonad G on S { "delta" |-> ida; a |-> a; delta a = ida; eps a = ida; gamma a a = ida })");
  CHECK(parse(print(c)) == c);
  CHECK_NOTHROW(resolve(c));
  CHECK_THROWS_AS(parse("category \"open { }"), InputError);
  CHECK_THROWS_AS(parse(R"(category "bad\q" { })"), InputError);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("category C {\n  objects 0 1\n  mor f 0 -> 1\n}\n");
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(e.kind() == InputError::Kind::syntax);
    CHECK(e.pos().line == 3);
    CHECK(e.pos().column == 9);
  }
  try {
    parse("category C { objects 0 @ }");
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(e.pos().line == 1);
    CHECK(e.pos().column == 24);
  }
  CHECK_THROWS_AS(parse("category C { objects 0"), InputError);
  CHECK_THROWS_AS(parse("}"), InputError);
  CHECK_THROWS_AS(parse("run check-category C { }"), InputError);
  CHECK_THROWS_AS(parse("category C { tensor 0 0 = 0 }"), InputError);
}

TEST_CASE("resolution and totality errors") {
  using K = InputError::Kind;
  CHECK(error_kind("run check-category C") == K::resolution);
  CHECK(error_kind("category C { objects 0 }\nrun frobnicate C") == K::resolution);
  CHECK(error_kind("category C { objects 0 }\nmap m: U -> C { u |-> 9 }") == K::resolution);
  CHECK(error_kind("category C { objects 0 }\ncategory C { objects 1 }") == K::resolution);
  CHECK(error_kind("category C { objects 0 }\nrun slice-skew C C") == K::resolution);
  CHECK(error_kind("category C { objects 0 }\ncategory D { objects 0 }\nmap m: U -> D { u |-> 0 }\nrun coreflection C m") ==
        K::resolution);
  // g∘f is composable but missing.
  CHECK(error_kind("category C { objects 0 1 2; mor f: 0 -> 1; mor g: 1 -> 2 }") == K::totality);
  CHECK(error_pos("\n\ncategory C { objects 0 1 2; mor f: 0 -> 1; mor g: 1 -> 2 }").line == 3);
  CHECK(error_kind("category C { objects 0 1 }\ncategory D { objects a b }\nmap m: D -> C { a |-> 0 }") == K::totality);
  CHECK(error_kind("category C { objects 0 1 }\nskew S on C { unit 0; tensor 0 0 = 0 }") == K::totality);
  CHECK(error_kind("category C { objects 0; mor e: 0 -> 0; comp e e = e }\nskew S on C { unit 0; tensor 0 0 = 0 }") ==
        K::totality);
  CHECK(error_kind("category C { objects 0 1; mor f: 0 -> 1 }\nfunctor F: C -> C { 0 |-> 0; 1 |-> 1 }") == K::totality);
  CHECK(error_kind("category C { objects 0 1; mor f: 0 -> 1; comp f f = f }") == K::structure);
  CHECK(error_kind("category C { objects 0 0 }") == K::structure);
  CHECK(error_kind("category C { objects 0 1 }\nadjunction R = reflect C onto 0") == K::structure);
  CHECK(error_pos("category C { objects 0\nmor f: 0 -> 7 }").line == 2);
}

TEST_CASE("skew declarations fill unique arrows") {
  auto env = resolve(parse(R"(
category L { objects b t; mor u: b -> t }
skew M on L { unit t; tensor b b = b; tensor b t = b; tensor t b = b; tensor t t = t }
comonad G on M { b |-> b; t |-> b }
warping W = identity M
warping E = evaluation M
)"));
  const auto& s = env.skews.at("M").structure;
  CHECK(check_skew_axioms(s, exhaustive_sample(s.cat())).ok());
  const auto& c = s.cat();
  CHECK(s.map(*c.find_morphism("u"), c.identity(Ob{0})) == c.identity(Ob{0}));
  CHECK(env.warpings.at("E").kind == "evaluation");
}

TEST_CASE("directives produce reports") {
  auto doc = parse(R"(
category L { objects b t; mor u: b -> t }
category C { objects 0 1; mor f: 0 -> 1 }
map xi: U -> C { u |-> 0; v |-> 0 }
map mu: V -> C { w |-> 1 }
fibred X over C { 0: p; 1: q r }
skew M on L { unit t; tensor b b = b; tensor b t = b; tensor t b = b; tensor t t = t }
comonad G on M { b |-> b; t |-> b }
warping W = identity M
warping E = evaluation M
adjunction R = reflect L onto t
run check-category C
run check-skew M
run check-warping W
run check-warping E
run check-comonad G
run lift W G
run idempotent-comparison G
run reflective-lemma R
run reflection-theorem R M
run closed-equivalences R M
run slice-skew C
run tensor X X
run coreflection C mu
run lift-comonad C xi
run idempotent-comparison C mu
run coreflection C xi
)");
  auto env = resolve(doc);
  RunConfig cfg{3, {2, 6}};
  auto res = run(doc, env, cfg);
  const auto& d = res.report["directives"];
  REQUIRE(d.size() == 16);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK_MESSAGE(d[i]["status"] == "pass", d[i].dump());
  // Non-injective map: precondition failure recorded, later directives would still run.
  CHECK(d[15]["status"] == "fail");
  CHECK(d[15].contains("error"));
  CHECK_FALSE(res.passed);
  CHECK(res.report["status"] == "fail");
  CHECK(res.report["summary"]["failed"] == 1);
  CHECK(res.report["version"] == kReportVersion);
  // |(X⊗X)_1| = |X_0|·|C(0,1)|·|X_1| + |X_1|·|C(1,1)|·|X_1| = 2 + 4.
  CHECK(d[11]["witnesses"]["sizes"] == Json::array({1, 6}));
  // Reflective lemma table: one row per object, all entries equal within a row.
  for (const auto& [obj, row] : d[7]["witnesses"]["table"].items()) {
    CHECK(row["i"] == row["ii"]);
    CHECK(row["i"] == row["v"]);
  }
}

TEST_CASE("reports are deterministic and seed dependent") {
  auto doc = demo_document("section8");
  auto env = resolve(doc);
  RunConfig cfg{7, {3, 8}};
  auto a = run(doc, env, cfg).report.dump();
  auto b = run(doc, resolve(doc), cfg).report.dump();
  CHECK(a == b);
  cfg.seed = 8;
  CHECK(run(doc, env, cfg).report.dump() != a);
}

TEST_CASE("reflection theorem directive reports the failing pair") {
  auto doc = parse(R"(
category L {
  objects z a b t
  mor za: z -> a; mor zb: z -> b; mor zt: z -> t; mor at: a -> t; mor bt: b -> t
  comp at za = zt; comp bt zb = zt
}
skew M on L {
  unit t
  tensor z z = z; tensor z a = z; tensor z b = z; tensor z t = z
  tensor a z = z; tensor a a = a; tensor a b = z; tensor a t = a
  tensor b z = z; tensor b a = z; tensor b b = b; tensor b t = b
  tensor t z = z; tensor t a = a; tensor t b = b; tensor t t = t
}
adjunction R = reflect L onto z a t
run reflection-theorem R M
)");
  auto res = run(doc, resolve(doc), {});
  const auto& e = res.report["directives"][0];
  // Reflecting onto {z, a, t} sends b to t; L(b∧a) = z but L(t∧a) = a.
  INFO(e.dump());
  CHECK(e["status"] == "fail");
  bool found = false;
  for (const auto& w : e["witnesses"]["condition_failures"]) found |= w["X"] == "b" && w["B"] == "a";
  CHECK(found);
}

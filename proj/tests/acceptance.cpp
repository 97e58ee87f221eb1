// Acceptance run: one PASS/FAIL line per criterion. The optional argument is
// the path of the skewcat executable, used for the byte-level determinism
// check; without it that criterion compares library reports instead.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "skewcat/corpus.hpp"
#include "skewcat/driver.hpp"
#include "skewcat/reflection.hpp"
#include "skewcat/slice.hpp"
#include "skewcat/warping.hpp"

using namespace skewcat;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

FinCatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::pair<Ob, Ob>> all_pairs(const FinCategory& x, const FinCategory& a) {
  std::vector<std::pair<Ob, Ob>> v;
  for (auto p : x.objects())
    for (auto q : a.objects()) v.push_back({p, q});
  return v;
}

// Random finite categories with their sampled slice quadruples, shared by
// the first two criteria.
struct SliceRun {
  std::size_t categories = 0;
  std::size_t quads = 0;
  std::size_t axiom_violations = 0;
  std::size_t pairs = 0;
  std::size_t cardinality_mismatches = 0;
  bool bounds_ok = true;
  double seconds = 0;
};

SliceRun slice_run() {
  SliceRun out;
  Rng rng(2024);
  const auto start = std::chrono::steady_clock::now();
  for (int n = 0; n < 20; ++n) {
    auto c = share(random_category(rng, 4, 12));
    out.bounds_ok = out.bounds_ok && c->object_count() <= 4 && c->morphism_count() <= 12;
    auto s = build_slice_skew(c);
    auto sample = slice_object_sample(s.cat(), rng, {3, 50});
    ++out.categories;
    out.quads += sample.quads.size();
    out.axiom_violations += check_skew_axioms(s, sample).violation_count();
    for (const auto& [x, y] : sample.pairs) {
      ++out.pairs;
      auto t = s(x, y);
      for (auto j : c->objects()) {
        std::size_t expected = 0;
        for (auto i : c->objects()) expected += x.size(i.index) * c->hom(i, j).size() * y.size(j.index);
        if (t.size(j.index) != expected) ++out.cardinality_mismatches;
      }
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Verdict criterion1(const SliceRun& r) {
  return {r.bounds_ok && r.categories >= 20 && r.quads >= 20 * 50 && r.axiom_violations == 0 && r.seconds < 30,
          fmt("slice coherence: %zu categories, %zu quadruples, %zu violations, %.1f s", r.categories, r.quads,
              r.axiom_violations, r.seconds)};
}

Verdict criterion2(const SliceRun& r) {
  return {r.pairs > 0 && r.cardinality_mismatches == 0,
          fmt("cardinality oracle: %zu pairs, %zu mismatching fibres", r.pairs, r.cardinality_mismatches)};
}

Verdict criterion3() {
  auto corpus = plain_reflection_corpus(31, 24);
  std::size_t objects = 0, disagreements = 0;
  for (const auto& r : corpus) {
    auto adj = r.adjunction();
    for (auto z : r.ambient->objects()) {
      ++objects;
      if (!reflective_lemma(adj, z).all_equal()) ++disagreements;
    }
  }
  return {corpus.size() >= 20 && disagreements == 0,
          fmt("reflective lemma: %zu reflections, %zu objects, %zu disagreements", corpus.size(), objects, disagreements)};
}

// ({0,1,2}, ⊆) reflected onto ∅, {0,1}, {1}, {1,2} and the top: the
// closure does not commute with meets against {1,2}.
bool failing_reflection_reports_pair() {
  auto l = moore_lattice({0b000, 0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111}, 0b111);
  std::vector<Ob> closed;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.sets[i] == 0b000 || l.sets[i] == 0b011 || l.sets[i] == 0b010 || l.sets[i] == 0b110 || l.sets[i] == 0b111)
      closed.push_back(l.ob(i));
  auto r = find_reflection(l.cat, closed);
  if (!r) return false;
  auto cond = check_reflection_condition(r->adjunction(), meet_structure(l), all_pairs(*r->ambient, *r->sub));
  for (const auto& w : cond.failures)
    if (w["X"] == "{0}" && w["B"] == "{1,2}") return true;
  return false;
}

Verdict criterion4() {
  auto corpus = reflection_corpus(11, 24);
  std::size_t applicable = 0, good = 0;
  for (const auto& inst : corpus) {
    auto adj = inst.reflection.adjunction();
    if (!check_reflection_condition(adj, inst.structure, all_pairs(*inst.reflection.ambient, *inst.reflection.sub)).ok())
      continue;
    ++applicable;
    auto [bar, op] = build_reflected_structure(adj, inst.structure);
    bool ok = check_skew_axioms(bar, exhaustive_sample(bar.cat())).ok();
    ok = ok && check_opmonoidal(op, exhaustive_sample(inst.structure.cat())).ok();
    for (auto x : inst.reflection.ambient->objects())
      for (auto b : inst.reflection.sub->objects())
        ok = ok && bar.cat().inverse(op.psi(x, adj.right(b))).has_value();
    good += ok;
  }
  const bool witness = failing_reflection_reports_pair();
  return {applicable > 0 && good == applicable && witness,
          fmt("reflection theorem: %zu of %zu corpus reflections satisfy the condition, %zu pass; failing witness %s",
              applicable, corpus.size(), good, witness ? "reported" : "missing")};
}

Verdict criterion5() {
  auto corpus = reflection_corpus(11, 24);
  std::size_t agreeing = 0, closed_applies = 0, closed_ok = 0, homs = 0;
  for (const auto& inst : corpus) {
    auto rep = check_closed_equivalences(inst.reflection.adjunction(), inst.structure);
    agreeing += rep.agreement.ok();
    if (rep.nb_homs_exist && rep.moninv_on_nb) {
      ++closed_applies;
      closed_ok += rep.closed_reflection.ok() && !rep.hom_witnesses.empty();
      homs += rep.hom_witnesses.size();
    }
  }
  return {agreeing == corpus.size() && closed_applies > 0 && closed_ok == closed_applies,
          fmt("closed equivalences: families agree on %zu of %zu; closed reflection on %zu of %zu applicable (%zu hom "
              "witnesses)",
              agreeing, corpus.size(), closed_ok, closed_applies, homs)};
}

struct InjectiveCase {
  FinCatPtr c;
  IndexMap mu;
};

std::vector<InjectiveCase> injective_cases() {
  std::vector<InjectiveCase> out;
  Rng rng(77);
  out.push_back({share(walking_arrow()), IndexMap(2, {1})});
  while (out.size() < 12) {
    auto c = share(random_category(rng, 4, 12));
    const std::size_t dom = 1 + rng.below(c->object_count());
    out.push_back({c, random_index_map(rng, dom, c->object_count(), true)});
  }
  return out;
}

Verdict criterion6(const std::vector<InjectiveCase>& cases) {
  std::size_t ok = 0, witnesses = 0;
  Rng rng(6);
  for (const auto& k : cases) {
    auto rep = injective_coreflection_demo(k.c, k.mu, rng, {3, 20});
    ok += rep.ok();
    witnesses += !rep.witnesses["phi_non_invertible"].is_null();
  }
  return {ok == cases.size() && cases.size() >= 10 && witnesses >= 1,
          fmt("injective coreflection: %zu of %zu pairs pass with explicit bijections; %zu non-invertible phi witnesses",
              ok, cases.size(), witnesses)};
}

Verdict criterion7() {
  std::size_t exact = 0, structures = 0;
  Rng rng(17);
  for (const auto& inst : reflection_corpus(3, 12)) {
    const auto& s = inst.structure;
    auto out = warping_to_skew(identity_warping(s)).structure;
    bool same = out.unit == s.unit;
    for (auto a : s.cat().objects()) {
      same = same && out.lambda(a) == s.lambda(a) && out.rho(a) == s.rho(a);
      for (auto b : s.cat().objects()) {
        same = same && out(a, b) == s(a, b);
        for (auto c : s.cat().objects()) same = same && out.alpha(a, b, c) == s.alpha(a, b, c);
      }
    }
    for (auto f : s.cat().morphisms())
      for (auto g : s.cat().morphisms()) same = same && out.map(f, g) == s.map(f, g);
    ++structures;
    exact += same;
  }
  auto corpus = warping_corpus(99, 12);
  std::size_t passing = 0;
  for (const auto& inst : corpus) {
    auto sample = exhaustive_sample(inst.warping.action.cat());
    if (!check_warping(inst.warping, sample).ok()) continue;
    auto out = warping_to_skew(inst.warping, sample);
    passing += check_skew_axioms(out.structure, sample).ok() && check_opmonoidal(out.opmonoidal, sample).ok();
  }
  return {exact == structures && passing == corpus.size(),
          fmt("warping: identity round trip exact on %zu of %zu; %zu of %zu corpus warpings give skew structures with T "
              "opmonoidal",
              exact, structures, passing, corpus.size())};
}

Verdict criterion8() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(88);
  std::size_t ok = 0, total = 0, noninjective = 0;
  auto one = [&](FinCatPtr c, const IndexMap& xi) {
    ++total;
    noninjective += !xi.injective();
    ok += noninjective_comonad_demo(c, xi, rng, {3, 20}).ok();
  };
  one(share(walking_arrow()), IndexMap(2, {0, 0}, {"u", "v"}));
  one(share(terminal_category()), IndexMap(1, {0, 0, 0}));
  while (total < 12) {
    auto c = share(random_category(rng, 4, 12));
    const bool inj = total % 3 == 0 && c->object_count() >= 2;
    const std::size_t dom = inj ? 1 + rng.below(c->object_count()) : 2 + rng.below(3);
    one(c, random_index_map(rng, dom, c->object_count(), inj));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {ok == total && total >= 10 && noninjective >= 1 && secs < 60,
          fmt("comonad lift: %zu of %zu pairs pass (%zu non-injective), %.1f s", ok, total, noninjective, secs)};
}

Verdict criterion9(const std::vector<InjectiveCase>& cases) {
  std::size_t ok = 0;
  Rng rng(9);
  for (const auto& k : cases) ok += idempotent_slice_demo(k.c, k.mu, rng, {3, 12}).ok();
  return {ok == cases.size(), fmt("idempotent comparison: %zu of %zu injective instances agree up to computed isomorphism",
                                  ok, cases.size())};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict criterion10(const char* exe) {
  if (exe == nullptr) {
    auto doc = demo_document("section8");
    RunConfig cfg{7, {}};
    auto a = run(doc, resolve(doc), cfg).report.dump(2);
    auto b = run(doc, resolve(doc), cfg).report.dump(2);
    return {a == b, "determinism: library reports for section8, seed 7, identical"};
  }
  const std::string base = "acceptance_section8_";
  int codes = 0;
  for (const char* run_id : {"a", "b"}) {
    const std::string cmd = std::string("\"") + exe + "\" demo section8 --seed 7 --json " + base + run_id + ".json 2>/dev/null";
    codes |= std::system(cmd.c_str());
  }
  const auto a = slurp(base + "a.json");
  const auto b = slurp(base + "b.json");
  const bool same = codes == 0 && !a.empty() && a == b;
  return {same, fmt("determinism: skewcat demo section8 --seed 7 twice, %zu bytes, %s", a.size(),
                    same ? "byte-identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  const char* exe = argc > 1 ? argv[1] : nullptr;
  const auto slices = slice_run();
  const auto injective = injective_cases();
  const std::vector<std::function<Verdict()>> criteria{
      [&] { return criterion1(slices); },   [&] { return criterion2(slices); },    criterion3,
      criterion4,                           criterion5,                            [&] { return criterion6(injective); },
      criterion7,                           criterion8,                            [&] { return criterion9(injective); },
      [&] { return criterion10(exe); }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failed += !v.ok;
    std::cout << "criterion " << (i + 1) << " " << (v.ok ? "PASS" : "FAIL") << ": " << v.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}

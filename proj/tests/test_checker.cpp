#include "doctest.h"
#include "oracles.hpp"
#include "symdyn/checker.hpp"
#include "symdyn/errors.hpp"

using namespace symdyn;

namespace {

Alphabet bin() { return Alphabet({"0", "1"}); }

ClopenSet cyl(const SystemPtr& f, Word w) { return ClopenSet::cylinder(f->space(), w); }

Partition uvw(const SystemPtr& f, Word u, Word v, Word w) {
  return Partition(f->space(), {{"U", cyl(f, u)}, {"V", cyl(f, v)}, {"W", cyl(f, w)}});
}

SoficPresentation pres(const oracle::Graph& g) {
  SoficPresentation s{g.states, {}};
  for (auto [a, l, b] : g.edges) s.edges.push_back({a, l, b});
  return s;
}

}  // namespace

TEST_CASE("halting query on the full shift holds with a witness") {
  auto f = full_shift(bin());
  auto p = uvw(f, {1}, {0, 1}, {0, 0});
  auto v = check_regular(*f, p, halting_automaton(), Budget{});
  CHECK(v.outcome == Outcome::Holds);
  REQUIRE(v.witness);
  CHECK(halting_automaton().accepts(*v.witness));
  REQUIRE(v.points);
  CHECK(f->meets(*v.points));
}

TEST_CASE("halting query under prepend zero fails") {
  // 10.. -> 010.. -> 0010..: U then W forever
  auto f = prepend_zero();
  auto p = uvw(f, {1, 0}, {1, 1}, {0});
  auto v = check_regular(*f, p, halting_automaton(), Budget{});
  CHECK(v.outcome == Outcome::Fails);
}

TEST_CASE("semi-decision agrees with the exact procedure on sofic shifts") {
  int decided = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto f = sofic(bin(), pres(oracle::random_sofic(3, 2)));
    if (!f->meets(ClopenSet::whole(f->space()))) continue;
    auto p = Partition::with_rest(f->space(), {{"U", cyl(f, {1, 1})}, {"V", cyl(f, {0, 1})}}, "W");
    auto exact = exact_check_regular(*f, p, halting_automaton());
    REQUIRE(exact.outcome != Outcome::Unknown);
    auto semi = semi_check_regular(*f, p, halting_automaton(), Budget{8, 32, 4});
    if (semi.outcome == Outcome::Unknown) continue;
    ++decided;
    REQUIRE(semi.outcome == exact.outcome);
  }
  CHECK(decided > 0);
}

TEST_CASE("invariance on the full shift and on a shift without 00") {
  auto f = full_shift(bin());
  Partition p(f->space(), {{"U", cyl(f, {0})}, {"V", cyl(f, {1})}});
  auto m = invariance_automaton();
  auto v = check_omega(f, p, m, Budget{});
  CHECK(v.outcome == Outcome::Holds);
  REQUIRE(v.lasso);
  CHECK(m.accepts(v.lasso->stem, v.lasso->cycle));

  auto g = sft(bin(), {Word{0, 0}});
  Partition q(g->space(), {{"U", cyl(g, {0})}, {"V", cyl(g, {1})}});
  CHECK(check_omega(g, q, m, Budget{}).outcome == Outcome::Fails);
}

TEST_CASE("basins") {
  // under prepend zero everything lands in [0] after one step
  auto f = prepend_zero();
  auto b = basin(*f, cyl(f, {0}), Budget{});
  REQUIRE(b.set);
  CHECK(b.set->is_whole());
  // under the shift 0^omega never meets [1]
  auto s = full_shift(bin());
  CHECK_FALSE(basin(*s, cyl(s, {1}), Budget{10, 12, 4}).set);
  auto io = infinitely_often(*f, cyl(f, {0}), Budget{});
  REQUIRE(io);
  CHECK(io->is_whole());
}

TEST_CASE("dilation and pseudo-orbits") {
  auto s = full_shift(bin());
  CHECK(dilate(*s, cyl(s, {0, 1}), {{0, 0}}) == cyl(s, {0}));
  auto g = sft(bin(), {Word{1, 1}});
  // [1] has one extension at resolution 2: [10]
  CHECK(dilate(*g, cyl(g, {1}), {{0, 1}}) == cyl(g, {1, 0}));
  CHECK(pseudo_reach(*s, cyl(s, {0}), cyl(s, {1}), 1));
  auto f = prepend_zero();
  for (int n = 1; n <= 3; ++n) CHECK_FALSE(pseudo_reach(*f, cyl(f, {0}), cyl(f, {1}), n));
}

TEST_CASE("reachability under shadowing") {
  auto g = sft(bin(), {Word{1, 1}});
  auto r = decide_reach_shadowing(*g, cyl(g, {1}), cyl(g, {1, 0, 1}));
  CHECK(r.reachable);
  CHECK(r.steps >= 0);
  auto z = decide_reach_shadowing(*g, cyl(g, {1}), cyl(g, {1, 1}));
  CHECK_FALSE(z.reachable);
  auto t = tag_system(bin(), {Word{1}, Word{0}}, 1);
  auto all = ClopenSet::whole(t->space());
  CHECK_THROWS_AS(decide_reach_shadowing(*t, all, all), CapabilityError);
}

TEST_CASE("equicontinuity moduli") {
  auto f = prepend_zero();
  auto e = equicontinuity_modulus(*f, 2, Budget{});
  REQUIRE(e.delta);
  CHECK(*e.delta == 2);
  auto id = identity(Space::one_sided(bin()));
  auto i = equicontinuity_modulus(*id, 3, Budget{});
  REQUIRE(i.delta);
  CHECK(*i.delta == 3);
  auto s = full_shift(bin());
  auto u = equicontinuity_modulus(*s, 1, Budget{10, 6, 4});
  CHECK_FALSE(u.delta);
  CHECK(u.rounds == 6);
}

TEST_CASE("observation system") {
  auto f = full_shift(bin());
  auto p = Partition::cylinders(f->space(), 1);
  Dfa d = universal_dfa(p.names());
  auto o = observe(f, p, d);
  auto c = o->lift(cyl(f, {1}), 0);
  CHECK(o->meets(c));
  CHECK(o->project_base(o->preimage(o->lift(cyl(f, {1})))) == ClopenSet::cylinder(f->space(), Word{1}, 1));
  CHECK_THROWS_AS(ObservationSystem(f, p, {"a"}, {0}), SpecError);
  Dfa wrong = universal_dfa({"x", "y"});
  CHECK_THROWS(observe(f, p, wrong));
}

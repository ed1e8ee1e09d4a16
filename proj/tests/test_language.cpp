#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/language.hpp"

using namespace symdyn;

namespace {

Alphabet bin() { return Alphabet({"0", "1"}); }

Letters L(const Word& w) { return Letters(w.begin(), w.end()); }

SoficPresentation pres(const oracle::Graph& g) {
  SoficPresentation s{g.states, {}};
  for (auto [a, l, b] : g.edges) s.edges.push_back({a, l, b});
  return s;
}

bool same_graph(const LabeledGraph& a, const LabeledGraph& b) {
  return a.label == b.label && a.succ == b.succ && a.initial == b.initial && a.names == b.names;
}

}  // namespace

TEST_CASE("golden mean induced language by depth-1 cells") {
  auto f = sft(bin(), {Word{1, 1}});
  auto p = Partition::cylinders(f->space(), 1);
  CHECK(p.names() == std::vector<std::string>{"0", "1"});
  auto ws = enumerate_language(*f, p, 6);
  oracle::Sft o{2, {Word{1, 1}}};
  std::vector<Letters> expect;
  for (const auto& w : oracle::words_upto(2, 6))
    if (o.extendable(w)) expect.push_back(L(w));
  // shortlex already: words_upto is by length then lexicographic
  CHECK(ws == expect);
  CHECK(ws.size() == 1 + 2 + 3 + 5 + 8 + 13 + 21);
}

TEST_CASE("enumeration is the same serially and in parallel") {
  auto f = sft(bin(), {Word{0, 0, 0}, Word{1, 1}});
  auto p = Partition::cylinders(f->space(), 2);
  CHECK(enumerate_language(*f, p, 5, Exec::Serial) == enumerate_language(*f, p, 5, Exec::Parallel));
}

TEST_CASE("membership on random sofic shifts") {
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_sofic(3, 2);
    auto f = sofic(bin(), pres(g));
    auto p = Partition::cylinders(f->space(), 1);
    for (const auto& w : oracle::words_upto(2, 5)) {
      auto m = word_in_language(*f, p, L(w));
      REQUIRE(m.member == g.in_language(w));
      if (m.member) CHECK(f->meets(m.witness));
    }
  }
}

TEST_CASE("word sets read their word") {
  auto f = full_shift(bin());
  auto p = Partition::cylinders(f->space(), 1);
  auto s = word_set(*f, p, {1, 0, 1});
  CHECK(s == ClopenSet::cylinder(f->space(), Word{1, 0, 1}));
}

TEST_CASE("full shift depth-1 ball graph is complete") {
  auto f = full_shift(bin());
  auto p = Partition::cylinders(f->space(), 1);
  auto a = induced_automaton(*f, p, 1);
  REQUIRE(a.graph.size() == 2);
  for (int i = 0; i < 2; ++i) CHECK(a.graph.succ[static_cast<std::size_t>(i)] == std::vector<int>{0, 1});
  CHECK(a.exact);
}

TEST_CASE("ball graph kernel matches the reference") {
  for (int trial = 0; trial < 10; ++trial) {
    auto f = sofic(bin(), pres(oracle::random_sofic(3, 2)));
    auto p = Partition::cylinders(f->space(), 1);
    for (int n = 1; n <= 4; ++n) {
      auto ref = induced_automaton_reference(*f, p, n);
      REQUIRE(same_graph(induced_automaton(*f, p, n, Exec::Serial).graph, ref.graph));
      REQUIRE(same_graph(induced_automaton(*f, p, n, Exec::Parallel).graph, ref.graph));
    }
  }
}

TEST_CASE("ball graph over-approximates and window graph is exact") {
  for (int trial = 0; trial < 15; ++trial) {
    auto g = oracle::random_sofic(3, 2);
    auto f = sofic(bin(), pres(g));
    auto p = Partition::cylinders(f->space(), 1);
    auto wg = to_nfa(window_graph(*f, p));
    auto bg = induced_automaton(*f, p, 2).nfa();
    for (const auto& w : oracle::words_upto(2, 6)) {
      bool in = g.in_language(w);
      REQUIRE(wg.accepts(L(w)) == in);
      if (in) REQUIRE(bg.accepts(L(w)));
    }
  }
}

TEST_CASE("window graph needs a regular presentation") {
  auto f = prepend_zero();
  auto p = Partition::cylinders(f->space(), 1);
  CHECK_THROWS_AS(window_graph(*f, p), CapabilityError);
}

TEST_CASE("partition validation") {
  auto sp = Space::one_sided(bin());
  auto a = ClopenSet::cylinder(sp, Word{0});
  CHECK_THROWS_AS(Partition(sp, {{"a", a}, {"b", a}}), QueryError);
  auto p = Partition::with_rest(sp, {{"a", ClopenSet::cylinder(sp, Word{0, 0})}}, "rest");
  CHECK(p.names() == std::vector<std::string>{"a", "rest"});
  CHECK(p.resolution() == 2);
  CHECK_THROWS_AS(p.index("zz"), QueryError);
  Partition gap(sp, {{"a", a}});
  CHECK_THROWS_AS(gap.check_covers(*full_shift(bin())), QueryError);
  // the golden mean never sees 11, so two cells suffice
  Partition two(sp, {{"0", a}, {"10", ClopenSet::cylinder(sp, Word{1, 0})}});
  two.check_covers(*sft(bin(), {Word{1, 1}}));
}

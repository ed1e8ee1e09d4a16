#include "doctest.h"
#include "oracles.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/gallery.hpp"

using namespace symdyn;

namespace {

Letters L(const Word& w) { return Letters(w.begin(), w.end()); }

/// Direct scan for 0 1^n 0^(t+1) 1 with n constrained by the table.
bool universal_ok(const HaltTimeTable& t, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) continue;
    std::size_t j = i + 1, n = 0, m = 0;
    while (j < w.size() && w[j] == 1) ++j, ++n;
    while (j < w.size() && w[j] == 0) ++j, ++m;
    if (n == 0 || m == 0 || j >= w.size() || w[j] != 1) continue;
    if (n >= static_cast<std::size_t>(t.inputs())) continue;
    const auto& h = t.entries[n];
    if (!h || static_cast<int>(m) - 1 < *h) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default machine halts on even inputs after n+1 steps") {
  auto m = default_machine();
  for (int n = 0; n <= 12; ++n) {
    auto h = halting_time(m, input_config(m, n), 100);
    if (n % 2 == 0) {
      REQUIRE(h);
      CHECK(*h == n + 1);
    } else {
      CHECK_FALSE(h);
    }
  }
}

TEST_CASE("busy beaver leaves six ones") {
  auto m = bb3_machine();
  auto c = input_config(m, 0);
  auto h = halting_time(m, c, 100);
  REQUIRE(h);
  for (int i = 0; i < *h; ++i) c = tm_step(m, c);
  CHECK(m.halting[static_cast<std::size_t>(c.state)]);
  int ones = 0;
  for (auto s : c.tape) ones += s == m.tape.index("1");
  CHECK(ones == 6);
}

TEST_CASE("tables are the same serially and in parallel") {
  auto m = default_machine();
  auto a = build_table(m, 20, 60, Exec::Serial);
  auto b = build_table(m, 20, 60, Exec::Parallel);
  CHECK(a.entries == b.entries);
  a.entries[1] = 500;
  CHECK_THROWS_AS(a.validate(), SpecError);
}

TEST_CASE("universal subshift language against the direct scan") {
  auto t = build_table(default_machine(), 6, 50);
  auto f = universal_subshift(t);
  auto p = Partition::cylinders(f->space(), 1);
  auto ws = enumerate_language(*f, p, 10);
  std::vector<Letters> expect;
  for (const auto& w : oracle::words_upto(2, 10))
    if (universal_ok(t, w)) expect.push_back(L(w));
  CHECK(ws == expect);
}

TEST_CASE("chaotic universal: periodic points and connectors") {
  auto t = build_table(default_machine(), 5, 40);
  auto f = chaotic_universal(t);
  auto g = universal_presentation(t, true);
  auto p = Partition::cylinders(f->space(), 1);
  auto ws = enumerate_language(*f, p, 5);
  for (const auto& l : ws) {
    if (l.empty()) continue;
    Word w(l.begin(), l.end());
    auto c = periodic_point(*f, w);
    CHECK(has_periodic(g, c));
    Word rep;
    while (rep.size() < w.size()) rep += c;
    CHECK(rep.compare(0, w.size(), w) == 0);
  }
  Word v{0, 1, 1}, w{0, 0, 1};
  auto x = transitivity_witness(*f, v, w);
  CHECK(x.size() == v.size() + 1 + w.size());
  CHECK(f->meets(ClopenSet::cylinder(f->space(), x)));
  CHECK_THROWS_AS(periodic_point(*f, Word{0, 1, 0, 0, 0, 1}), QueryError);
}

TEST_CASE("guarded query follows the table") {
  auto t = build_table(default_machine(), 6, 50);
  auto f = chaotic_universal(t);
  for (int n = 1; n < 6; ++n) {
    auto v = guarded_halting_query(*f, n, Budget{});
    CHECK(v.outcome == (t.entries[static_cast<std::size_t>(n)] ? Outcome::Holds : Outcome::Fails));
  }
}

TEST_CASE("product halting queries") {
  auto t = build_table(default_machine(), 6, 50);
  auto sp = sofic_product(t);
  CHECK(product_halting_query(*sp, 2, Budget{}).outcome == Outcome::Holds);
  CHECK(product_halting_query(*sp, 3, Budget{}).outcome != Outcome::Holds);
  CHECK_THROWS_AS(product_halting_query(*sp, 6, Budget{}), HorizonError);
}

TEST_CASE("Turing machine inside a cellular automaton") {
  auto m = default_machine();
  auto ca = tm_in_ca(m);
  for (int n = 0; n <= 6; ++n) {
    auto c = input_config(m, n);
    auto [w, first] = ca.encode(c);
    auto back = ca.decode(w, first);
    REQUIRE(back);
    CHECK(back->same_as(c, m));
    for (int s = 0; s < 10; ++s) {
      std::tie(w, first) = ca.step(w, first);
      c = tm_step(m, c);
      auto d = ca.decode(w, first);
      REQUIRE(d);
      REQUIRE(d->same_as(c, m));
    }
    auto h = ca.halts(input_config(m, n), 40);
    CHECK(h.has_value() == (n % 2 == 0));
  }
}

TEST_CASE("gallery by name") {
  auto t = build_table(default_machine(), 4, 20);
  for (const auto& n : gallery_names()) CHECK(gallery_system(n, t));
  CHECK_THROWS_AS(gallery_system("nope", t), QueryError);
}

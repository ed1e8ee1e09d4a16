#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/gallery.hpp"
#include "symdyn/system.hpp"

using namespace symdyn;

namespace {

Word W(std::initializer_list<int> xs) {
  Word w;
  for (int x : xs) w.push_back(static_cast<char>(x));
  return w;
}

Alphabet bin() { return Alphabet({"0", "1"}); }

std::vector<Word> mixed_words(const std::vector<int>& radix) {
  std::vector<Word> out;
  Word w(radix.size(), '\0');
  while (true) {
    out.push_back(w);
    int i = static_cast<int>(w.size()) - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == radix[static_cast<std::size_t>(i)] - 1) w[static_cast<std::size_t>(i--)] = '\0';
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<int> radix_of(const Space& sp, const Intervals& iv) {
  std::vector<int> r;
  for (std::size_t t = 0; t < iv.size(); ++t)
    for (int p = 0; p < iv[t].length(); ++p) r.push_back(static_cast<int>(sp.track(t).alphabet.size()));
  return r;
}

/// Random union of cylinders all inside the window `small`.
ClopenSet random_inside(const SpacePtr& sp, const Intervals& small) {
  auto acc = ClopenSet::empty(sp);
  auto words = mixed_words(radix_of(*sp, small));
  for (const auto& w : words)
    if (oracle::uniform(0, 99) < 30) acc = unite(acc, ClopenSet::from_words(sp, small, {w}));
  return acc;
}

/// x in f^-1(C) iff F(x) in C, for every window word x over `big` accepted
/// by `keep`; F is written independently of the library.
void check_forward(const EffectiveSystem& f, const Intervals& big, const Intervals& small,
                   const std::function<Word(const Word&)>& F, const std::function<bool(const Word&)>& keep, int trials = 20) {
  auto xs = mixed_words(radix_of(*f.space(), big));
  for (int t = 0; t < trials; ++t) {
    auto c = random_inside(f.space(), small);
    auto pre = f.preimage(c);
    for (const auto& x : xs) {
      if (!keep(x)) continue;
      bool lhs = pre.contains(Window{big, x});
      bool rhs = c.contains(Window{small, F(x)});
      REQUIRE(lhs == rhs);
    }
  }
}

auto always = [](const Word&) { return true; };

}  // namespace

TEST_CASE("full shift preimage is the left shift") {
  auto f = full_shift(bin());
  check_forward(*f, {{0, 4}}, {{0, 3}}, [](const Word& x) { return x.substr(1); }, always);
  auto g = full_shift(bin(), true);
  check_forward(*g, {{-3, 3}}, {{-2, 2}}, [](const Word& x) { return x.substr(2); }, always);
}

TEST_CASE("prepend zero") {
  auto f = prepend_zero();
  check_forward(*f, {{0, 3}}, {{0, 4}}, [](const Word& x) { return Word(1, '\0') + x; }, always);
}

TEST_CASE("cellular automaton rule 110") {
  std::vector<Symbol> t(8);
  for (int i = 0; i < 8; ++i) t[static_cast<std::size_t>(i)] = static_cast<Symbol>((110 >> i) & 1);
  auto f = cellular_automaton(bin(), LocalRule{1, t});
  check_forward(*f, {{-3, 3}}, {{-2, 2}}, [&](const Word& x) {
    Word y;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) y.push_back(static_cast<char>(t[static_cast<std::size_t>(x[i - 1] * 4 + x[i] * 2 + x[i + 1])]));
    return y;
  }, always);
}

TEST_CASE("moving-tape Turing machine") {
  auto m = default_machine();
  auto f = turing_moving_tape(m);
  // window: state cell, tape [-2, 2]; image tape [-1, 1]
  check_forward(*f, {{0, 0}, {-2, 2}}, {{0, 0}, {-1, 1}}, [&](const Word& x) {
    int q = x[0];
    Word tape = x.substr(1);  // positions -2..2
    if (m.halting[static_cast<std::size_t>(q)]) return Word(1, static_cast<char>(q)) + tape.substr(1, 3);
    const auto& tr = *m.rule(q, static_cast<Symbol>(tape[2]));
    tape[2] = static_cast<char>(tr.write);
    int d = tr.move == Move::R ? 1 : tr.move == Move::L ? -1 : 0;
    Word y(1, static_cast<char>(tr.next));
    for (int i = -1; i <= 1; ++i) y.push_back(tape[static_cast<std::size_t>(i + d + 2)]);
    return y;
  }, always, 10);
}

TEST_CASE("counter machine steps") {
  CounterProgram p{2, {{CounterInstr::Jz, 0, 3}, {CounterInstr::Dec, 0, 0}, {CounterInstr::Inc, 1, 0}, {CounterInstr::Halt, 0, 0}}};
  auto f = counter_machine(p);
  // direct interpretation on (pc, c0, c1) values
  auto step = [&](int pc, int a, int b) {
    if (pc >= 3) return std::array<int, 3>{pc, a, b};
    const auto& in = p.code[static_cast<std::size_t>(pc)];
    int* r = in.reg == 0 ? &a : &b;
    switch (in.op) {
      case CounterInstr::Inc: ++*r; return std::array<int, 3>{pc + 1, a, b};
      case CounterInstr::Dec: if (*r > 0) --*r; return std::array<int, 3>{pc + 1, a, b};
      case CounterInstr::Jz: return std::array<int, 3>{*r == 0 ? in.target : pc + 1, a, b};
      default: return std::array<int, 3>{pc, a, b};
    }
  };
  const auto& sp = f->space();
  auto unary = [](int n, int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(i < n ? '\1' : '\0');
    return w;
  };
  for (int pc = 0; pc <= 4; ++pc)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        if (pc == 4) continue;
        auto [pc2, a2, b2] = step(pc, a, b);
        // the image cylinder of length 6 on both counters
        auto img = intersect(ClopenSet::cell(sp, 0, static_cast<Symbol>(pc2)),
                             intersect(ClopenSet::cylinder(sp, unary(a2, 6), 0, 1), ClopenSet::cylinder(sp, unary(b2, 6), 0, 2)));
        auto src = intersect(ClopenSet::cell(sp, 0, static_cast<Symbol>(pc)),
                             intersect(ClopenSet::cylinder(sp, unary(a, 8), 0, 1), ClopenSet::cylinder(sp, unary(b, 8), 0, 2)));
        CHECK(f->meets(intersect(src, f->preimage(img))));
        CHECK(subset_of(src, f->preimage(img)));
      }
}

TEST_CASE("Collatz map on unary points") {
  CollatzSpec s{2, {{1, 0, 2}, {3, 1, 1}}};
  auto f = collatz_map(s);
  const auto& sp = f->space();
  auto point = [&](long n) {
    Word w(static_cast<std::size_t>(n), '\1');
    w.push_back('\0');
    return ClopenSet::cylinder(sp, w);
  };
  // word sets over a common hull: keep image values small
  for (long n = 0; n <= 3; ++n) CHECK(subset_of(point(n), f->preimage(point(s.apply(n)))));
  for (long k = 0; k <= 4; ++k)
    for (long n = 0; n < 10; ++n)
      if (s.apply(n) != k) CHECK_FALSE(f->meets(intersect(point(n), f->preimage(point(k)))));
  // rounding-up halving: every value has exactly two preimages (one for 0)
  CollatzSpec h{2, {{1, 0, 2}, {1, 1, 2}}};
  auto g = collatz_map(h);
  for (long k = 1; k <= 6; ++k) {
    auto pre = g->preimage(point(k));
    int hits = 0;
    for (long n = 0; n <= 2 * k + 2; ++n) hits += g->meets(intersect(point(n), pre));
    CHECK(hits == 2);
  }
  CHECK_THROWS_AS(collatz_map(CollatzSpec{2, {{1, 1, 2}, {3, 1, 1}}}), SpecError);
}

TEST_CASE("tag system") {
  // a -> bb, b -> a, deletion 2, alphabet {a, b} plus the end marker
  auto f = tag_system(Alphabet({"a", "b"}), {W({1, 1}), W({0})}, 2);
  const auto& sp = f->space();
  const char E = 2;
  auto fwd = [&](Word x) {
    auto l = x.find(E);
    Word out;
    if (l != Word::npos && l >= 2) out = x.substr(2, l - 2) + (x[0] == 0 ? W({1, 1}) : W({0}));
    out.resize(8, E);
    return out;
  };
  for (const auto& body : oracle::words_upto(2, 5)) {
    Word x = body + Word(1, E);
    auto img = fwd(x + Word(8, E));
    auto pre = f->preimage(ClopenSet::cylinder(sp, img.substr(0, 6)));
    CHECK(pre.contains(Window{{{0, static_cast<int>(x.size()) + 7}}, x + Word(8, E)}));
  }
}

TEST_CASE("blank-tape machine keeps the end marker discipline") {
  auto f = turing_blank(default_machine());
  const auto& sp = f->space();
  // a marker followed by a symbol is not a configuration
  auto bad = ClopenSet::cylinder(sp, W({2, 1}), 0, 2);
  CHECK_FALSE(f->meets(bad));
  CHECK(f->meets(ClopenSet::cylinder(sp, W({1, 2}), 0, 2)));
}

TEST_CASE("products are lazy and bounded") {
  auto t = build_table(default_machine(), 6, 50);
  auto p = sofic_product(t);
  CHECK(p->instantiated() == 0);
  auto c = p->lift(3, ClopenSet::cylinder(p->component_space(), W({1})));
  CHECK(p->meets(c));
  CHECK(p->instantiated() == 1);
  CHECK_THROWS_AS(p->component(6), HorizonError);
  // component 3 never halts: from [1] only zeros follow
  auto c3 = p->lift(3, ClopenSet::cylinder(p->component_space(), W({1, 0, 1})));
  CHECK_FALSE(p->meets(c3));
  // component 2 halts in 3 steps: 1 0^t 1 needs t >= 3
  CHECK_FALSE(p->meets(p->lift(2, ClopenSet::cylinder(p->component_space(), W({1, 0, 0, 1})))));
  CHECK(p->meets(p->lift(2, ClopenSet::cylinder(p->component_space(), W({1, 0, 0, 0, 1})))));
  auto s = shadowing_product(t);
  CHECK_FALSE(s->meets(s->lift(2, ClopenSet::cylinder(s->component_space(), W({0, 0, 0})))));
  CHECK(s->meets(s->lift(3, ClopenSet::cylinder(s->component_space(), W({0, 0, 0, 0, 0})))));
}

TEST_CASE("sofic trimming") {
  // state 2 has no successor; state 0 only feeds it
  SoficPresentation g{3, {{0, 0, 2}, {1, 1, 1}, {1, 0, 2}}};
  auto t1 = trim(g, false);
  CHECK(t1.states == 1);
  CHECK(t1.edges.size() == 1);
  auto f = sofic(bin(), g);
  CHECK_FALSE(f->meets(ClopenSet::cylinder(f->space(), W({0}))));
  CHECK(f->meets(ClopenSet::cylinder(f->space(), W({1, 1, 1}))));
}

TEST_CASE("golden mean ball counts") {
  // Fibonacci: balls of depth n meeting X number F(n+2)
  auto f = sft(bin(), {W({1, 1})});
  std::vector<int> expect{2, 3, 5, 8, 13, 21};
  for (int n = 1; n <= 6; ++n) {
    int c = 0;
    for (const auto& b : balls(f->space(), n)) c += f->meets(b);
    CHECK(c == expect[static_cast<std::size_t>(n - 1)]);
  }
}

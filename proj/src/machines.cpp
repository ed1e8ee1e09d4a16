#include <algorithm>
#include <limits>

#include "affine.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

int MachineSpec::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  throw SpecError("unknown machine state '" + name + "'");
}

void MachineSpec::validate() const {
  if (states.empty()) throw SpecError("machine has no states");
  if (tape.size() == 0) throw SpecError("machine has no tape alphabet");
  if (initial < 0 || initial >= static_cast<int>(states.size())) throw SpecError("initial state out of range");
  if (halting.size() != states.size()) throw SpecError("halting flags do not match the states");
  if (blank >= tape.size()) throw SpecError("blank symbol outside the tape alphabet");
  if (delta.size() != states.size() * tape.size()) throw SpecError("transition table has the wrong shape");
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t a = 0; a < tape.size(); ++a) {
      const auto& t = delta[q * tape.size() + a];
      if (halting[q]) continue;
      if (!t) throw SpecError("no transition for state " + states[q] + " reading " + tape.name(static_cast<Symbol>(a)));
      if (t->write >= tape.size()) throw SpecError("transition writes an unknown symbol");
      if (t->next < 0 || t->next >= static_cast<int>(states.size())) throw SpecError("transition to an unknown state");
    }
  }
}

long CollatzSpec::apply(long n) const {
  const auto& b = branches[static_cast<std::size_t>(n % modulus)];
  return (b.mul * n + b.add) / b.div;
}

namespace {

using detail::AffineCase;
using detail::Guard;
using detail::Src;

int shift_of(Move m) { return m == Move::R ? 1 : m == Move::L ? -1 : 0; }

class TuringMovingTape : public detail::AffineSystem {
public:
  explicit TuringMovingTape(MachineSpec m)
      : AffineSystem(std::make_shared<const Space>(std::vector<Track>{
            {"state", TrackKind::Cell, Alphabet(m.states)}, {"tape", TrackKind::TwoSided, m.tape}})),
        m_(std::move(m)) {
    m_.validate();
    for (std::size_t q = 0; q < m_.states.size(); ++q) {
      auto qs = static_cast<Symbol>(q);
      if (m_.halting[q]) {
        cases_.push_back({{{0, 0, qs}}, [](std::size_t t, int i) { return Src::copy(t, i); }});
        continue;
      }
      for (std::size_t a = 0; a < m_.tape.size(); ++a) {
        auto tr = *m_.rule(static_cast<int>(q), static_cast<Symbol>(a));
        int d = shift_of(tr.move);
        cases_.push_back({{{0, 0, qs}, {1, 0, static_cast<Symbol>(a)}}, [tr, d](std::size_t t, int i) {
                            if (t == 0) return Src::value(static_cast<Symbol>(tr.next));
                            if (i + d == 0) return Src::value(tr.write);
                            return Src::copy(1, i + d);
                          }});
      }
    }
  }
  std::string kind() const override { return "tm_moving"; }

private:
  MachineSpec m_;
};

class TuringBlank : public detail::AffineSystem {
public:
  explicit TuringBlank(MachineSpec m)
      : AffineSystem(std::make_shared<const Space>(std::vector<Track>{
            {"left", TrackKind::OneSided, with_end_marker(m.tape)},
            {"state", TrackKind::Cell, Alphabet(m.states)},
            {"right", TrackKind::OneSided, with_end_marker(m.tape)}})),
        m_(std::move(m)) {
    m_.validate();
    const auto end = static_cast<Symbol>(m_.tape.size());
    const Symbol blank = m_.blank;
    for (std::size_t q = 0; q < m_.states.size(); ++q) {
      auto qs = static_cast<Symbol>(q);
      if (m_.halting[q]) {
        cases_.push_back({{{1, 0, qs}}, [](std::size_t t, int i) { return Src::copy(t, i); }});
        continue;
      }
      for (Symbol a = 0; a <= end; ++a) {
        auto tr = *m_.rule(static_cast<int>(q), a == end ? blank : a);
        auto next = static_cast<Symbol>(tr.next);
        Symbol b = tr.write;
        std::vector<Guard> g{{1, 0, qs}, {2, 0, a}};
        switch (tr.move) {
          case Move::R:
            cases_.push_back({g, [next, b](std::size_t t, int i) {
                                if (t == 1) return Src::value(next);
                                if (t == 0) return i == 0 ? Src::value(b) : Src::copy(0, i - 1);
                                return Src::copy(2, i + 1);
                              }});
            break;
          case Move::N:
            cases_.push_back({g, [next, b](std::size_t t, int i) {
                                if (t == 1) return Src::value(next);
                                if (t == 2 && i == 0) return Src::value(b);
                                return Src::copy(t, i);
                              }});
            break;
          case Move::L:
            for (Symbol c = 0; c <= end; ++c) {
              Symbol head = c == end ? blank : c;
              auto gc = g;
              gc.push_back({0, 0, c});
              cases_.push_back({gc, [next, b, head](std::size_t t, int i) {
                                  if (t == 1) return Src::value(next);
                                  if (t == 0) return Src::copy(0, i + 1);
                                  if (i == 0) return Src::value(head);
                                  if (i == 1) return Src::value(b);
                                  return Src::copy(2, i - 1);
                                }});
            }
            break;
        }
      }
    }
  }

  bool meets(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "meets");
    if (c.is_empty()) return false;
    const auto end = static_cast<Symbol>(m_.tape.size());
    Layout lay(*space(), c.intervals());
    for (const auto& w : c.words()) {
      auto l = w.substr(lay.offset(0), static_cast<std::size_t>(c.intervals()[0].length()));
      auto r = w.substr(lay.offset(2), static_cast<std::size_t>(c.intervals()[2].length()));
      if (detail::word_respects_marker(l, end) && detail::word_respects_marker(r, end)) return true;
    }
    return false;
  }

  std::string kind() const override { return "tm_blank"; }

private:
  MachineSpec m_;
};

class TagSystem : public EffectiveSystem {
public:
  TagSystem(Alphabet a, std::vector<Word> prod, int v)
      : EffectiveSystem(Space::one_sided(with_end_marker(a))), prod_(std::move(prod)), v_(v) {
    if (v_ < 1) throw SpecError("tag deletion number must be at least 1");
    if (prod_.size() != a.size()) throw SpecError("tag system needs one production per symbol");
    for (const auto& p : prod_)
      for (unsigned char c : p)
        if (c >= a.size()) throw SpecError("production uses an unknown symbol");
    end_ = static_cast<Symbol>(a.size());
  }

  // Output on [0, len) from a window x[0..h]; nullopt if undetermined.
  std::optional<Word> apply(const Word& x, std::size_t len) const {
    std::size_t l = x.find(static_cast<char>(end_));
    const std::size_t v = static_cast<std::size_t>(v_);
    Word out;
    if (l == Word::npos) {
      if (x.size() < v + len) return std::nullopt;
      return x.substr(v, len);
    }
    if (l >= v) out = x.substr(v, l - v) + prod_[static_cast<Symbol>(x[0])];
    out.resize(std::max(out.size(), len), static_cast<char>(end_));
    return out.substr(0, len);
  }

  bool meets(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "meets");
    for (const auto& w : c.words())
      if (detail::word_respects_marker(w, end_)) return true;
    return false;
  }

  ClopenSet preimage(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "preimage");
    if (c.is_empty() || c.is_whole()) return c;
    const int hi = c.intervals()[0].hi;
    const Intervals target{{0, hi}};
    auto want = c.words_at(target);
    const Intervals src{{0, hi + v_}};
    std::vector<Word> out;
    for (auto& x : all_words(*space(), src)) {
      auto y = apply(x, static_cast<std::size_t>(hi + 1));
      if (y && std::binary_search(want.begin(), want.end(), *y)) out.push_back(std::move(x));
    }
    return ClopenSet::from_words(space(), src, std::move(out));
  }

  std::optional<Window> step_window(const Window& w) const override {
    const auto& iv = w.iv[0];
    if (iv.empty() || iv.lo != 0) return std::nullopt;
    std::size_t len = static_cast<std::size_t>(iv.length());
    if (w.word.find(static_cast<char>(end_)) == Word::npos) {
      if (len <= static_cast<std::size_t>(v_)) return std::nullopt;
      len -= static_cast<std::size_t>(v_);
    }
    auto y = apply(w.word, len);
    if (!y) return std::nullopt;
    return Window{{{0, static_cast<int>(len) - 1}}, *y};
  }

  std::string kind() const override { return "tag"; }

private:
  std::vector<Word> prod_;
  int v_;
  Symbol end_ = 0;
};

SpacePtr counter_space(const CounterProgram& p) {
  std::vector<std::string> pcs;
  for (std::size_t i = 0; i <= p.code.size(); ++i) pcs.push_back(std::to_string(i));
  std::vector<Track> tracks{{"pc", TrackKind::Cell, Alphabet(pcs)}};
  for (int i = 0; i < p.counters; ++i) tracks.push_back({"c" + std::to_string(i), TrackKind::OneSided, Alphabet({"0", "1"})});
  return std::make_shared<const Space>(std::move(tracks));
}

class CounterMachine : public detail::AffineSystem {
public:
  explicit CounterMachine(CounterProgram p) : AffineSystem(counter_space(validated(p))), p_(std::move(p)) {
    const int L = static_cast<int>(p_.code.size());
    auto copy_all = [](std::size_t t, int i) { return Src::copy(t, i); };
    for (int pc = 0; pc <= L; ++pc) {
      auto ps = static_cast<Symbol>(pc);
      if (pc == L || p_.code[pc].op == CounterInstr::Halt) {
        cases_.push_back({{{0, 0, ps}}, copy_all});
        continue;
      }
      const auto& in = p_.code[pc];
      const std::size_t tr = static_cast<std::size_t>(1 + in.reg);
      auto goto_ = [](Symbol to, std::function<Src(std::size_t, int)> rest) {
        return [to, rest](std::size_t t, int i) { return t == 0 ? Src::value(to) : rest(t, i); };
      };
      auto next = static_cast<Symbol>(pc + 1);
      switch (in.op) {
        case CounterInstr::Inc:
          cases_.push_back({{{0, 0, ps}}, goto_(next, [tr](std::size_t t, int i) {
                              if (t != tr) return Src::copy(t, i);
                              return i == 0 ? Src::value(1) : Src::copy(t, i - 1);
                            })});
          break;
        case CounterInstr::Dec:
          cases_.push_back({{{0, 0, ps}, {tr, 0, 1}}, goto_(next, [tr](std::size_t t, int i) {
                              return t == tr ? Src::copy(t, i + 1) : Src::copy(t, i);
                            })});
          cases_.push_back({{{0, 0, ps}, {tr, 0, 0}}, goto_(next, copy_all)});
          break;
        case CounterInstr::Jz:
          cases_.push_back({{{0, 0, ps}, {tr, 0, 0}}, goto_(static_cast<Symbol>(in.target), copy_all)});
          cases_.push_back({{{0, 0, ps}, {tr, 0, 1}}, goto_(next, copy_all)});
          break;
        case CounterInstr::Halt:
          break;
      }
    }
  }

  bool meets(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "meets");
    if (c.is_empty()) return false;
    Layout lay(*space(), c.intervals());
    for (const auto& w : c.words()) {
      bool ok = true;
      for (std::size_t t = 1; ok && t < space()->track_count(); ++t)
        ok = detail::word_is_unary(w.substr(lay.offset(t), static_cast<std::size_t>(c.intervals()[t].length())));
      if (ok) return true;
    }
    return false;
  }

  std::string kind() const override { return "counter"; }

private:
  static const CounterProgram& validated(const CounterProgram& p) {
    if (p.counters < 1) throw SpecError("counter machine needs at least one counter");
    for (const auto& in : p.code) {
      if (in.op != CounterInstr::Halt && (in.reg < 0 || in.reg >= p.counters)) throw SpecError("counter index out of range");
      if (in.op == CounterInstr::Jz && (in.target < 0 || in.target > static_cast<int>(p.code.size())))
        throw SpecError("jump target out of range");
    }
    return p;
  }
  CounterProgram p_;
};

class CollatzMap : public EffectiveSystem {
public:
  explicit CollatzMap(CollatzSpec s) : EffectiveSystem(Space::one_sided(Alphabet({"0", "1"}))), s_(std::move(s)) {
    if (s_.modulus < 1 || static_cast<long>(s_.branches.size()) != s_.modulus) throw SpecError("Collatz spec needs one branch per residue");
    for (long r = 0; r < s_.modulus; ++r) {
      const auto& b = s_.branches[static_cast<std::size_t>(r)];
      if (b.mul < 1 || b.div < 1) throw SpecError("Collatz branches need mul >= 1 and div >= 1");
      for (long k = 0; k <= b.div; ++k) {
        long n = r + k * s_.modulus;
        if ((b.mul * n + b.add) % b.div != 0) throw SpecError("Collatz branch is not integral on its residue class");
        if (b.mul * n + b.add < 0) throw SpecError("Collatz branch goes negative");
      }
    }
  }

  bool meets(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "meets");
    for (const auto& w : c.words())
      if (detail::word_is_unary(w)) return true;
    return false;
  }

  ClopenSet preimage(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "preimage");
    if (c.is_empty() || c.is_whole()) return c;
    const int D = c.intervals()[0].hi + 1;
    auto want = c.words_at({{0, D - 1}});
    auto in_c = [&](long k) {
      Word w(static_cast<std::size_t>(D), 0);
      for (long i = 0; i < std::min<long>(k, D); ++i) w[static_cast<std::size_t>(i)] = 1;
      return std::binary_search(want.begin(), want.end(), w);
    };
    long M = 0;
    for (const auto& b : s_.branches) M = std::max(M, (static_cast<long>(D) * b.div - b.add + b.mul - 1) / b.mul);
    std::vector<Cylinder> raw;
    auto point = [&](long m, bool tail) {
      Word w(static_cast<std::size_t>(m), 1);
      if (!tail) w.push_back(0);
      raw.push_back(Cylinder{{TrackWord{0, w}}});
    };
    for (long m = 0; m < M; ++m)
      if (in_c(s_.apply(m))) point(m, false);
    if (in_c(D)) point(M, true);
    return normalize(space(), raw);
  }

  std::optional<Window> step_window(const Window& w) const override {
    const auto& iv = w.iv[0];
    if (iv.empty() || iv.lo != 0) return std::nullopt;
    auto n = static_cast<long>(w.word.find(static_cast<char>(0)));
    if (n == static_cast<long>(Word::npos)) {
      // at least |w| ones: the image has at least K ones
      long K = std::numeric_limits<long>::max();
      long h = static_cast<long>(w.word.size());
      for (long m = h; m < h + s_.modulus; ++m) K = std::min(K, s_.apply(m));
      if (K <= 0) return std::nullopt;
      return Window{{{0, static_cast<int>(K) - 1}}, Word(static_cast<std::size_t>(K), 1)};
    }
    long k = s_.apply(n);
    Word out(static_cast<std::size_t>(k), 1);
    out.push_back(0);
    return Window{{{0, static_cast<int>(k)}}, out};
  }

  std::string kind() const override { return "collatz"; }

private:
  CollatzSpec s_;
};

}  // namespace

SystemPtr turing_moving_tape(MachineSpec m) { return std::make_shared<TuringMovingTape>(std::move(m)); }
SystemPtr turing_blank(MachineSpec m) { return std::make_shared<TuringBlank>(std::move(m)); }
SystemPtr tag_system(Alphabet a, std::vector<Word> productions, int deletion) {
  return std::make_shared<TagSystem>(std::move(a), std::move(productions), deletion);
}
SystemPtr counter_machine(CounterProgram p) { return std::make_shared<CounterMachine>(std::move(p)); }
SystemPtr collatz_map(CollatzSpec s) { return std::make_shared<CollatzMap>(std::move(s)); }

}  // namespace symdyn

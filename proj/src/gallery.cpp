#include "symdyn/gallery.hpp"

#include <algorithm>
#include <set>

#include "symdyn/errors.hpp"
#include "symdyn/kernels.hpp"

namespace symdyn {

// ---- Turing machines

Symbol TmConfig::read(const MachineSpec& m) const {
  long i = head - origin;
  if (i < 0 || i >= static_cast<long>(tape.size())) return m.blank;
  return tape[static_cast<std::size_t>(i)];
}

TmConfig TmConfig::normalized(const MachineSpec& m) const {
  TmConfig c = *this;
  // make the head cell explicit
  while (c.head < c.origin) {
    c.tape.insert(c.tape.begin(), m.blank);
    --c.origin;
  }
  while (c.head >= c.origin + static_cast<long>(c.tape.size())) c.tape.push_back(m.blank);
  while (!c.tape.empty() && c.origin < c.head && c.tape.front() == m.blank) {
    c.tape.erase(c.tape.begin());
    ++c.origin;
  }
  while (!c.tape.empty() && c.origin + static_cast<long>(c.tape.size()) - 1 > c.head && c.tape.back() == m.blank)
    c.tape.pop_back();
  return c;
}

bool TmConfig::same_as(const TmConfig& o, const MachineSpec& m) const {
  auto a = normalized(m), b = o.normalized(m);
  return a.state == b.state && a.head == b.head && a.origin == b.origin && a.tape == b.tape;
}

TmConfig input_config(const MachineSpec& m, int n) {
  auto one = m.tape.find("1");
  if (!one) throw SpecError("machine tape alphabet has no symbol '1' for unary inputs");
  TmConfig c;
  c.tape.assign(static_cast<std::size_t>(n), *one);
  c.state = m.initial;
  return c;
}

TmConfig tm_step(const MachineSpec& m, const TmConfig& c0) {
  if (m.halting[static_cast<std::size_t>(c0.state)]) return c0;
  TmConfig c = c0.normalized(m);
  const auto& t = *m.rule(c.state, c.read(m));
  c.tape[static_cast<std::size_t>(c.head - c.origin)] = t.write;
  c.state = t.next;
  if (t.move == Move::L) --c.head;
  if (t.move == Move::R) ++c.head;
  return c;
}

std::optional<int> halting_time(const MachineSpec& m, TmConfig c, int cutoff) {
  for (int s = 0; s <= cutoff; ++s) {
    if (m.halting[static_cast<std::size_t>(c.state)]) return s;
    c = tm_step(m, c);
  }
  return std::nullopt;
}

namespace {

MachineSpec binary_machine(std::vector<std::string> states, std::vector<bool> halting,
                           const std::vector<std::tuple<int, int, int, Move, int>>& rules) {
  MachineSpec m;
  m.states = std::move(states);
  m.halting = std::move(halting);
  m.tape = Alphabet({"0", "1"});
  m.blank = 0;
  m.delta.resize(m.states.size() * 2);
  for (auto [q, a, b, mv, next] : rules)
    m.delta[static_cast<std::size_t>(q * 2 + a)] = Transition{static_cast<Symbol>(b), mv, next};
  m.validate();
  return m;
}

}  // namespace

MachineSpec default_machine() {
  // A,B alternate over the 1s; A on the first blank halts, B drifts right forever
  return binary_machine({"A", "B", "C", "H"}, {false, false, false, true},
                        {{0, 1, 1, Move::R, 1},
                         {0, 0, 0, Move::N, 3},
                         {1, 1, 1, Move::R, 0},
                         {1, 0, 0, Move::R, 2},
                         {2, 0, 0, Move::R, 2},
                         {2, 1, 1, Move::R, 2}});
}

MachineSpec bb3_machine() {
  return binary_machine({"A", "B", "C", "H"}, {false, false, false, true},
                        {{0, 0, 1, Move::R, 1},
                         {0, 1, 1, Move::R, 3},
                         {1, 0, 0, Move::R, 2},
                         {1, 1, 1, Move::R, 1},
                         {2, 0, 1, Move::L, 2},
                         {2, 1, 1, Move::L, 0}});
}

void HaltTimeTable::validate() const {
  machine.validate();
  if (cutoff < 0) throw SpecError("table cutoff must be non-negative");
  for (const auto& e : entries)
    if (e && (*e < 0 || *e > cutoff)) throw SpecError("table entry outside [0, cutoff]");
}

HaltTimeTable build_table(const MachineSpec& m, int inputs, int cutoff, Exec e) {
  m.validate();
  if (inputs < 0 || cutoff < 0) throw SpecError("table sizes must be non-negative");
  HaltTimeTable t{m, cutoff, std::vector<std::optional<int>>(static_cast<std::size_t>(inputs))};
  for_each_index(t.entries.size(), e, [&](std::size_t n) {
    t.entries[n] = halting_time(m, input_config(m, static_cast<int>(n)), cutoff);
  });
  return t;
}

// ---- universal subshifts

SoficPresentation universal_presentation(const HaltTimeTable& t, bool separator) {
  t.validate();
  const int M = std::max(0, t.inputs() - 1);  // constrained runs 1..M
  // states: start, Z, O_1..O_{M+1}, then the zero counters of each run length
  const int start = 0, zero = 1;
  auto ones = [&](int j) { return 1 + j; };
  int next = ones(M + 1) + 1;
  std::vector<int> counter(static_cast<std::size_t>(M) + 1, -1), length(static_cast<std::size_t>(M) + 1, 0);
  for (int j = 1; j <= M; ++j) {
    const auto& k = t.entries[static_cast<std::size_t>(j)];
    int len = k ? *k : 1;
    if (len == 0) continue;
    counter[static_cast<std::size_t>(j)] = next;
    length[static_cast<std::size_t>(j)] = len;
    next += len;
  }
  SoficPresentation g;
  g.states = next;
  auto edge = [&](int a, Symbol s, int b) { g.edges.push_back({a, s, b}); };
  edge(start, 0, zero);
  edge(start, 1, start);
  edge(zero, 0, zero);
  edge(zero, 1, ones(1));
  for (int j = 1; j <= M + 1; ++j) {
    edge(ones(j), 1, ones(std::min(j + 1, M + 1)));
    if (j == M + 1 || counter[static_cast<std::size_t>(j)] < 0) edge(ones(j), 0, zero);
    else edge(ones(j), 0, counter[static_cast<std::size_t>(j)]);
  }
  for (int j = 1; j <= M; ++j) {
    int c0 = counter[static_cast<std::size_t>(j)];
    if (c0 < 0) continue;
    int len = length[static_cast<std::size_t>(j)];
    if (!t.entries[static_cast<std::size_t>(j)]) {
      edge(c0, 0, c0);  // only zeros may follow
      continue;
    }
    for (int c = 0; c < len; ++c) edge(c0 + c, 0, c + 1 == len ? zero : c0 + c + 1);
  }
  if (separator)
    for (int s = 0; s < g.states; ++s) edge(s, 2, start);
  return g;
}

SystemPtr universal_subshift(const HaltTimeTable& t) {
  return sofic(Alphabet({"0", "1"}), universal_presentation(t, false));
}

SystemPtr chaotic_universal(const HaltTimeTable& t) {
  return sofic(Alphabet({"0", "1", kSeparator}), universal_presentation(t, true));
}

bool has_periodic(const SoficPresentation& g, const Word& u) {
  for (int s = 0; s < g.states; ++s) {
    std::set<int> cur{s};
    for (char ch : u) {
      std::set<int> nx;
      for (const auto& e : g.edges)
        if (cur.count(e.from) && e.label == static_cast<Symbol>(ch)) nx.insert(e.to);
      cur = std::move(nx);
    }
    if (cur.count(s)) return true;
  }
  return false;
}

namespace {

void require_admissible(const EffectiveSystem& f, const Word& w) {
  if (!f.meets(ClopenSet::cylinder(f.space(), w)))
    throw QueryError("word " + word_to_string(f.space()->track(0).alphabet, w) + " is not in the language");
}

}  // namespace

Word periodic_point(const EffectiveSystem& chaotic, const Word& w) {
  require_admissible(chaotic, w);
  Word c = w;
  if (c.empty() || c.back() != 2) c.push_back(2);
  return c;
}

Word transitivity_witness(const EffectiveSystem& chaotic, const Word& v, const Word& w) {
  require_admissible(chaotic, v);
  require_admissible(chaotic, w);
  Word c = v;
  c.push_back(2);
  return c + w;
}

Partition guarded_partition(const EffectiveSystem& chaotic, int n) {
  if (n < 1) throw QueryError("guarded query needs n >= 1");
  const auto& sp = chaotic.space();
  Word u(1, '\0');
  u.append(static_cast<std::size_t>(n), '\1');
  u.push_back('\0');
  std::vector<Cell> cells{{"U", ClopenSet::cylinder(sp, u)},
                          {"V", ClopenSet::cylinder(sp, Word("\0\0\1", 3))},
                          {"W", ClopenSet::cylinder(sp, Word(1, '\2'))}};
  return Partition::with_rest(sp, std::move(cells), "T");
}

Verdict guarded_halting_query(const EffectiveSystem& chaotic, int n, const Budget& b) {
  return check_regular(chaotic, guarded_partition(chaotic, n), guarded_automaton(), b);
}

// ---- products

namespace {

SystemPtr sofic_component(const std::optional<int>& k) {
  Alphabet a({"0", "1"});
  if (!k) {
    // {0*10^omega, 0^omega}
    return sofic(a, SoficPresentation{2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}});
  }
  std::vector<Word> forbidden;
  for (int t = 0; t < *k; ++t) forbidden.push_back("\1" + Word(static_cast<std::size_t>(t), '\0') + "\1");
  return forbidden.empty() ? full_shift(a) : sft(a, forbidden);
}

SystemPtr shadowing_component(const std::optional<int>& k) {
  Alphabet a({"0", "1"});
  if (!k) return full_shift(a);
  return sft(a, {Word(static_cast<std::size_t>(std::max(*k, 1)), '\0')});
}

}  // namespace

std::shared_ptr<const ProductSystem> sofic_product(const HaltTimeTable& t) {
  t.validate();
  auto entries = t.entries;
  return product(Space::one_sided(Alphabet({"0", "1"})),
                 [entries](int n) { return sofic_component(entries[static_cast<std::size_t>(n)]); }, t.inputs());
}

std::shared_ptr<const ProductSystem> shadowing_product(const HaltTimeTable& t) {
  t.validate();
  auto entries = t.entries;
  return product(Space::one_sided(Alphabet({"0", "1"})),
                 [entries](int n) { return shadowing_component(entries[static_cast<std::size_t>(n)]); }, t.inputs());
}

Verdict product_halting_query(const ProductSystem& p, int n, const Budget& b) {
  const auto& c = p.component_space();
  std::vector<Cell> cells{{"U", p.lift(n, ClopenSet::cylinder(c, Word("\1", 1)))},
                          {"V", p.lift(n, ClopenSet::cylinder(c, Word("\0\1", 2)))}};
  auto part = Partition::with_rest(p.space(), std::move(cells), "W");
  return check_regular(p, part, halting_automaton(), b);
}

// ---- TM in CA

Symbol TmInCa::head(Symbol a, int q) const {
  return static_cast<Symbol>(machine.tape.size() + a * machine.states.size() + static_cast<std::size_t>(q));
}
Symbol TmInCa::marker_left() const { return static_cast<Symbol>(machine.tape.size() * (1 + machine.states.size())); }
Symbol TmInCa::marker_right() const { return static_cast<Symbol>(marker_left() + 1); }
Symbol TmInCa::error() const { return static_cast<Symbol>(marker_left() + 2); }

TmInCa tm_in_ca(const MachineSpec& m) {
  m.validate();
  TmInCa r;
  r.machine = m;
  const int A = static_cast<int>(m.tape.size()), Q = static_cast<int>(m.states.size());
  std::vector<std::string> names = m.tape.symbols();
  for (int a = 0; a < A; ++a)
    for (int q = 0; q < Q; ++q) names.push_back(m.tape.name(static_cast<Symbol>(a)) + ":" + m.states[static_cast<std::size_t>(q)]);
  names.insert(names.end(), {"L", "R", "Error"});
  if (names.size() > 254) throw SpecError("machine too large for a CA alphabet");
  r.alphabet = Alphabet(names);
  const int S = static_cast<int>(names.size());
  const int L = r.marker_left(), R = r.marker_right(), E = r.error();
  auto is_head = [&](int s) { return s >= A && s < L; };
  auto sym = [&](int s) { return (s - A) / Q; };
  auto st = [&](int s) { return (s - A) % Q; };
  // state a head moving `mv` would enter a neighbour with, or -1
  auto moving = [&](int s, Move mv) {
    if (!is_head(s) || m.halting[static_cast<std::size_t>(st(s))]) return -1;
    const auto& t = *m.rule(st(s), static_cast<Symbol>(sym(s)));
    return t.move == mv ? t.next : -1;
  };
  auto local = [&](int l, int c, int rr) -> int {
    if (l == E || c == E || rr == E) return E;
    if ((l == R && rr == L) || (c == L && l == R) || (c == R && rr == L)) return E;
    if (rr == L) return L;
    if (l == R) return R;
    int base;
    bool keeps_head = false;
    if (c == L || c == R) base = m.blank;
    else if (is_head(c)) {
      if (m.halting[static_cast<std::size_t>(st(c))]) {
        base = c;
        keeps_head = true;
      } else {
        const auto& t = *m.rule(st(c), static_cast<Symbol>(sym(c)));
        base = t.write;
        if (t.move == Move::N) {
          base = r.head(t.write, t.next);
          keeps_head = true;
        }
      }
    } else base = c;
    int in_l = moving(l, Move::R), in_r = moving(rr, Move::L);
    int incoming = (in_l >= 0) + (in_r >= 0);
    if (incoming == 0) return base;
    if (incoming == 2 || keeps_head) return E;
    return r.head(static_cast<Symbol>(base), in_l >= 0 ? in_l : in_r);
  };
  r.rule.radius = 1;
  r.rule.table.resize(static_cast<std::size_t>(S * S * S));
  for (int l = 0; l < S; ++l)
    for (int c = 0; c < S; ++c)
      for (int rr = 0; rr < S; ++rr) r.rule.table[static_cast<std::size_t>((l * S + c) * S + rr)] = static_cast<Symbol>(local(l, c, rr));
  r.ca = cellular_automaton(r.alphabet, r.rule);
  return r;
}

std::pair<Word, long> TmInCa::encode(const TmConfig& c0) const {
  auto c = c0.normalized(machine);
  Word w;
  w.push_back(static_cast<char>(marker_left()));
  for (std::size_t i = 0; i < c.tape.size(); ++i) {
    long x = c.origin + static_cast<long>(i);
    w.push_back(static_cast<char>(x == c.head ? head(c.tape[i], c.state) : c.tape[i]));
  }
  w.push_back(static_cast<char>(marker_right()));
  return {w, c.origin - 1};
}

std::optional<TmConfig> TmInCa::decode(const Word& w, long first) const {
  const Symbol L = marker_left(), R = marker_right(), E = error();
  long lpos = -1, rpos = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto s = static_cast<Symbol>(w[i]);
    if (s == E) return std::nullopt;
    if (s == L) {
      if (lpos >= 0) return std::nullopt;
      lpos = static_cast<long>(i);
    }
    if (s == R) {
      if (rpos >= 0) return std::nullopt;
      rpos = static_cast<long>(i);
    }
  }
  if (lpos < 0 || rpos < lpos) return std::nullopt;
  TmConfig c;
  c.origin = first + lpos + 1;
  bool found = false;
  const auto A = machine.tape.size(), Q = machine.states.size();
  for (long i = lpos + 1; i < rpos; ++i) {
    auto s = static_cast<Symbol>(w[static_cast<std::size_t>(i)]);
    if (s < A) {
      c.tape.push_back(s);
      continue;
    }
    if (found) return std::nullopt;
    found = true;
    c.tape.push_back(static_cast<Symbol>((s - A) / Q));
    c.state = static_cast<int>((s - A) % Q);
    c.head = first + i;
  }
  if (!found) return std::nullopt;
  return c;
}

std::pair<Word, long> TmInCa::step(const Word& w, long first) const {
  Word padded(2, static_cast<char>(machine.blank));
  padded += w;
  padded.append(2, static_cast<char>(machine.blank));
  return {ca_apply(static_cast<int>(alphabet.size()), 1, rule.table, padded), first - 1};
}

std::optional<int> TmInCa::halts(const TmConfig& c, int limit) const {
  auto [w, first] = encode(c);
  const auto A = machine.tape.size(), Q = machine.states.size();
  for (int s = 0; s <= limit; ++s) {
    for (char ch : w) {
      auto x = static_cast<Symbol>(ch);
      if (x >= A && x < marker_left() && machine.halting[(x - A) % Q]) return s;
    }
    std::tie(w, first) = step(w, first);
  }
  return std::nullopt;
}

// ---- names

std::vector<std::string> gallery_names() {
  return {"universal", "chaotic", "sofic_product", "shadowing_product", "tm_in_ca"};
}

SystemPtr gallery_system(const std::string& name, const HaltTimeTable& t) {
  if (name == "universal") return universal_subshift(t);
  if (name == "chaotic") return chaotic_universal(t);
  if (name == "sofic_product") return sofic_product(t);
  if (name == "shadowing_product") return shadowing_product(t);
  if (name == "tm_in_ca") return tm_in_ca(t.machine).ca;
  throw QueryError("unknown gallery system '" + name + "'");
}

}  // namespace symdyn

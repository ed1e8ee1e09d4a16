#include "symdyn/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>

#include "symdyn/errors.hpp"

namespace symdyn::io {

namespace {

[[noreturn]] void fail(const std::string& path, std::string what) {
  const std::string tag = "spec error: ";
  if (what.rfind(tag, 0) == 0) what.erase(0, tag.size());
  if (what.rfind("at ", 0) == 0) throw SpecError(what);  // innermost path wins
  throw SpecError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& x : array(j, path)) out.push_back(str(x, path + "/" + std::to_string(i++)));
  return out;
}

Alphabet alphabet(const json& j, const std::string& path) {
  try {
    return Alphabet(strings(j, path));
  } catch (const SpecError& e) {
    fail(path, e.what());
  }
}

bool flag(const json& j, const char* key, bool dflt) {
  auto it = j.find(key);
  return it == j.end() ? dflt : it->get<bool>();
}

int index_of(const std::vector<std::string>& names, const std::string& s, const std::string& path) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == s) return static_cast<int>(i);
  fail(path, "unknown name '" + s + "'");
}

}  // namespace

json read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw SpecError("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(p.string() + ": " + e.what());
  }
}

json resolve(const json& j, const std::filesystem::path& base) {
  if (!j.is_string()) return j;
  std::filesystem::path p(j.get<std::string>());
  if (p.is_relative()) p = base / p;
  if (p.extension() == ".json" && std::filesystem::exists(p)) return read_file(p);
  return j;
}

// ---- words

Word parse_word(const Alphabet& a, const std::string& text, bool wildcards) {
  Word w;
  std::size_t i = 0;
  const bool dot = wildcards && !a.find(".");
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (dot && text[i] == '.') {
      w.push_back(static_cast<char>(kWildcard));
      ++i;
      continue;
    }
    std::size_t best = 0;
    Symbol sym = 0;
    for (std::size_t s = 0; s < a.size(); ++s) {
      const auto& n = a.name(static_cast<Symbol>(s));
      if (n.size() > best && text.compare(i, n.size(), n) == 0) {
        best = n.size();
        sym = static_cast<Symbol>(s);
      }
    }
    if (best == 0) throw QueryError("cannot read a symbol at '" + text.substr(i) + "'");
    w.push_back(static_cast<char>(sym));
    i += best;
  }
  return w;
}

Word load_word(const Alphabet& a, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_word(a, j.get<std::string>());
    Word w;
    for (const auto& s : strings(j, path)) w.push_back(static_cast<char>(a.index(s)));
    return w;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json dump_word(const Alphabet& a, const Word& w) {
  if (a.single_codepoint()) return word_to_string(a, w);
  json arr = json::array();
  for (char c : w) arr.push_back(a.name(static_cast<Symbol>(c)));
  return arr;
}

// ---- clopen expressions

namespace {

class ClopenParser {
public:
  ClopenParser(SpacePtr sp, const std::string& s) : sp_(std::move(sp)), s_(s) {}

  ClopenSet run() {
    auto c = expr();
    skip();
    if (i_ != s_.size()) error("trailing input");
    return c;
  }

private:
  [[noreturn]] void error(const std::string& what) {
    throw QueryError("clopen expression '" + s_ + "': " + what + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  ClopenSet expr() {
    auto c = conj();
    while (eat('|')) c = unite(c, conj());
    return c;
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '~' || c == '(' || c == '[' || c == '{' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
  ClopenSet conj() {
    auto c = unary();
    while (true) {
      if (eat('&')) c = intersect(c, unary());
      else if (starts_atom()) c = intersect(c, unary());
      else return c;
    }
  }
  ClopenSet unary() {
    if (eat('~')) return complement(unary());
    return atom();
  }
  ClopenSet atom() {
    skip();
    if (eat('(')) {
      auto c = expr();
      if (!eat(')')) error("expected ')'");
      return c;
    }
    if (eat('{')) {
      auto c = ClopenSet::empty(sp_);
      if (eat('}')) return c;
      do c = unite(c, expr());
      while (eat(','));
      if (!eat('}')) error("expected '}'");
      return c;
    }
    std::size_t track = 0;
    if (i_ < s_.size() && s_[i_] != '[') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name = s_.substr(i_, j - i_);
      i_ = j;
      if (!eat(':')) {
        if (name == "X") return ClopenSet::whole(sp_);
        error("expected ':' after track name");
      }
      auto t = sp_->find_track(name);
      if (!t) error("unknown track '" + name + "'");
      track = *t;
    } else if (sp_->track_count() != 1) {
      // default to the first non-cell track
      while (track < sp_->track_count() && sp_->track(track).kind == TrackKind::Cell) ++track;
      if (track == sp_->track_count()) track = 0;
    }
    if (!eat('[')) error("expected '['");
    auto close = s_.find(']', i_);
    if (close == std::string::npos) error("expected ']'");
    Word w = parse_word(sp_->track(track).alphabet, s_.substr(i_, close - i_), true);
    i_ = close + 1;
    int anchor = 0;
    if (eat('@')) {
      std::size_t used = 0;
      try {
        anchor = std::stoi(s_.substr(i_), &used);
      } catch (const std::exception&) {
        error("expected an integer after '@'");
      }
      i_ += used;
    }
    if (w.empty()) return ClopenSet::whole(sp_);
    return ClopenSet::cylinder(sp_, w, anchor, track);
  }

  SpacePtr sp_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

ClopenSet parse_clopen(SpacePtr space, const std::string& text) { return ClopenParser(std::move(space), text).run(); }

ClopenSet load_clopen(SpacePtr space, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_clopen(space, j.get<std::string>());
    const auto& ivs = array(field(j, "intervals", path), path + "/intervals");
    if (ivs.size() != space->track_count()) fail(path + "/intervals", "one interval per track expected");
    Intervals iv;
    for (const auto& x : ivs) iv.push_back({static_cast<int>(integer(x.at(0), path)), static_cast<int>(integer(x.at(1), path))});
    std::vector<Word> words;
    std::size_t k = 0;
    for (const auto& w : array(field(j, "words", path), path + "/words")) {
      std::string wp = path + "/words/" + std::to_string(k++);
      if (space->track_count() == 1) {
        words.push_back(load_word(space->track(0).alphabet, w, wp));
        continue;
      }
      const auto& parts = array(w, wp);
      if (parts.size() != space->track_count()) fail(wp, "one part per track expected");
      Word packed;
      for (std::size_t t = 0; t < parts.size(); ++t) packed += load_word(space->track(t).alphabet, parts[t], wp);
      words.push_back(packed);
    }
    return ClopenSet::from_words(space, iv, std::move(words));
  } catch (const json::exception& e) {
    fail(path, e.what());
  } catch (const QueryError& e) {
    fail(path, e.what());
  }
}

json dump_clopen(const ClopenSet& c) {
  const auto& sp = *c.space();
  json ivs = json::array();
  for (const auto& iv : c.intervals()) ivs.push_back({iv.lo, iv.hi});
  Layout lay(sp, c.intervals());
  json words = json::array();
  for (const auto& w : c.words()) {
    if (sp.track_count() == 1) {
      words.push_back(dump_word(sp.track(0).alphabet, w));
      continue;
    }
    json parts = json::array();
    for (std::size_t t = 0; t < sp.track_count(); ++t)
      parts.push_back(dump_word(sp.track(t).alphabet, w.substr(lay.offset(t), static_cast<std::size_t>(c.intervals()[t].length()))));
    words.push_back(parts);
  }
  return {{"intervals", ivs}, {"words", words}, {"text", to_string(c)}};
}

// ---- machines and tables

MachineSpec load_machine(const json& j, const std::string& path) {
  MachineSpec m;
  m.states = strings(field(j, "states", path), path + "/states");
  m.tape = alphabet(field(j, "tape", path), path + "/tape");
  m.initial = index_of(m.states, str(field(j, "initial", path), path + "/initial"), path + "/initial");
  m.halting.assign(m.states.size(), false);
  for (const auto& h : strings(field(j, "halting", path), path + "/halting"))
    m.halting[static_cast<std::size_t>(index_of(m.states, h, path + "/halting"))] = true;
  m.blank = static_cast<Symbol>(index_of(m.tape.symbols(), str(field(j, "blank", path), path + "/blank"), path + "/blank"));
  m.delta.assign(m.states.size() * m.tape.size(), std::nullopt);
  std::size_t k = 0;
  for (const auto& r : array(field(j, "rules", path), path + "/rules")) {
    std::string rp = path + "/rules/" + std::to_string(k++);
    auto v = strings(r, rp);
    if (v.size() != 5) fail(rp, "rule is [state, read, write, move, next]");
    int q = index_of(m.states, v[0], rp + "/0");
    int a = index_of(m.tape.symbols(), v[1], rp + "/1");
    int b = index_of(m.tape.symbols(), v[2], rp + "/2");
    Move mv = v[3] == "L" ? Move::L : v[3] == "R" ? Move::R : v[3] == "N" ? Move::N : (fail(rp + "/3", "move is L, R or N"), Move::N);
    int next = index_of(m.states, v[4], rp + "/4");
    auto& slot = m.delta[static_cast<std::size_t>(q) * m.tape.size() + static_cast<std::size_t>(a)];
    if (slot) fail(rp, "duplicate rule");
    slot = Transition{static_cast<Symbol>(b), mv, next};
  }
  try {
    m.validate();
  } catch (const SpecError& e) {
    fail(path, e.what());
  }
  return m;
}

json dump_machine(const MachineSpec& m) {
  json halting = json::array(), rules = json::array();
  for (std::size_t q = 0; q < m.states.size(); ++q) {
    if (m.halting[q]) halting.push_back(m.states[q]);
    for (std::size_t a = 0; a < m.tape.size(); ++a) {
      const auto& t = m.delta[q * m.tape.size() + a];
      if (!t) continue;
      const char* mv = t->move == Move::L ? "L" : t->move == Move::R ? "R" : "N";
      rules.push_back({m.states[q], m.tape.name(static_cast<Symbol>(a)), m.tape.name(t->write), mv, m.states[static_cast<std::size_t>(t->next)]});
    }
  }
  return {{"states", m.states}, {"initial", m.states[static_cast<std::size_t>(m.initial)]}, {"halting", halting},
          {"tape", m.tape.symbols()}, {"blank", m.tape.name(m.blank)}, {"rules", rules}};
}

HaltTimeTable load_table(const json& j, const std::string& path) {
  HaltTimeTable t;
  t.machine = load_machine(field(j, "machine", path), path + "/machine");
  t.cutoff = static_cast<int>(integer(field(j, "cutoff", path), path + "/cutoff"));
  std::size_t k = 0;
  for (const auto& e : array(field(j, "entries", path), path + "/entries")) {
    std::string ep = path + "/entries/" + std::to_string(k++);
    if (e.is_null()) t.entries.emplace_back();
    else t.entries.emplace_back(static_cast<int>(integer(e, ep)));
  }
  try {
    t.validate();
  } catch (const SpecError& e) {
    fail(path, e.what());
  }
  return t;
}

json dump_table(const HaltTimeTable& t) {
  json entries = json::array();
  for (const auto& e : t.entries) entries.push_back(e ? json(*e) : json(nullptr));
  return {{"machine", dump_machine(t.machine)}, {"cutoff", t.cutoff}, {"entries", entries}};
}

// ---- systems

namespace {

SoficPresentation load_graph(const Alphabet& a, const json& j, const std::string& path) {
  SoficPresentation g;
  g.states = static_cast<int>(integer(field(j, "states", path), path + "/states"));
  std::size_t k = 0;
  for (const auto& e : array(field(j, "edges", path), path + "/edges")) {
    std::string ep = path + "/edges/" + std::to_string(k++);
    if (!e.is_array() || e.size() != 3) fail(ep, "edge is [from, label, to]");
    auto label = a.find(str(e[1], ep + "/1"));
    if (!label) fail(ep + "/1", "label outside the alphabet");
    g.edges.push_back({static_cast<int>(integer(e[0], ep + "/0")), *label, static_cast<int>(integer(e[2], ep + "/2"))});
  }
  return g;
}

LocalRule load_rule(const Alphabet& a, const json& j, const std::string& path) {
  LocalRule r;
  r.radius = static_cast<int>(integer(field(j, "radius", path), path + "/radius"));
  if (r.radius < 0 || r.radius > 3) fail(path + "/radius", "radius must lie in 0..3");
  std::size_t size = 1;
  for (int i = 0; i < 2 * r.radius + 1; ++i) size *= a.size();
  if (j.contains("wolfram")) {
    if (a.size() != 2 || r.radius != 1) fail(path + "/wolfram", "Wolfram codes need a binary radius-1 rule");
    long code = integer(j["wolfram"], path + "/wolfram");
    if (code < 0 || code > 255) fail(path + "/wolfram", "code must lie in 0..255");
    for (std::size_t i = 0; i < 8; ++i) r.table.push_back(static_cast<Symbol>((code >> i) & 1));
    return r;
  }
  const auto& t = array(field(j, "table", path), path + "/table");
  if (t.size() != size) fail(path + "/table", "table needs " + std::to_string(size) + " entries");
  std::size_t k = 0;
  for (const auto& x : t) {
    auto s = a.find(str(x, path + "/table/" + std::to_string(k++)));
    if (!s) fail(path + "/table", "entry outside the alphabet");
    r.table.push_back(*s);
  }
  return r;
}

}  // namespace

SystemPtr load_system(const json& j0, const std::filesystem::path& base, const std::string& path) {
  json j = resolve(j0, base);
  const std::string kind = str(field(j, "kind", path), path + "/kind");
  auto alpha = [&] { return alphabet(field(j, "alphabet", path), path + "/alphabet"); };
  const bool two = j.is_object() && flag(j, "two_sided", false);
  try {
    if (kind == "full_shift") return full_shift(alpha(), two);
    if (kind == "sft") {
      auto a = alpha();
      std::vector<Word> forb;
      std::size_t k = 0;
      for (const auto& w : array(field(j, "forbidden", path), path + "/forbidden"))
        forb.push_back(load_word(a, w, path + "/forbidden/" + std::to_string(k++)));
      return sft(a, forb, two);
    }
    if (kind == "sofic") {
      auto a = alpha();
      return sofic(a, load_graph(a, j, path), two);
    }
    if (kind == "ca") {
      auto a = alpha();
      return cellular_automaton(a, load_rule(a, j, path));
    }
    if (kind == "prepend_zero") return prepend_zero();
    if (kind == "identity") return identity(two ? Space::two_sided(alpha()) : Space::one_sided(alpha()));
    if (kind == "tm_moving") return turing_moving_tape(load_machine(field(j, "machine", path), path + "/machine"));
    if (kind == "tm_blank") return turing_blank(load_machine(field(j, "machine", path), path + "/machine"));
    if (kind == "tag") {
      auto a = alpha();
      const auto& prods = field(j, "productions", path);
      std::vector<Word> p(a.size());
      for (std::size_t s = 0; s < a.size(); ++s) {
        auto it = prods.find(a.name(static_cast<Symbol>(s)));
        if (it == prods.end()) fail(path + "/productions", "no production for " + a.name(static_cast<Symbol>(s)));
        p[s] = load_word(a, *it, path + "/productions/" + a.name(static_cast<Symbol>(s)));
      }
      return tag_system(a, p, static_cast<int>(integer(field(j, "deletion", path), path + "/deletion")));
    }
    if (kind == "counter") {
      CounterProgram prog;
      prog.counters = static_cast<int>(integer(field(j, "counters", path), path + "/counters"));
      std::size_t k = 0;
      for (const auto& ins : array(field(j, "code", path), path + "/code")) {
        std::string ip = path + "/code/" + std::to_string(k++);
        if (!ins.is_array() || ins.empty()) fail(ip, "instruction is [op, ...]");
        std::string op = str(ins[0], ip + "/0");
        CounterInstr c;
        if (op == "halt") c.op = CounterInstr::Halt;
        else {
          if (ins.size() < 2) fail(ip, "missing register");
          c.reg = static_cast<int>(integer(ins[1], ip + "/1"));
          if (op == "inc") c.op = CounterInstr::Inc;
          else if (op == "dec") c.op = CounterInstr::Dec;
          else if (op == "jz") {
            c.op = CounterInstr::Jz;
            if (ins.size() < 3) fail(ip, "jz needs a target");
            c.target = static_cast<int>(integer(ins[2], ip + "/2"));
          } else fail(ip + "/0", "unknown op '" + op + "'");
        }
        prog.code.push_back(c);
      }
      return counter_machine(prog);
    }
    if (kind == "collatz") {
      CollatzSpec s;
      s.modulus = integer(field(j, "modulus", path), path + "/modulus");
      std::size_t k = 0;
      for (const auto& b : array(field(j, "branches", path), path + "/branches")) {
        std::string bp = path + "/branches/" + std::to_string(k++);
        if (!b.is_array() || b.size() != 3) fail(bp, "branch is [mul, add, div]");
        s.branches.push_back({integer(b[0], bp), integer(b[1], bp), integer(b[2], bp)});
      }
      return collatz_map(s);
    }
    if (kind == "gallery") {
      HaltTimeTable t;
      if (j.contains("table")) {
        t = load_table(resolve(j["table"], base), path + "/table");
      } else {
        auto m = j.contains("machine") ? load_machine(resolve(j["machine"], base), path + "/machine") : default_machine();
        t = build_table(m, static_cast<int>(j.value("inputs", 8)), static_cast<int>(j.value("cutoff", 200)));
      }
      return gallery_system(str(field(j, "name", path), path + "/name"), t);
    }
  } catch (const SpecError& e) {
    std::string w = e.what();
    if (w.rfind("at ", 0) == 0) throw;
    fail(path, w);
  }
  fail(path + "/kind", "unknown system kind '" + kind + "'");
}

// ---- partitions

Partition load_partition(SpacePtr space, const json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.rfind("depth", 0) == 0) {
      try {
        return Partition::cylinders(space, std::stoi(s.substr(5)));
      } catch (const std::invalid_argument&) {
        fail(path, "expected depthN");
      }
    }
    fail(path, "unknown partition '" + s + "'");
  }
  std::vector<Cell> cells;
  std::size_t k = 0;
  for (const auto& c : array(field(j, "cells", path), path + "/cells")) {
    std::string cp = path + "/cells/" + std::to_string(k++);
    cells.push_back({str(field(c, "name", cp), cp + "/name"), load_clopen(space, field(c, "set", cp), cp + "/set")});
  }
  try {
    if (j.contains("rest")) return Partition::with_rest(space, std::move(cells), str(j["rest"], path + "/rest"));
    return Partition(space, std::move(cells));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json dump_partition(const Partition& p) {
  json cells = json::array();
  for (const auto& c : p.cells()) cells.push_back({{"name", c.name}, {"set", to_string(c.set)}});
  return {{"cells", cells}};
}

// ---- automata

namespace {

std::vector<int> load_delta(const json& j, const std::vector<std::string>& states, const std::vector<std::string>& sigma,
                            const std::string& path) {
  std::vector<int> delta(states.size() * sigma.size(), -1);
  const auto& d = field(j, "delta", path);
  for (std::size_t q = 0; q < states.size(); ++q) {
    std::string qp = path + "/delta/" + states[q];
    auto row = d.find(states[q]);
    if (row == d.end()) fail(qp, "missing row");
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      auto it = row->find(sigma[a]);
      if (it == row->end()) fail(qp + "/" + sigma[a], "missing transition");
      delta[q * sigma.size() + a] = index_of(states, str(*it, qp + "/" + sigma[a]), qp + "/" + sigma[a]);
    }
  }
  return delta;
}

json dump_delta(const std::vector<int>& delta, const std::vector<std::string>& states, const std::vector<std::string>& sigma) {
  json d = json::object();
  for (std::size_t q = 0; q < states.size(); ++q)
    for (std::size_t a = 0; a < sigma.size(); ++a) d[states[q]][sigma[a]] = states[static_cast<std::size_t>(delta[q * sigma.size() + a])];
  return d;
}

}  // namespace

Dfa load_dfa(const json& j, const std::string& path) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "figure1") return halting_automaton();
    if (s == "figure2") return guarded_automaton();
    fail(path, "unknown automaton '" + s + "'");
  }
  if (j.value("type", "dfa") != "dfa") fail(path + "/type", "expected a dfa");
  Dfa d;
  d.states = strings(field(j, "states", path), path + "/states");
  d.alphabet = strings(field(j, "alphabet", path), path + "/alphabet");
  d.initial = index_of(d.states, str(field(j, "initial", path), path + "/initial"), path + "/initial");
  d.delta = load_delta(j, d.states, d.alphabet, path);
  d.final.assign(d.states.size(), false);
  for (const auto& f : strings(field(j, "final", path), path + "/final"))
    d.final[static_cast<std::size_t>(index_of(d.states, f, path + "/final"))] = true;
  try {
    d.validate();
  } catch (const SpecError& e) {
    fail(path, e.what());
  }
  return d;
}

MullerAutomaton load_muller(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "figure3") return invariance_automaton();
    fail(path, "unknown automaton '" + j.get<std::string>() + "'");
  }
  const std::string type = j.value("type", "muller");
  auto states = strings(field(j, "states", path), path + "/states");
  auto sigma = strings(field(j, "alphabet", path), path + "/alphabet");
  int initial = index_of(states, str(field(j, "initial", path), path + "/initial"), path + "/initial");
  auto delta = load_delta(j, states, sigma, path);
  MullerAutomaton m;
  try {
    if (type == "buchi") {
      BuchiAutomaton b;
      b.graph.states = states;
      b.graph.alphabet = sigma;
      b.graph.initial = {initial};
      b.graph.edges.resize(states.size());
      b.graph.final.assign(states.size(), false);
      for (std::size_t q = 0; q < states.size(); ++q)
        for (std::size_t a = 0; a < sigma.size(); ++a) b.graph.edges[q].push_back({static_cast<int>(a), delta[q * sigma.size() + a]});
      for (const auto& f : strings(field(j, "final", path), path + "/final"))
        b.graph.final[static_cast<std::size_t>(index_of(states, f, path + "/final"))] = true;
      return to_muller(b);
    }
    if (type != "muller") fail(path + "/type", "expected muller or buchi");
    m.states = states;
    m.alphabet = sigma;
    m.initial = initial;
    m.delta = delta;
    std::size_t k = 0;
    for (const auto& s : array(field(j, "family", path), path + "/family")) {
      std::vector<int> set;
      std::string sp = path + "/family/" + std::to_string(k++);
      for (const auto& q : strings(s, sp)) set.push_back(index_of(states, q, sp));
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      m.family.push_back(set);
    }
    std::sort(m.family.begin(), m.family.end());
    m.family.erase(std::unique(m.family.begin(), m.family.end()), m.family.end());
    m.validate();
  } catch (const SpecError& e) {
    std::string w = e.what();
    if (w.rfind("at ", 0) == 0) throw;
    fail(path, w);
  }
  return m;
}

json dump_dfa(const Dfa& d) {
  json fin = json::array();
  for (int q = 0; q < d.size(); ++q)
    if (d.final[static_cast<std::size_t>(q)]) fin.push_back(d.states[static_cast<std::size_t>(q)]);
  return {{"type", "dfa"}, {"states", d.states}, {"alphabet", d.alphabet}, {"initial", d.states[static_cast<std::size_t>(d.initial)]},
          {"final", fin}, {"delta", dump_delta(d.delta, d.states, d.alphabet)}};
}

json dump_muller(const MullerAutomaton& m) {
  json fam = json::array();
  for (const auto& s : m.family) {
    json set = json::array();
    for (int q : s) set.push_back(m.states[static_cast<std::size_t>(q)]);
    fam.push_back(set);
  }
  return {{"type", "muller"}, {"states", m.states}, {"alphabet", m.alphabet}, {"initial", m.states[static_cast<std::size_t>(m.initial)]},
          {"family", fam}, {"delta", dump_delta(m.delta, m.states, m.alphabet)}};
}

json dump_graph(const LabeledGraph& g) {
  json nodes = json::array();
  for (int v = 0; v < g.size(); ++v) {
    auto i = static_cast<std::size_t>(v);
    nodes.push_back({{"name", i < g.names.size() ? g.names[i] : std::to_string(v)},
                     {"label", g.alphabet[static_cast<std::size_t>(g.label[i])]},
                     {"succ", g.succ[i]}});
  }
  return {{"alphabet", g.alphabet}, {"initial", g.initial}, {"nodes", nodes}};
}

json dump_verdict(const Verdict& v, const std::vector<std::string>& letters) {
  json out = {{"outcome", to_string(v.outcome)}, {"method", v.method}};
  auto names = [&](const Letters& w) {
    json a = json::array();
    for (int x : w) a.push_back(letters[static_cast<std::size_t>(x)]);
    return a;
  };
  if (v.witness) {
    out["witness"] = names(*v.witness);
    out["witness_text"] = letters_to_string(letters, *v.witness);
  }
  if (v.lasso) out["lasso"] = {{"stem", names(v.lasso->stem)}, {"cycle", names(v.lasso->cycle)}};
  if (v.points) out["points"] = to_string(*v.points);
  if (v.resolution >= 0) out["resolution"] = v.resolution;
  if (!v.note.empty()) out["note"] = v.note;
  out["budget_used"] = {{"max_len", v.used.max_len}, {"max_iter", v.used.max_iter}, {"max_depth", v.used.max_depth}};
  return out;
}

}  // namespace symdyn::io

#include "symdyn/checker.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/errors.hpp"
#include "symdyn/kernels.hpp"

namespace symdyn {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

// ---- observation systems

ObservationSystem::ObservationSystem(SystemPtr f, Partition p, std::vector<std::string> states, std::vector<int> delta)
    : EffectiveSystem(f->space()->with_cell("q", Alphabet(states))),
      f_(std::move(f)),
      p_(std::move(p)),
      nq_(static_cast<int>(states.size())),
      delta_(std::move(delta)),
      q_track_(f_->space()->track_count()) {
  require_same_space(f_->space(), p_.space(), "observe");
  if (delta_.size() != states.size() * p_.size()) throw SpecError("observer transition table is not total over the partition");
  for (int t : delta_)
    if (t < 0 || t >= nq_) throw SpecError("observer transition to an unknown state");
  ClopenSet all = ClopenSet::empty(f_->space());
  for (const auto& c : p_.cells()) all = unite(all, c.set);
  rest_ = complement(all);
}

ClopenSet ObservationSystem::lift(const ClopenSet& v) const {
  std::vector<std::size_t> map(q_track_);
  for (std::size_t t = 0; t < q_track_; ++t) map[t] = t;
  return extrude(v, space(), map);
}

ClopenSet ObservationSystem::lift(const ClopenSet& v, int q) const {
  return intersect(lift(v), ClopenSet::cell(space(), q_track_, static_cast<Symbol>(q)));
}

ClopenSet ObservationSystem::project_base(const ClopenSet& c) const {
  std::vector<std::size_t> keep(q_track_);
  for (std::size_t t = 0; t < q_track_; ++t) keep[t] = t;
  return project(c, f_->space(), keep);
}

bool ObservationSystem::meets(const ClopenSet& c) const {
  require_same_space(space(), c.space(), "meets");
  if (c.is_empty()) return false;
  for (int q = 0; q < nq_; ++q)
    if (f_->meets(section(c, q_track_, static_cast<Symbol>(q), f_->space()))) return true;
  return false;
}

ClopenSet ObservationSystem::preimage(const ClopenSet& c) const {
  require_same_space(space(), c.space(), "preimage");
  if (c.is_empty() || c.is_whole()) return c;
  std::vector<ClopenSet> pre;
  for (int q = 0; q < nq_; ++q) pre.push_back(f_->preimage(section(c, q_track_, static_cast<Symbol>(q), f_->space())));
  ClopenSet acc = ClopenSet::empty(space());
  const int k = static_cast<int>(p_.size());
  for (int q = 0; q < nq_; ++q) {
    ClopenSet d = intersect(rest_, pre[static_cast<std::size_t>(q)]);
    for (int a = 0; a < k; ++a)
      d = unite(d, intersect(p_.cells()[static_cast<std::size_t>(a)].set, pre[static_cast<std::size_t>(delta_[static_cast<std::size_t>(q * k + a)])]));
    acc = unite(acc, lift(d, q));
  }
  return acc;
}

std::vector<bool> ObservationSystem::relevant_tracks(const ClopenSet& c) const {
  auto mask = f_->relevant_tracks(project_base(c));
  for (const auto& cell : p_.cells()) {
    auto m = f_->relevant_tracks(cell.set);
    for (std::size_t t = 0; t < mask.size(); ++t) mask[t] = mask[t] || m[t];
  }
  mask.push_back(true);
  return mask;
}

std::optional<Window> ObservationSystem::step_window(const Window& w) const {
  if (!w.iv[q_track_].contains(0)) return std::nullopt;
  Layout lay(*space(), w.iv);
  auto q = static_cast<int>(static_cast<Symbol>(w.word[lay.offset(q_track_)]));
  Window base{Intervals(w.iv.begin(), w.iv.begin() + static_cast<std::ptrdiff_t>(q_track_)), w.word.substr(0, lay.offset(q_track_))};
  auto next = f_->step_window(base);
  if (!next) return std::nullopt;
  int nq = q;
  for (std::size_t a = 0; a < p_.size(); ++a) {
    const auto& cs = p_.cells()[a].set;
    for (std::size_t t = 0; t < q_track_; ++t)
      if (!base.iv[t].contains(cs.intervals()[t])) return std::nullopt;
    if (cs.contains(base)) nq = delta_[static_cast<std::size_t>(q) * p_.size() + a];
  }
  next->iv.push_back({0, 0});
  next->word.push_back(static_cast<char>(nq));
  return next;
}

std::shared_ptr<const ObservationSystem> observe(SystemPtr f, const Partition& p, const Dfa& d) {
  if (d.alphabet != p.names()) throw QueryError("automaton alphabet does not match the partition");
  return std::make_shared<ObservationSystem>(std::move(f), p, d.states, d.delta);
}

std::shared_ptr<const ObservationSystem> observe(SystemPtr f, const Partition& p, const MullerAutomaton& m) {
  if (m.alphabet != p.names()) throw QueryError("automaton alphabet does not match the partition");
  return std::make_shared<ObservationSystem>(std::move(f), p, m.states, m.delta);
}

// ---- finite-word checks

namespace {

void check_alphabet(const std::vector<std::string>& a, const Partition& p) {
  if (a != p.names()) throw QueryError("automaton alphabet does not match the partition cell names");
}

std::string key_of(const ClopenSet& c, const std::vector<bool>& q) {
  std::string k;
  for (bool b : q) k.push_back(b ? '1' : '0');
  k.push_back('|');
  for (const auto& iv : c.intervals()) k += std::to_string(iv.lo) + "," + std::to_string(iv.hi) + ";";
  for (const auto& w : c.words()) {
    k += w;
    k.push_back('\xFE');
  }
  return k;
}

Verdict holds_word(const EffectiveSystem& f, const Partition& p, Letters w, std::string method) {
  Verdict v;
  v.outcome = Outcome::Holds;
  v.method = std::move(method);
  v.points = word_set(f, p, w);
  v.witness = std::move(w);
  return v;
}

Verdict from_graph(const EffectiveSystem& f, const Partition& p, const LabeledGraph& g, const Dfa& d, std::string method, int res) {
  auto w = emptiness_witness(product_run(g, d));
  Verdict v;
  if (w) v = holds_word(f, p, std::move(*w), method);
  else {
    v.outcome = Outcome::Fails;
    v.method = std::move(method);
  }
  v.resolution = res;
  return v;
}

}  // namespace

Verdict exact_check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d) {
  check_alphabet(d.alphabet, p);
  d.validate();
  auto g = window_graph(f, p);
  auto v = from_graph(f, p, g, d, "window-graph", p.resolution());
  v.note = "exact: effectively regular subshift";
  return v;
}

Verdict semi_check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d, const Budget& b) {
  check_alphabet(d.alphabet, p);
  d.validate();
  Verdict v;
  const int k = static_cast<int>(p.size());
  const int nq = d.size();
  auto whole = ClopenSet::whole(f.space());
  if (!f.meets(whole)) {
    v.outcome = Outcome::Fails;
    v.method = "empty-space";
    return v;
  }
  if (d.final[static_cast<std::size_t>(d.initial)]) return holds_word(f, p, {}, "backward-search");

  // backward search: (points reading w, states from which w is accepted)
  struct Node {
    Letters w;
    ClopenSet set;
    std::vector<bool> q;
  };
  std::vector<Node> layer{{{}, whole, d.final}};
  std::set<std::string> seen{key_of(whole, d.final)};
  bool closed = false;
  for (int len = 1; len <= b.max_len; ++len) {
    v.used.max_len = len;
    std::vector<std::vector<Node>> next(layer.size());
    for_each_index(layer.size(), default_exec(), [&](std::size_t i) {
      const auto& n = layer[i];
      ClopenSet pre = len == 1 ? n.set : f.preimage(n.set);
      for (int a = 0; a < k; ++a) {
        std::vector<bool> q(static_cast<std::size_t>(nq));
        bool any = false;
        for (int s = 0; s < nq; ++s) any |= (q[static_cast<std::size_t>(s)] = n.q[static_cast<std::size_t>(d.step(s, a))]);
        if (!any) continue;
        auto s = intersect(p.cells()[static_cast<std::size_t>(a)].set, pre);
        if (s.is_empty() || !f.meets(s)) continue;
        Letters w{a};
        w.insert(w.end(), n.w.begin(), n.w.end());
        next[i].push_back({std::move(w), std::move(s), std::move(q)});
      }
    });
    std::vector<Node> cand;
    for (auto& x : next)
      for (auto& n : x) cand.push_back(std::move(n));
    std::sort(cand.begin(), cand.end(), [](const Node& a, const Node& b) { return a.w < b.w; });
    layer.clear();
    for (auto& n : cand) {
      if (n.q[static_cast<std::size_t>(d.initial)]) {
        auto r = holds_word(f, p, n.w, "backward-search");
        r.used = v.used;
        return r;
      }
      if (seen.insert(key_of(n.set, n.q)).second) layer.push_back(std::move(n));
    }
    if (layer.empty()) {
      closed = true;
      break;
    }
  }
  if (closed) {
    v.outcome = Outcome::Fails;
    v.method = "backward-search";
    v.note = "search space closed without an accepted word";
    return v;
  }
  // sound refutations from ball graphs
  const int r0 = p.resolution();
  for (int n = r0; n <= std::max(r0, b.max_depth); ++n) {
    v.used.max_depth = n;
    auto ia = induced_automaton(f, p, n);
    auto w = emptiness_witness(product_run(ia.graph, d));
    if (!w) {
      v.outcome = Outcome::Fails;
      v.method = "ball-graph";
      v.resolution = ia.resolution;
      v.note = "no pseudo-orbit reads an accepted word";
      return v;
    }
    if (ia.exact) {
      auto r = holds_word(f, p, std::move(*w), "ball-graph");
      r.resolution = ia.resolution;
      r.used = v.used;
      r.note = "exact at shadowing modulus";
      return r;
    }
  }
  v.outcome = Outcome::Unknown;
  v.method = "budget";
  v.note = "no witness up to max_len and no refutation up to max_depth";
  return v;
}

Verdict check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d, const Budget& b) {
  check_alphabet(d.alphabet, p);
  p.check_covers(f);
  if (f.caps().regular) return exact_check_regular(f, p, d);
  if (const auto& mod = f.caps().shadowing_modulus) {
    int n = mod(p.resolution());
    auto ia = induced_automaton(f, p, n);
    auto v = from_graph(f, p, ia.graph, d, "ball-graph", ia.resolution);
    v.note = "exact at shadowing modulus";
    return v;
  }
  return semi_check_regular(f, p, d, b);
}

// ---- omega checks

namespace {

Verdict from_lasso(const std::optional<Lasso>& l, std::string method, int res) {
  Verdict v;
  v.method = std::move(method);
  v.resolution = res;
  if (l) {
    v.outcome = Outcome::Holds;
    v.lasso = *l;
  } else {
    v.outcome = Outcome::Fails;
  }
  return v;
}

}  // namespace

Verdict exact_check_omega(const EffectiveSystem& f, const Partition& p, const MullerAutomaton& m) {
  check_alphabet(m.alphabet, p);
  m.validate();
  if (f.caps().regular) {
    auto g = window_graph(f, p);
    auto v = from_lasso(omega_emptiness_witness(m, g), "window-graph", p.resolution());
    v.note = "exact: effectively regular subshift";
    return v;
  }
  if (const auto& mod = f.caps().shadowing_modulus) {
    auto ia = induced_automaton(f, p, mod(p.resolution()));
    auto v = from_lasso(omega_emptiness_witness(m, ia.graph), "ball-graph", ia.resolution);
    v.note = "exact at shadowing modulus";
    return v;
  }
  throw CapabilityError("exact omega check needs an effectively regular system or a shadowing modulus");
}

Verdict basin_check_omega(SystemPtr f, const Partition& p, const MullerAutomaton& m, const Budget& b) {
  check_alphabet(m.alphabet, p);
  m.validate();
  auto g = observe(f, p, m);
  Verdict v;
  v.method = "basins";
  std::vector<ClopenSet> io;
  for (int q = 0; q < m.size(); ++q) {
    auto xq = ClopenSet::cell(g->space(), g->state_track(), static_cast<Symbol>(q));
    auto r = infinitely_often(*g, xq, b);
    if (!r) {
      v.outcome = Outcome::Unknown;
      v.note = "basin of state " + m.states[static_cast<std::size_t>(q)] + " did not stabilise within max_iter";
      v.used.max_iter = b.max_iter;
      return v;
    }
    io.push_back(std::move(*r));
  }
  auto start = ClopenSet::cell(g->space(), g->state_track(), static_cast<Symbol>(m.initial));
  for (const auto& S : m.family) {
    ClopenSet z = start;
    for (int q = 0; q < m.size(); ++q) {
      bool in = std::binary_search(S.begin(), S.end(), q);
      z = intersect(z, in ? io[static_cast<std::size_t>(q)] : complement(io[static_cast<std::size_t>(q)]));
    }
    if (g->meets(z)) {
      v.outcome = Outcome::Holds;
      v.points = g->project_base(z);
      v.note = "points whose run has an accepting infinity set";
      return v;
    }
  }
  v.outcome = Outcome::Fails;
  v.note = "all basins stabilised; no accepting infinity set is realised";
  return v;
}

Verdict check_omega(SystemPtr f, const Partition& p, const MullerAutomaton& m, const Budget& b) {
  check_alphabet(m.alphabet, p);
  p.check_covers(*f);
  if (f->caps().regular || f->caps().shadowing_modulus) return exact_check_omega(*f, p, m);
  auto v = basin_check_omega(f, p, m, b);
  if (v.outcome != Outcome::Unknown) return v;
  const int r0 = p.resolution();
  for (int n = r0; n <= std::max(r0, b.max_depth); ++n) {
    auto ia = induced_automaton(*f, p, n);
    if (!omega_emptiness_witness(m, ia.graph)) {
      Verdict r;
      r.outcome = Outcome::Fails;
      r.method = "ball-graph";
      r.resolution = ia.resolution;
      r.note = "no pseudo-orbit has an accepting run";
      r.used.max_depth = n;
      return r;
    }
    v.used.max_depth = n;
  }
  return v;
}

// ---- basins

Basin basin(const EffectiveSystem& f, const ClopenSet& v, const Budget& b) {
  Basin r;
  ClopenSet cur = v;
  r.m = 1;
  for (int it = 1; it <= b.max_iter; ++it) {
    r.iterations = it;
    auto next = unite(v, f.preimage(cur));
    if (!f.meets(difference(next, cur))) {
      r.set = std::move(cur);
      return r;
    }
    cur = std::move(next);
    ++r.m;
  }
  return r;
}

std::optional<ClopenSet> infinitely_often(const EffectiveSystem& f, const ClopenSet& v, const Budget& b) {
  auto b1 = basin(f, v, b);
  if (!b1.set) return std::nullopt;
  auto b2 = basin(f, complement(*b1.set), b);
  if (!b2.set) return std::nullopt;
  return complement(*b2.set);
}

// ---- pseudo-orbits and shadowing

ClopenSet dilate(const EffectiveSystem& f, const ClopenSet& s, const Intervals& iv) {
  if (s.is_empty()) return s;
  const auto& sp = *f.space();
  Intervals h = iv;
  for (std::size_t t = 0; t < h.size(); ++t) h[t] = Interval::hull(h[t], s.intervals()[t]);
  Layout big(sp, h);
  std::map<Word, std::vector<Word>> groups;
  for (auto& w : s.words_at(h)) {
    Word key;
    for (std::size_t t = 0; t < h.size(); ++t)
      if (!iv[t].empty()) key.append(w, big.at(t, iv[t].lo), static_cast<std::size_t>(iv[t].length()));
    groups[key].push_back(std::move(w));
  }
  std::vector<Word> keep;
  for (auto& [key, ws] : groups)
    if (f.meets(ClopenSet::from_words(f.space(), h, std::move(ws)))) keep.push_back(key);
  return ClopenSet::from_words(f.space(), iv, std::move(keep));
}

bool pseudo_reach(const EffectiveSystem& f, const ClopenSet& u, const ClopenSet& v, int n) {
  require_same_space(f.space(), u.space(), "pseudo_reach");
  require_same_space(f.space(), v.space(), "pseudo_reach");
  auto iv = query_resolution(f, n, {u, v});
  ClopenSet r = v;
  ClopenSet d = dilate(f, r, iv);
  while (true) {
    r = unite(v, f.preimage(d));
    auto d2 = dilate(f, r, iv);
    if (d2 == d) break;
    d = std::move(d2);
  }
  return f.meets(intersect(u, r));
}

ReachDecision decide_reach_shadowing(const EffectiveSystem& f, const ClopenSet& u, const ClopenSet& v) {
  const auto& mod = f.caps().shadowing_modulus;
  if (!mod) throw CapabilityError("decide_reach_shadowing needs a shadowing modulus");
  const int r0 = std::max(u.resolution(), v.resolution());
  const int target = mod(r0);
  ReachDecision d;
  ClopenSet pre = v;
  for (int l = 0;; ++l) {
    d.rounds = l + 1;
    if (f.meets(intersect(u, pre))) {
      d.reachable = true;
      d.steps = l;
      d.method = "witness";
      return d;
    }
    const int n = r0 + l;
    d.resolution = n;
    if (!pseudo_reach(f, u, v, n)) {
      d.reachable = false;
      d.method = "pseudo-orbit refutation";
      return d;
    }
    if (n >= target) {
      d.reachable = true;
      d.method = "shadowing";
      return d;
    }
    pre = f.preimage(pre);
  }
}

// ---- equicontinuity

Equicontinuity equicontinuity_modulus(const EffectiveSystem& f, int eps, const Budget& b) {
  const auto& sp = f.space();
  Equicontinuity r;
  int R = eps;
  Intervals iv = sp->resolution(R);
  // labels of the X-balls at resolution R
  std::map<Word, int> label;
  for (auto& w : all_words(*sp, iv))
    if (f.meets(ClopenSet::from_words(sp, iv, {w}))) label.emplace(w, static_cast<int>(label.size()));
  int atoms = static_cast<int>(label.size());
  r.resolutions.push_back(R);
  r.atoms.push_back(atoms);
  auto project_word = [&](const Word& w, const Intervals& from, const Intervals& to) {
    Layout lf(*sp, from);
    Word k;
    for (std::size_t t = 0; t < to.size(); ++t)
      if (!to[t].empty()) k.append(w, lf.at(t, to[t].lo), static_cast<std::size_t>(to[t].length()));
    return k;
  };
  for (int round = 1; round <= b.max_iter; ++round) {
    r.rounds = round;
    // classes of B_n as clopen sets; class `atoms` collects balls missing X
    std::vector<std::vector<Word>> cls(static_cast<std::size_t>(atoms) + 1);
    for (auto& w : all_words(*sp, iv)) {
      auto it = label.find(w);
      cls[it == label.end() ? static_cast<std::size_t>(atoms) : static_cast<std::size_t>(it->second)].push_back(w);
    }
    std::vector<ClopenSet> pre;
    int R2 = R;
    for (auto& c : cls) {
      pre.push_back(f.preimage(ClopenSet::from_words(sp, iv, std::move(c))));
      R2 = std::max(R2, pre.back().resolution());
    }
    Intervals iv2 = sp->resolution(R2);
    std::vector<std::vector<Word>> pre_words;
    for (const auto& p : pre) pre_words.push_back(p.words_at(iv2));
    std::map<std::pair<int, int>, int> fresh;
    std::map<Word, int> label2;
    for (auto& w : all_words(*sp, iv2)) {
      auto old = label.find(project_word(w, iv2, iv));
      if (old == label.end()) continue;
      if (!f.meets(ClopenSet::from_words(sp, iv2, {w}))) continue;
      int c = -1;
      for (std::size_t j = 0; j < pre_words.size(); ++j)
        if (std::binary_search(pre_words[j].begin(), pre_words[j].end(), w)) c = static_cast<int>(j);
      auto [it, ins] = fresh.emplace(std::make_pair(old->second, c), static_cast<int>(fresh.size()));
      label2.emplace(w, it->second);
    }
    const int atoms2 = static_cast<int>(fresh.size());
    if (atoms2 == atoms) {
      // B_{n+1} = B_n: express its atoms canonically
      std::vector<std::vector<Word>> groups(static_cast<std::size_t>(atoms));
      for (const auto& [w, l] : label) groups[static_cast<std::size_t>(l)].push_back(w);
      int delta = 0;
      for (auto& g : groups) delta = std::max(delta, ClopenSet::from_words(sp, iv, std::move(g)).resolution());
      r.delta = std::max(delta, 0);
      return r;
    }
    R = R2;
    iv = iv2;
    label = std::move(label2);
    atoms = atoms2;
    r.resolutions.push_back(R);
    r.atoms.push_back(atoms);
  }
  return r;
}

}  // namespace symdyn

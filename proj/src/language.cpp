#include "symdyn/language.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/errors.hpp"

namespace symdyn {

Partition::Partition(SpacePtr space, std::vector<Cell> cells) : space_(std::move(space)), cells_(std::move(cells)) {
  std::set<std::string> names;
  for (const auto& c : cells_) {
    if (!names.insert(c.name).second) throw QueryError("duplicate cell name '" + c.name + "'");
    require_same_space(space_, c.set.space(), "partition cell");
  }
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j = i + 1; j < cells_.size(); ++j)
      if (!intersect(cells_[i].set, cells_[j].set).is_empty())
        throw QueryError("cells '" + cells_[i].name + "' and '" + cells_[j].name + "' overlap");
}

Partition Partition::cylinders(SpacePtr space, int n) {
  std::vector<Cell> cells;
  const bool single = space->track_count() == 1;
  for (auto& b : balls(space, n)) {
    std::string name = single && !b.is_whole()
                           ? word_to_string(space->track(0).alphabet, b.words().front(),
                                            space->track(0).alphabet.single_codepoint() ? "" : " ")
                           : to_string(b);
    cells.push_back({name, std::move(b)});
  }
  return Partition(std::move(space), std::move(cells));
}

Partition Partition::with_rest(SpacePtr space, std::vector<Cell> cells, const std::string& rest_name) {
  ClopenSet all = ClopenSet::empty(space);
  for (const auto& c : cells) all = unite(all, c.set);
  cells.push_back({rest_name, complement(all)});
  return Partition(std::move(space), std::move(cells));
}

std::vector<std::string> Partition::names() const {
  std::vector<std::string> n;
  for (const auto& c : cells_) n.push_back(c.name);
  return n;
}

int Partition::index(const std::string& name) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].name == name) return static_cast<int>(i);
  throw QueryError("unknown cell '" + name + "'");
}

Letters Partition::parse(const std::vector<std::string>& names) const {
  Letters w;
  for (const auto& n : names) w.push_back(index(n));
  return w;
}

int Partition::resolution() const {
  int r = 0;
  for (const auto& c : cells_) r = std::max(r, c.set.resolution());
  return r;
}

void Partition::check_covers(const EffectiveSystem& f) const {
  ClopenSet all = ClopenSet::empty(space_);
  for (const auto& c : cells_) all = unite(all, c.set);
  if (f.meets(complement(all))) throw QueryError("partition does not cover the phase space");
}

namespace {

void check_letters(const Partition& p, const Letters& w) {
  for (int a : w)
    if (a < 0 || a >= static_cast<int>(p.size())) throw QueryError("letter outside the partition");
}

}  // namespace

ClopenSet word_set(const EffectiveSystem& f, const Partition& p, const Letters& w) {
  require_same_space(f.space(), p.space(), "word_set");
  check_letters(p, w);
  ClopenSet acc = ClopenSet::whole(f.space());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it != w.rbegin()) acc = f.preimage(acc);
    acc = intersect(p.cells()[static_cast<std::size_t>(*it)].set, acc);
    if (acc.is_empty()) break;
  }
  return acc;
}

Membership word_in_language(const EffectiveSystem& f, const Partition& p, const Letters& w) {
  auto s = word_set(f, p, w);
  bool m = f.meets(s);
  return {m, std::move(s)};
}

std::vector<Letters> enumerate_language(const EffectiveSystem& f, const Partition& p, int max_len, Exec e) {
  require_same_space(f.space(), p.space(), "enumerate_language");
  std::vector<Letters> out;
  if (max_len < 0) return out;
  auto whole = ClopenSet::whole(f.space());
  if (!f.meets(whole)) return out;
  out.emplace_back();
  // the language is closed under dropping the first letter, so layers grow by prepending
  std::vector<std::pair<Letters, ClopenSet>> layer{{Letters{}, whole}};
  const std::size_t k = p.size();
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::pair<Letters, ClopenSet>>> next(layer.size());
    for_each_index(layer.size(), e, [&](std::size_t i) {
      const auto& [w, set] = layer[i];
      ClopenSet pre = len == 1 ? set : f.preimage(set);
      for (std::size_t a = 0; a < k; ++a) {
        auto s = intersect(p.cells()[a].set, pre);
        if (s.is_empty() || !f.meets(s)) continue;
        Letters aw;
        aw.push_back(static_cast<int>(a));
        aw.insert(aw.end(), w.begin(), w.end());
        next[i].emplace_back(std::move(aw), std::move(s));
      }
    });
    layer.clear();
    for (auto& v : next)
      for (auto& x : v) layer.push_back(std::move(x));
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& x : layer) out.push_back(x.first);
  }
  return out;
}

namespace {

struct Nodes {
  Intervals iv;
  std::vector<ClopenSet> balls;
  std::vector<int> label;
  std::map<Word, int> id;  // ball word -> node
  std::vector<std::string> warnings;
};

Nodes ball_nodes(const EffectiveSystem& f, const Partition& p, int n) {
  require_same_space(f.space(), p.space(), "induced_automaton");
  Nodes nd;
  std::vector<ClopenSet> sets;
  for (const auto& c : p.cells()) sets.push_back(c.set);
  nd.iv = query_resolution(f, std::max(n, p.resolution()), sets);
  std::vector<std::vector<Word>> cell_words;
  for (const auto& c : p.cells()) {
    if (!f.meets(c.set)) nd.warnings.push_back("cell '" + c.name + "' does not meet the phase space and is dropped");
    cell_words.push_back(c.set.words_at(nd.iv));
  }
  for (auto& w : all_words(*f.space(), nd.iv)) {
    auto b = ClopenSet::from_words(f.space(), nd.iv, {w});
    if (!f.meets(b)) continue;
    int lab = -1;
    for (std::size_t c = 0; c < cell_words.size(); ++c)
      if (std::binary_search(cell_words[c].begin(), cell_words[c].end(), w)) lab = static_cast<int>(c);
    if (lab < 0) throw QueryError("partition does not cover the phase space (ball " + to_string(b) + ")");
    nd.id.emplace(w, static_cast<int>(nd.balls.size()));
    nd.balls.push_back(std::move(b));
    nd.label.push_back(lab);
  }
  return nd;
}

InducedAutomaton finish(const EffectiveSystem& f, const Partition& p, Nodes nd, std::vector<std::vector<int>> succ) {
  InducedAutomaton ia;
  ia.resolution = f.space()->resolution_of(nd.iv);
  ia.graph.alphabet = p.names();
  ia.graph.label = nd.label;
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  ia.graph.succ = std::move(succ);
  for (int v = 0; v < static_cast<int>(nd.balls.size()); ++v) {
    ia.graph.initial.push_back(v);
    ia.graph.names.push_back(to_string(nd.balls[static_cast<std::size_t>(v)]));
  }
  const auto& mod = f.caps().shadowing_modulus;
  ia.exact = mod && ia.resolution >= mod(p.resolution());
  ia.balls = std::move(nd.balls);
  ia.warnings = std::move(nd.warnings);
  return ia;
}

}  // namespace

InducedAutomaton induced_automaton(const EffectiveSystem& f, const Partition& p, int n, Exec e) {
  auto nd = ball_nodes(f, p, n);
  const auto& sp = *f.space();
  const std::size_t N = nd.balls.size();
  std::vector<std::vector<int>> pred(N);  // pred[j] = sources with an edge into j
  for_each_index(N, e, [&](std::size_t j) {
    auto pre = f.preimage(nd.balls[j]);
    if (pre.is_empty()) return;
    Intervals h = nd.iv;
    for (std::size_t t = 0; t < h.size(); ++t) h[t] = Interval::hull(h[t], pre.intervals()[t]);
    Layout big(sp, h);
    std::map<Word, std::vector<Word>> groups;
    for (auto& w : pre.words_at(h)) {
      Word key;
      for (std::size_t t = 0; t < h.size(); ++t)
        if (!nd.iv[t].empty()) key.append(w, big.at(t, nd.iv[t].lo), static_cast<std::size_t>(nd.iv[t].length()));
      groups[key].push_back(std::move(w));
    }
    for (auto& [key, ws] : groups) {
      auto it = nd.id.find(key);
      if (it == nd.id.end()) continue;
      if (f.meets(ClopenSet::from_words(f.space(), h, std::move(ws)))) pred[j].push_back(it->second);
    }
  });
  std::vector<std::vector<int>> succ(N);
  for (std::size_t j = 0; j < N; ++j)
    for (int i : pred[j]) succ[static_cast<std::size_t>(i)].push_back(static_cast<int>(j));
  return finish(f, p, std::move(nd), std::move(succ));
}

InducedAutomaton induced_automaton_reference(const EffectiveSystem& f, const Partition& p, int n) {
  auto nd = ball_nodes(f, p, n);
  const std::size_t N = nd.balls.size();
  std::vector<std::vector<int>> succ(N);
  for (std::size_t j = 0; j < N; ++j) {
    auto pre = f.preimage(nd.balls[j]);
    for (std::size_t i = 0; i < N; ++i)
      if (f.meets(intersect(nd.balls[i], pre))) succ[i].push_back(static_cast<int>(j));
  }
  return finish(f, p, std::move(nd), std::move(succ));
}

LabeledGraph window_graph(const EffectiveSystem& f, const Partition& p) {
  const auto& g = f.caps().regular;
  if (!g) throw CapabilityError("window graph needs an effectively regular system");
  require_same_space(f.space(), p.space(), "window_graph");
  const auto& sp = *f.space();
  const Intervals iv = sp.resolution(p.resolution());
  const std::size_t W = static_cast<std::size_t>(iv[0].length());
  std::vector<std::vector<Word>> cell_words;
  for (const auto& c : p.cells()) cell_words.push_back(c.set.words_at(iv));
  std::vector<std::vector<LabeledEdge>> out(static_cast<std::size_t>(g->states));
  for (const auto& e : g->edges) out[static_cast<std::size_t>(e.from)].push_back(e);
  // (end state, window) pairs: windows that label a path ending at the state
  std::set<std::pair<int, Word>> layer;
  for (int s = 0; s < g->states; ++s) layer.emplace(s, Word());
  for (std::size_t k = 0; k < W; ++k) {
    std::set<std::pair<int, Word>> next;
    for (const auto& [s, u] : layer)
      for (const auto& e : out[static_cast<std::size_t>(s)]) next.emplace(e.to, u + static_cast<char>(e.label));
    layer = std::move(next);
  }
  LabeledGraph lg;
  lg.alphabet = p.names();
  std::map<std::pair<int, Word>, int> id;
  for (const auto& node : layer) {
    int lab = -1;
    for (std::size_t c = 0; c < cell_words.size(); ++c)
      if (std::binary_search(cell_words[c].begin(), cell_words[c].end(), node.second)) lab = static_cast<int>(c);
    if (lab < 0) throw QueryError("partition does not cover the subshift");
    id.emplace(node, lg.size());
    lg.label.push_back(lab);
    lg.names.push_back(std::to_string(node.first) + ":" + word_to_string(sp.track(0).alphabet, node.second));
  }
  lg.succ.resize(static_cast<std::size_t>(lg.size()));
  for (const auto& [node, v] : id) {
    const auto& [s, u] = node;
    for (const auto& e : out[static_cast<std::size_t>(s)]) {
      Word nu = W == 0 ? u : u.substr(1) + static_cast<char>(e.label);
      auto it = id.find({e.to, nu});
      if (it != id.end()) lg.succ[static_cast<std::size_t>(v)].push_back(it->second);
    }
    auto& sv = lg.succ[static_cast<std::size_t>(v)];
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
    lg.initial.push_back(v);
  }
  std::sort(lg.initial.begin(), lg.initial.end());
  return lg;
}

}  // namespace symdyn

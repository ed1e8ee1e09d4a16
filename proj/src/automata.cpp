#include "symdyn/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "symdyn/errors.hpp"

namespace symdyn {

int Dfa::run(int q, const Letters& w) const {
  for (int a : w) q = step(q, a);
  return q;
}

int Dfa::symbol(const std::string& name) const {
  for (int a = 0; a < sigma(); ++a)
    if (alphabet[static_cast<std::size_t>(a)] == name) return a;
  throw QueryError("symbol '" + name + "' not in the automaton alphabet");
}

void Dfa::validate() const {
  if (states.empty()) throw SpecError("DFA has no states");
  if (delta.size() != states.size() * alphabet.size()) throw SpecError("DFA transition table is not total");
  if (final.size() != states.size()) throw SpecError("DFA final flags do not match the states");
  if (initial < 0 || initial >= size()) throw SpecError("DFA initial state out of range");
  for (int t : delta)
    if (t < 0 || t >= size()) throw SpecError("DFA transition to an unknown state");
}

bool Nfa::accepts(const Letters& w) const {
  std::vector<bool> cur(states.size(), false);
  for (int i : initial) cur[static_cast<std::size_t>(i)] = true;
  for (int a : w) {
    std::vector<bool> nxt(states.size(), false);
    for (std::size_t s = 0; s < cur.size(); ++s)
      if (cur[s])
        for (const auto& e : edges[s])
          if (e.symbol == a) nxt[static_cast<std::size_t>(e.to)] = true;
    cur = std::move(nxt);
  }
  for (std::size_t s = 0; s < cur.size(); ++s)
    if (cur[s] && final[s]) return true;
  return false;
}

void Nfa::validate() const {
  if (edges.size() != states.size() || final.size() != states.size()) throw SpecError("NFA tables do not match the states");
  for (const auto& es : edges)
    for (const auto& e : es)
      if (e.to < 0 || e.to >= size() || e.symbol < 0 || e.symbol >= sigma()) throw SpecError("NFA edge out of range");
  for (int i : initial)
    if (i < 0 || i >= size()) throw SpecError("NFA initial state out of range");
}

std::vector<int> MullerAutomaton::inf_set(const Letters& stem, const Letters& cycle) const {
  if (cycle.empty()) throw QueryError("empty cycle");
  int q = initial;
  for (int a : stem) q = step(q, a);
  std::map<int, std::size_t> first;
  std::vector<std::vector<int>> visited;
  while (!first.count(q)) {
    first[q] = visited.size();
    std::vector<int> v;
    for (int a : cycle) {
      q = step(q, a);
      v.push_back(q);
    }
    visited.push_back(std::move(v));
  }
  std::set<int> inf;
  for (std::size_t r = first[q]; r < visited.size(); ++r) inf.insert(visited[r].begin(), visited[r].end());
  return {inf.begin(), inf.end()};
}

bool MullerAutomaton::accepts(const Letters& stem, const Letters& cycle) const {
  auto s = inf_set(stem, cycle);
  return std::find(family.begin(), family.end(), s) != family.end();
}

void MullerAutomaton::validate() const {
  if (states.empty()) throw SpecError("Muller automaton has no states");
  if (delta.size() != states.size() * alphabet.size()) throw SpecError("Muller transition table is not total");
  if (initial < 0 || initial >= size()) throw SpecError("Muller initial state out of range");
  for (int t : delta)
    if (t < 0 || t >= size()) throw SpecError("Muller transition to an unknown state");
  for (const auto& f : family) {
    if (f.empty()) throw SpecError("empty set in Muller family");
    if (!std::is_sorted(f.begin(), f.end())) throw SpecError("Muller family sets must be sorted");
    for (int q : f)
      if (q < 0 || q >= size()) throw SpecError("Muller family references an unknown state");
  }
}

MullerAutomaton to_muller(const BuchiAutomaton& b) {
  const auto& n = b.graph;
  n.validate();
  if (n.initial.size() != 1) throw CapabilityError("only deterministic Buchi automata convert to Muller form");
  MullerAutomaton m;
  m.states = n.states;
  m.alphabet = n.alphabet;
  m.initial = n.initial[0];
  m.delta.assign(n.states.size() * n.alphabet.size(), -1);
  for (std::size_t s = 0; s < n.edges.size(); ++s) {
    for (const auto& e : n.edges[s]) {
      auto& slot = m.delta[s * n.alphabet.size() + static_cast<std::size_t>(e.symbol)];
      if (slot != -1 && slot != e.to) throw CapabilityError("only deterministic Buchi automata convert to Muller form");
      slot = e.to;
    }
  }
  for (int t : m.delta)
    if (t == -1) throw CapabilityError("Buchi automaton must be total to convert to Muller form");
  if (n.states.size() > 16) throw CapabilityError("Buchi to Muller conversion limited to 16 states");
  const unsigned N = static_cast<unsigned>(n.states.size());
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    std::vector<int> set;
    bool hits = false;
    for (unsigned q = 0; q < N; ++q)
      if (mask & (1u << q)) {
        set.push_back(static_cast<int>(q));
        hits = hits || n.final[q];
      }
    if (hits) m.family.push_back(std::move(set));
  }
  std::sort(m.family.begin(), m.family.end());
  return m;
}

Nfa to_nfa(const LabeledGraph& g) {
  Nfa n;
  n.alphabet = g.alphabet;
  n.states.push_back("start");
  for (int v = 0; v < g.size(); ++v) n.states.push_back(g.names.empty() ? std::to_string(v) : g.names[static_cast<std::size_t>(v)]);
  n.edges.resize(n.states.size());
  n.final.assign(n.states.size(), true);
  n.initial = {0};
  for (int b : g.initial) n.edges[0].push_back({g.label[static_cast<std::size_t>(b)], b + 1});
  for (int v = 0; v < g.size(); ++v)
    for (int u : g.succ[static_cast<std::size_t>(v)]) n.edges[static_cast<std::size_t>(v + 1)].push_back({g.label[static_cast<std::size_t>(u)], u + 1});
  return n;
}

Nfa product_run(const LabeledGraph& g, const Dfa& d) {
  if (g.alphabet != d.alphabet) throw QueryError("automaton alphabet does not match the partition");
  Nfa n;
  n.alphabet = d.alphabet;
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> todo;
  n.states.push_back("start");
  n.edges.emplace_back();
  n.final.push_back(d.final[static_cast<std::size_t>(d.initial)]);
  n.initial = {0};
  auto get = [&](int b, int q) {
    auto [it, fresh] = id.emplace(std::make_pair(b, q), static_cast<int>(n.states.size()));
    if (fresh) {
      n.states.push_back((g.names.empty() ? std::to_string(b) : g.names[static_cast<std::size_t>(b)]) + "/" + d.states[static_cast<std::size_t>(q)]);
      n.edges.emplace_back();
      n.final.push_back(d.final[static_cast<std::size_t>(q)]);
      todo.emplace_back(b, q);
    }
    return it->second;
  };
  for (int b : g.initial) {
    int a = g.label[static_cast<std::size_t>(b)];
    int s = get(b, d.step(d.initial, a));
    n.edges[0].push_back({a, s});
  }
  while (!todo.empty()) {
    auto [b, q] = todo.front();
    todo.pop_front();
    int from = id[{b, q}];
    for (int u : g.succ[static_cast<std::size_t>(b)]) {
      int a = g.label[static_cast<std::size_t>(u)];
      int to = get(u, d.step(q, a));
      n.edges[static_cast<std::size_t>(from)].push_back({a, to});
    }
  }
  return n;
}

Nfa product(const Nfa& a, const Nfa& b) {
  if (a.alphabet != b.alphabet) throw QueryError("alphabet mismatch in NFA product");
  Nfa n;
  n.alphabet = a.alphabet;
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> todo;
  auto get = [&](int x, int y) {
    auto [it, fresh] = id.emplace(std::make_pair(x, y), static_cast<int>(n.states.size()));
    if (fresh) {
      n.states.push_back(a.states[static_cast<std::size_t>(x)] + "*" + b.states[static_cast<std::size_t>(y)]);
      n.edges.emplace_back();
      n.final.push_back(a.final[static_cast<std::size_t>(x)] && b.final[static_cast<std::size_t>(y)]);
      todo.emplace_back(x, y);
    }
    return it->second;
  };
  for (int x : a.initial)
    for (int y : b.initial) n.initial.push_back(get(x, y));
  while (!todo.empty()) {
    auto [x, y] = todo.front();
    todo.pop_front();
    int from = id[{x, y}];
    for (const auto& ea : a.edges[static_cast<std::size_t>(x)])
      for (const auto& eb : b.edges[static_cast<std::size_t>(y)])
        if (ea.symbol == eb.symbol) {
          int to = get(ea.to, eb.to);
          n.edges[static_cast<std::size_t>(from)].push_back({ea.symbol, to});
        }
  }
  return n;
}

std::optional<Letters> emptiness_witness(const Nfa& n) {
  std::vector<int> parent(n.states.size(), -2), via(n.states.size(), -1);
  std::deque<int> q;
  for (int i : n.initial) {
    if (parent[static_cast<std::size_t>(i)] != -2) continue;
    parent[static_cast<std::size_t>(i)] = -1;
    q.push_back(i);
  }
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    if (n.final[static_cast<std::size_t>(s)]) {
      Letters w;
      for (int c = s; parent[static_cast<std::size_t>(c)] >= 0; c = parent[static_cast<std::size_t>(c)]) w.push_back(via[static_cast<std::size_t>(c)]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const auto& e : n.edges[static_cast<std::size_t>(s)]) {
      if (parent[static_cast<std::size_t>(e.to)] != -2) continue;
      parent[static_cast<std::size_t>(e.to)] = s;
      via[static_cast<std::size_t>(e.to)] = e.symbol;
      q.push_back(e.to);
    }
  }
  return std::nullopt;
}

Dfa determinize(const Nfa& n) {
  Dfa d;
  d.alphabet = n.alphabet;
  std::map<std::vector<int>, int> id;
  std::deque<std::vector<int>> todo;
  auto get = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, fresh] = id.emplace(s, d.size());
    if (fresh) {
      std::string name = "{";
      bool fin = false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        name += (i ? "," : "") + n.states[static_cast<std::size_t>(s[i])];
        fin = fin || n.final[static_cast<std::size_t>(s[i])];
      }
      d.states.push_back(name + "}");
      d.final.push_back(fin);
      d.delta.resize(d.delta.size() + n.alphabet.size(), 0);
      todo.push_back(s);
    }
    return it->second;
  };
  d.initial = get(n.initial);
  while (!todo.empty()) {
    auto s = todo.front();
    todo.pop_front();
    int from = id[s];
    for (int a = 0; a < n.sigma(); ++a) {
      std::vector<int> t;
      for (int x : s)
        for (const auto& e : n.edges[static_cast<std::size_t>(x)])
          if (e.symbol == a) t.push_back(e.to);
      int to = get(t);
      d.delta[static_cast<std::size_t>(from * n.sigma() + a)] = to;
    }
  }
  return d;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  for (std::size_t i = 0; i < c.final.size(); ++i) c.final[i] = !d.final[i];
  return c;
}

Nfa to_nfa(const Dfa& d) {
  Nfa n;
  n.states = d.states;
  n.alphabet = d.alphabet;
  n.final = d.final;
  n.initial = {d.initial};
  n.edges.resize(d.states.size());
  for (int q = 0; q < d.size(); ++q)
    for (int a = 0; a < d.sigma(); ++a) n.edges[static_cast<std::size_t>(q)].push_back({a, d.step(q, a)});
  return n;
}

namespace {

// Iterative Tarjan over the nodes with alive[v]; returns component ids.
std::vector<int> scc(const std::vector<std::vector<int>>& succ, const std::vector<bool>& alive, int& count) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int next = 0;
  count = 0;
  for (int root = 0; root < n; ++root) {
    if (!alive[static_cast<std::size_t>(root)] || index[static_cast<std::size_t>(root)] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, i] = call.back();
      auto vv = static_cast<std::size_t>(v);
      if (i == 0 && index[vv] == -1) {
        index[vv] = low[vv] = next++;
        stack.push_back(v);
        on[vv] = true;
      }
      if (i < succ[vv].size()) {
        int w = succ[vv][i++];
        auto ww = static_cast<std::size_t>(w);
        if (!alive[ww]) continue;
        if (index[ww] == -1) {
          call.push_back({w, 0});
        } else if (on[ww]) {
          low[vv] = std::min(low[vv], index[ww]);
        }
        continue;
      }
      if (low[vv] == index[vv]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = count;
          if (w == v) break;
        }
        ++count;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        auto p = static_cast<std::size_t>(call.back().first);
        low[p] = std::min(low[p], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  return comp;
}

// Shortest path from any source to target inside allowed nodes; nodes after
// the source, ending at target.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& succ, const std::vector<int>& sources, int target,
                          const std::function<bool(int)>& allowed) {
  std::vector<int> parent(succ.size(), -2);
  std::deque<int> q;
  for (int s : sources) {
    parent[static_cast<std::size_t>(s)] = -1;
    q.push_back(s);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : succ[static_cast<std::size_t>(v)]) {
      if (!allowed(w) || parent[static_cast<std::size_t>(w)] != -2) continue;
      parent[static_cast<std::size_t>(w)] = v;
      if (w == target) {
        std::vector<int> path;
        for (int c = w; parent[static_cast<std::size_t>(c)] != -1; c = parent[static_cast<std::size_t>(c)]) path.push_back(c);
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(w);
    }
  }
  return {};
}

}  // namespace

std::optional<Lasso> omega_emptiness_witness(const MullerAutomaton& m, const LabeledGraph& g) {
  if (g.alphabet != m.alphabet) throw QueryError("Muller alphabet does not match the partition");
  if (m.family.empty()) return std::nullopt;
  // reachable product (node, state after reading the node's letter)
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> nodes;
  std::vector<std::vector<int>> succ;
  std::deque<int> todo;
  auto get = [&](int b, int q) {
    auto [it, fresh] = id.emplace(std::make_pair(b, q), static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.emplace_back(b, q);
      succ.emplace_back();
      todo.push_back(it->second);
    }
    return it->second;
  };
  std::vector<int> starts;
  for (int b : g.initial) starts.push_back(get(b, m.step(m.initial, g.label[static_cast<std::size_t>(b)])));
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    auto [b, q] = nodes[static_cast<std::size_t>(v)];
    for (int u : g.succ[static_cast<std::size_t>(b)]) {
      int w = get(u, m.step(q, g.label[static_cast<std::size_t>(u)]));
      succ[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  for (const auto& S : m.family) {
    std::vector<bool> inS(static_cast<std::size_t>(m.size()), false);
    for (int q : S) inS[static_cast<std::size_t>(q)] = true;
    std::vector<bool> alive(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) alive[v] = inS[static_cast<std::size_t>(nodes[v].second)];
    int count = 0;
    auto comp = scc(succ, alive, count);
    std::vector<std::set<int>> qs(static_cast<std::size_t>(count));
    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    std::vector<bool> cyclic(static_cast<std::size_t>(count), false);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (comp[v] < 0) continue;
      auto c = static_cast<std::size_t>(comp[v]);
      qs[c].insert(nodes[v].second);
      members[c].push_back(static_cast<int>(v));
      for (int w : succ[v])
        if (comp[static_cast<std::size_t>(w)] == comp[v]) cyclic[c] = true;
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(count); ++c) {
      if (!cyclic[c] || std::vector<int>(qs[c].begin(), qs[c].end()) != S) continue;
      auto in_c = [&](int w) { return comp[static_cast<std::size_t>(w)] == static_cast<int>(c); };
      // stem to the component
      int entry = -1;
      std::vector<int> stem;
      for (int s : starts)
        if (in_c(s)) entry = s;
      if (entry < 0) {
        std::set<int> target(members[c].begin(), members[c].end());
        std::vector<int> parent(nodes.size(), -2);
        std::deque<int> q;
        for (int s : starts) {
          parent[static_cast<std::size_t>(s)] = -1;
          q.push_back(s);
        }
        while (!q.empty() && entry < 0) {
          int v = q.front();
          q.pop_front();
          for (int w : succ[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = v;
            if (target.count(w)) {
              entry = w;
              break;
            }
            q.push_back(w);
          }
        }
        for (int v = parent[static_cast<std::size_t>(entry)]; v != -1; v = parent[static_cast<std::size_t>(v)]) stem.push_back(v);
        std::reverse(stem.begin(), stem.end());
      }
      // cycle from entry through every member and back
      std::vector<int> cycle{entry};
      int cur = entry;
      for (int v : members[c]) {
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) continue;
        auto p = bfs_path(succ, {cur}, v, in_c);
        cycle.insert(cycle.end(), p.begin(), p.end());
        cur = v;
      }
      auto back = bfs_path(succ, {cur}, entry, in_c);
      if (!back.empty()) back.pop_back();
      cycle.insert(cycle.end(), back.begin(), back.end());
      Lasso l;
      for (int v : stem) {
        int b = nodes[static_cast<std::size_t>(v)].first;
        l.stem_nodes.push_back(b);
        l.stem.push_back(g.label[static_cast<std::size_t>(b)]);
      }
      for (int v : cycle) {
        int b = nodes[static_cast<std::size_t>(v)].first;
        l.cycle_nodes.push_back(b);
        l.cycle.push_back(g.label[static_cast<std::size_t>(b)]);
      }
      return l;
    }
  }
  return std::nullopt;
}

Dfa halting_automaton() {
  Dfa d;
  d.states = {"q0", "q1", "qf"};
  d.alphabet = {"U", "V", "W"};
  //            U  V  W
  d.delta = {1, 0, 0,
             1, 2, 1,
             2, 2, 2};
  d.final = {false, false, true};
  return d;
}

Dfa guarded_automaton() {
  Dfa d;
  d.states = {"q0", "q1", "qf"};
  d.alphabet = {"U", "V", "W", "T"};
  //            U  V  W  T
  d.delta = {1, 0, 0, 0,
             1, 2, 0, 1,
             2, 2, 2, 2};
  d.final = {false, false, true};
  return d;
}

MullerAutomaton invariance_automaton() {
  MullerAutomaton m;
  m.states = {"q0", "q1"};
  m.alphabet = {"U", "V"};
  m.delta = {0, 1,
             1, 1};
  m.family = {{0}};
  return m;
}

Dfa universal_dfa(std::vector<std::string> alphabet) {
  Dfa d;
  d.states = {"q"};
  d.delta.assign(alphabet.size(), 0);
  d.alphabet = std::move(alphabet);
  d.final = {true};
  return d;
}

namespace {

std::string quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}

// Edges with the same endpoints merged into one comma-separated label.
void dot_edges(std::ostringstream& os, const std::map<std::pair<int, int>, std::vector<std::string>>& e,
               const std::vector<std::string>& names) {
  for (const auto& [k, labels] : e) {
    std::string l;
    for (std::size_t i = 0; i < labels.size(); ++i) l += (i ? "," : "") + labels[i];
    os << "  " << quote(names[static_cast<std::size_t>(k.first)]) << " -> " << quote(names[static_cast<std::size_t>(k.second)])
       << " [label=" << quote(l) << "];\n";
  }
}

}  // namespace

std::string to_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (int q = 0; q < d.size(); ++q)
    os << "  " << quote(d.states[static_cast<std::size_t>(q)]) << " [shape=" << (d.final[static_cast<std::size_t>(q)] ? "doublecircle" : "circle") << "];\n";
  os << "  __start -> " << quote(d.states[static_cast<std::size_t>(d.initial)]) << ";\n";
  std::map<std::pair<int, int>, std::vector<std::string>> e;
  for (int q = 0; q < d.size(); ++q)
    for (int a = 0; a < d.sigma(); ++a) e[{q, d.step(q, a)}].push_back(d.alphabet[static_cast<std::size_t>(a)]);
  dot_edges(os, e, d.states);
  os << "}\n";
  return os.str();
}

std::string to_dot(const Nfa& n) {
  std::ostringstream os;
  os << "digraph nfa {\n  rankdir=LR;\n";
  for (int q = 0; q < n.size(); ++q)
    os << "  " << quote(n.states[static_cast<std::size_t>(q)]) << " [shape=" << (n.final[static_cast<std::size_t>(q)] ? "doublecircle" : "circle") << "];\n";
  for (std::size_t i = 0; i < n.initial.size(); ++i)
    os << "  __start" << i << " [shape=point];\n  __start" << i << " -> " << quote(n.states[static_cast<std::size_t>(n.initial[i])]) << ";\n";
  std::map<std::pair<int, int>, std::vector<std::string>> e;
  for (int q = 0; q < n.size(); ++q)
    for (const auto& x : n.edges[static_cast<std::size_t>(q)]) e[{q, x.to}].push_back(n.alphabet[static_cast<std::size_t>(x.symbol)]);
  dot_edges(os, e, n.states);
  os << "}\n";
  return os.str();
}

std::string to_dot(const MullerAutomaton& m) {
  std::ostringstream os;
  os << "digraph muller {\n  rankdir=LR;\n  __start [shape=point];\n";
  std::string fam;
  for (const auto& s : m.family) {
    fam += "{";
    for (std::size_t i = 0; i < s.size(); ++i) fam += (i ? "," : "") + m.states[static_cast<std::size_t>(s[i])];
    fam += "}";
  }
  os << "  label=" << quote("F = {" + fam + "}") << ";\n";
  for (int q = 0; q < m.size(); ++q) os << "  " << quote(m.states[static_cast<std::size_t>(q)]) << " [shape=circle];\n";
  os << "  __start -> " << quote(m.states[static_cast<std::size_t>(m.initial)]) << ";\n";
  std::map<std::pair<int, int>, std::vector<std::string>> e;
  for (int q = 0; q < m.size(); ++q)
    for (int a = 0; a < m.sigma(); ++a) e[{q, m.step(q, a)}].push_back(m.alphabet[static_cast<std::size_t>(a)]);
  dot_edges(os, e, m.states);
  os << "}\n";
  return os.str();
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "digraph balls {\n";
  std::vector<std::string> names;
  for (int v = 0; v < g.size(); ++v) names.push_back(g.names.empty() ? std::to_string(v) : g.names[static_cast<std::size_t>(v)]);
  std::set<int> init(g.initial.begin(), g.initial.end());
  for (int v = 0; v < g.size(); ++v)
    os << "  " << quote(names[static_cast<std::size_t>(v)]) << " [label=" << quote(names[static_cast<std::size_t>(v)] + "\\n" + g.alphabet[static_cast<std::size_t>(g.label[static_cast<std::size_t>(v)])])
       << (init.count(v) ? ", peripheries=2" : "") << "];\n";
  for (int v = 0; v < g.size(); ++v)
    for (int u : g.succ[static_cast<std::size_t>(v)]) os << "  " << quote(names[static_cast<std::size_t>(v)]) << " -> " << quote(names[static_cast<std::size_t>(u)]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string letters_to_string(const std::vector<std::string>& alphabet, const Letters& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + alphabet[static_cast<std::size_t>(w[i])];
  return s;
}

}  // namespace symdyn

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace symdyn {

/// Words over automaton alphabets are sequences of symbol indices.
using Letters = std::vector<int>;

struct Dfa {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<int> delta;  // states * |alphabet|
  int initial = 0;
  std::vector<bool> final;

  int size() const { return static_cast<int>(states.size()); }
  int sigma() const { return static_cast<int>(alphabet.size()); }
  int step(int q, int a) const { return delta[static_cast<std::size_t>(q * sigma() + a)]; }
  int run(int q, const Letters& w) const;
  bool accepts(const Letters& w) const { return final[static_cast<std::size_t>(run(initial, w))]; }
  int symbol(const std::string& name) const;  // throws QueryError
  void validate() const;                      // throws SpecError
};

struct Nfa {
  struct Edge {
    int symbol;
    int to;
  };
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<std::vector<Edge>> edges;
  std::vector<int> initial;
  std::vector<bool> final;

  int size() const { return static_cast<int>(states.size()); }
  int sigma() const { return static_cast<int>(alphabet.size()); }
  bool accepts(const Letters& w) const;
  void validate() const;
};

struct MullerAutomaton {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<int> delta;
  int initial = 0;
  std::vector<std::vector<int>> family;  // sorted state sets

  int size() const { return static_cast<int>(states.size()); }
  int sigma() const { return static_cast<int>(alphabet.size()); }
  int step(int q, int a) const { return delta[static_cast<std::size_t>(q * sigma() + a)]; }
  /// Acceptance of stem . cycle^omega.
  bool accepts(const Letters& stem, const Letters& cycle) const;
  /// States visited infinitely often on stem . cycle^omega.
  std::vector<int> inf_set(const Letters& stem, const Letters& cycle) const;
  void validate() const;
};

struct BuchiAutomaton {
  Nfa graph;  // final = accepting states
};

/// Deterministic Buchi automata only; the family lists every subset that
/// meets the accepting states, so state counts are capped.
MullerAutomaton to_muller(const BuchiAutomaton& b);

/// Finite graph whose nodes carry a letter; a path emits the letters of the
/// nodes it visits, starting with its first node.
struct LabeledGraph {
  std::vector<std::string> alphabet;
  std::vector<int> label;
  std::vector<std::vector<int>> succ;
  std::vector<int> initial;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(label.size()); }
};

/// Graph as an NFA (a fresh start state, empty word accepted).
Nfa to_nfa(const LabeledGraph& g);

/// Paths of g whose letters the DFA accepts. Only the reachable part is built.
Nfa product_run(const LabeledGraph& g, const Dfa& d);
/// Intersection of two NFAs over the same alphabet.
Nfa product(const Nfa& a, const Nfa& b);

/// Shortest accepted word (breadth-first), or nullopt if the language is empty.
std::optional<Letters> emptiness_witness(const Nfa& n);
inline bool is_empty(const Nfa& n) { return !emptiness_witness(n); }

Dfa determinize(const Nfa& n);
Dfa complement(const Dfa& d);
Nfa to_nfa(const Dfa& d);

struct Lasso {
  Letters stem;
  Letters cycle;
  std::vector<int> stem_nodes;   // graph nodes
  std::vector<int> cycle_nodes;
};

/// Is there an infinite path of g from an initial node whose Muller run is
/// accepting? Returns a stem + cycle witness.
std::optional<Lasso> omega_emptiness_witness(const MullerAutomaton& m, const LabeledGraph& g);

// Standard observers: fixed alphabets listed in order.
/// {U, V, W}: accepts words with a U followed later by a V.
Dfa halting_automaton();
/// {U, V, W, T}: from U, reach V without meeting W.
Dfa guarded_automaton();
/// {U, V}: F = {{q0}}, stays in U forever.
MullerAutomaton invariance_automaton();

/// Universal one-state DFA over the alphabet.
Dfa universal_dfa(std::vector<std::string> alphabet);

std::string to_dot(const Dfa& d);
std::string to_dot(const Nfa& n);
std::string to_dot(const MullerAutomaton& m);
std::string to_dot(const LabeledGraph& g);

std::string letters_to_string(const std::vector<std::string>& alphabet, const Letters& w);

}  // namespace symdyn

#pragma once

#include <string>
#include <vector>

#include "symdyn/automata.hpp"
#include "symdyn/kernels.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

struct Cell {
  std::string name;
  ClopenSet set;
};

/// Named, pairwise disjoint clopen cells. Coverage of the phase space is a
/// property of the system and is checked by check_covers.
class Partition {
public:
  Partition() = default;
  Partition(SpacePtr space, std::vector<Cell> cells);

  /// One cell per resolution-n ball, named by its word.
  static Partition cylinders(SpacePtr space, int n);
  /// The given cells plus a remainder cell (named rest_name) completing the
  /// space. Given cells must be pairwise disjoint.
  static Partition with_rest(SpacePtr space, std::vector<Cell> cells, const std::string& rest_name);

  const SpacePtr& space() const { return space_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::vector<std::string> names() const;
  int index(const std::string& name) const;  // throws QueryError
  Letters parse(const std::vector<std::string>& names) const;
  int resolution() const;

  /// QueryError if the complement of the union meets X.
  void check_covers(const EffectiveSystem& f) const;

private:
  SpacePtr space_;
  std::vector<Cell> cells_;
};

/// a0 & f^-1(a1 & f^-1(a2 & ...)): the points whose orbit reads w.
ClopenSet word_set(const EffectiveSystem& f, const Partition& p, const Letters& w);

struct Membership {
  bool member = false;
  ClopenSet witness;
};

Membership word_in_language(const EffectiveSystem& f, const Partition& p, const Letters& w);

/// Induced words of length <= max_len in shortlex order (cell order).
std::vector<Letters> enumerate_language(const EffectiveSystem& f, const Partition& p, int max_len,
                                        Exec e = default_exec());

struct InducedAutomaton {
  LabeledGraph graph;
  std::vector<ClopenSet> balls;  // per node
  int resolution = 0;
  bool exact = false;
  std::vector<std::string> warnings;

  Nfa nfa() const { return to_nfa(graph); }
  bool accepts(const Letters& w) const { return nfa().accepts(w); }
};

/// Ball graph at resolution max(n, partition resolution). Its language
/// contains the induced language; exact when the system carries a shadowing
/// modulus and n >= modulus(partition resolution).
InducedAutomaton induced_automaton(const EffectiveSystem& f, const Partition& p, int n, Exec e = default_exec());
/// Serial reference for the ball-graph kernel (no grouping, one meets call
/// per pair).
InducedAutomaton induced_automaton_reference(const EffectiveSystem& f, const Partition& p, int n);

/// Exact automaton of the induced language of an effectively regular
/// subshift: nodes are (state, upcoming window). CapabilityError otherwise.
LabeledGraph window_graph(const EffectiveSystem& f, const Partition& p);

}  // namespace symdyn

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/checker.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

// ---- direct Turing machine simulation

/// Finite tape window; cells outside hold the blank.
struct TmConfig {
  std::vector<Symbol> tape;
  long origin = 0;  // coordinate of tape[0]
  long head = 0;    // coordinate
  int state = 0;

  Symbol read(const MachineSpec& m) const;
  /// Drop blank cells at both ends away from the head.
  TmConfig normalized(const MachineSpec& m) const;
  bool same_as(const TmConfig& o, const MachineSpec& m) const;
};

/// Tape 1^n, head on the first cell, initial state.
TmConfig input_config(const MachineSpec& m, int n);
/// One step; halting states are fixed.
TmConfig tm_step(const MachineSpec& m, const TmConfig& c);
/// Steps until a halting state, or nullopt within the cutoff.
std::optional<int> halting_time(const MachineSpec& m, TmConfig c, int cutoff);

/// The shipped 4-state binary machine: halts on 1^n iff n is even, after n+1 steps.
MachineSpec default_machine();
/// Three-state busy beaver (stress spec).
MachineSpec bb3_machine();

// ---- halting-time tables

struct HaltTimeTable {
  MachineSpec machine;
  int cutoff = 0;
  std::vector<std::optional<int>> entries;  // input n -> halting time

  int inputs() const { return static_cast<int>(entries.size()); }
  void validate() const;  // throws SpecError
};

HaltTimeTable build_table(const MachineSpec& m, int inputs, int cutoff, Exec e = default_exec());

// ---- universal subshifts

/// One-sided subshift on {0,1} forbidding 01^n00^t1 for 1 <= n < inputs with
/// t below the halting time of n (every t when n does not halt within the
/// cutoff). Runs 1^n outside the table are unconstrained.
SystemPtr universal_subshift(const HaltTimeTable& t);
/// Same rule on {0,1,§}; § separates independent words.
SystemPtr chaotic_universal(const HaltTimeTable& t);
/// The labeled graph behind either subshift (every state may start).
SoficPresentation universal_presentation(const HaltTimeTable& t, bool separator);

inline const char* kSeparator = "§";

/// Cycle word c with c^omega in [w] and in X; QueryError if w is not admissible.
Word periodic_point(const EffectiveSystem& chaotic, const Word& w);
/// Connector v § w: a point of [v] entering [w] after |v|+1 steps.
Word transitivity_witness(const EffectiveSystem& chaotic, const Word& v, const Word& w);
/// Does the graph carry a cycle labeled u (so that u^omega is in X)?
bool has_periodic(const SoficPresentation& g, const Word& u);

/// Cells U = [01^n0], V = [001], W = [§], T = rest for the guarded query.
Partition guarded_partition(const EffectiveSystem& chaotic, int n);
/// "Some point of [01^n0] reaches [001] without passing through [§]".
Verdict guarded_halting_query(const EffectiveSystem& chaotic, int n, const Budget& b);

// ---- product families

/// Components of the table: halting in k forbids 10^t1 for t < k; otherwise
/// the sofic shift {0*10^omega, 0^omega}. Horizon = table inputs.
std::shared_ptr<const ProductSystem> sofic_product(const HaltTimeTable& t);
/// Components: halting in k forbids 0^k; otherwise the full shift.
std::shared_ptr<const ProductSystem> shadowing_product(const HaltTimeTable& t);
/// From pi_n^-1([1]) reach pi_n^-1([01]) with the halting automaton.
Verdict product_halting_query(const ProductSystem& p, int n, const Budget& b);

// ---- Turing machine inside a cellular automaton

struct TmInCa {
  MachineSpec machine;
  SystemPtr ca;
  Alphabet alphabet;  // A, A x Q, L, R, Error
  LocalRule rule;

  Symbol marker_left() const;
  Symbol marker_right() const;
  Symbol error() const;
  Symbol head(Symbol a, int q) const;

  /// Finite CA word [L, data, R] and the coordinate of its first cell.
  std::pair<Word, long> encode(const TmConfig& c) const;
  /// Reads the zone between L and R; nullopt if malformed.
  std::optional<TmConfig> decode(const Word& w, long first) const;
  /// One CA step on a finite word padded with blanks (the word grows by one
  /// cell at each end).
  std::pair<Word, long> step(const Word& w, long first) const;
  /// Steps until a halting head appears, or nullopt within the limit.
  std::optional<int> halts(const TmConfig& c, int limit) const;
};

TmInCa tm_in_ca(const MachineSpec& m);

// ---- by name (CLI)

std::vector<std::string> gallery_names();
SystemPtr gallery_system(const std::string& name, const HaltTimeTable& t);

}  // namespace symdyn

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/clopen.hpp"

namespace symdyn {

struct LabeledEdge {
  int from = 0;
  Symbol label = 0;
  int to = 0;
};

/// Labeled graph over the alphabet of a single-track space. The subshift is
/// the set of labels of infinite walks (bi-infinite for two-sided spaces).
struct SoficPresentation {
  int states = 0;
  std::vector<LabeledEdge> edges;
};

/// Drop states that cannot carry an infinite walk (and, if two_sided, states
/// no bi-infinite walk passes through). States are renumbered.
SoficPresentation trim(const SoficPresentation& g, bool two_sided);

struct Capabilities {
  /// Present iff the system is a subshift with an exact sofic presentation.
  std::shared_ptr<const SoficPresentation> regular;
  /// delta resolution for a given epsilon resolution.
  std::function<int(int)> shadowing_modulus;
  bool finite = false;
};

class EffectiveSystem {
public:
  explicit EffectiveSystem(SpacePtr space) : space_(std::move(space)) {}
  virtual ~EffectiveSystem() = default;

  const SpacePtr& space() const { return space_; }
  const Capabilities& caps() const { return caps_; }

  /// Does the clopen set intersect the phase space X?
  virtual bool meets(const ClopenSet& c) const { return !c.is_empty(); }
  /// f^-1 on the clopen algebra of the ambient space.
  virtual ClopenSet preimage(const ClopenSet& c) const = 0;
  /// Tracks that balls must resolve for queries about c (products mask out
  /// untouched components).
  virtual std::vector<bool> relevant_tracks(const ClopenSet& c) const;
  /// Forward map on a finite window; nullopt when the window is too small or
  /// the case is not finitely simulable.
  virtual std::optional<Window> step_window(const Window&) const { return std::nullopt; }
  virtual std::string kind() const = 0;

protected:
  Capabilities caps_;

private:
  SpacePtr space_;
};

using SystemPtr = std::shared_ptr<const EffectiveSystem>;

/// Balls at resolution n restricted to the tracks relevant to the given sets.
Intervals query_resolution(const EffectiveSystem& f, int n, const std::vector<ClopenSet>& sets);

// ---- shifts and cellular automata

struct LocalRule {
  int radius = 0;
  /// Indexed by the neighbourhood read as a base-|A| number, leftmost digit
  /// most significant.
  std::vector<Symbol> table;
};

SystemPtr full_shift(Alphabet a, bool two_sided = false);
SystemPtr sft(Alphabet a, std::vector<Word> forbidden, bool two_sided = false);
SystemPtr sofic(Alphabet a, SoficPresentation g, bool two_sided = false);
SystemPtr cellular_automaton(Alphabet a, LocalRule rule);
/// x -> 0x on {0,1}^N.
SystemPtr prepend_zero();
SystemPtr identity(SpacePtr space);

/// SFT as a labeled graph on windows of length max(m-1, 1).
SoficPresentation sft_presentation(const Alphabet& a, const std::vector<Word>& forbidden);

// ---- machines

enum class Move { L, R, N };

struct Transition {
  Symbol write = 0;
  Move move = Move::N;
  int next = 0;
};

struct MachineSpec {
  std::vector<std::string> states;
  int initial = 0;
  std::vector<bool> halting;
  Alphabet tape;
  Symbol blank = 0;
  /// state * |A| + symbol; empty for halting states.
  std::vector<std::optional<Transition>> delta;

  const std::optional<Transition>& rule(int q, Symbol a) const { return delta[static_cast<std::size_t>(q) * tape.size() + a]; }
  int state_index(const std::string& name) const;
  void validate() const;  // throws SpecError
};

struct CounterInstr {
  enum Op { Inc, Dec, Jz, Halt } op = Halt;
  int reg = 0;
  int target = 0;
};

struct CounterProgram {
  int counters = 1;
  std::vector<CounterInstr> code;
};

/// n with n mod modulus = r goes to (mul n + add) / div.
struct CollatzBranch {
  long mul = 1;
  long add = 0;
  long div = 1;
};

struct CollatzSpec {
  long modulus = 2;
  std::vector<CollatzBranch> branches;
  long apply(long n) const;
};

SystemPtr turing_moving_tape(MachineSpec m);
SystemPtr turing_blank(MachineSpec m);
SystemPtr tag_system(Alphabet a, std::vector<Word> productions, int deletion);
SystemPtr counter_machine(CounterProgram p);
SystemPtr collatz_map(CollatzSpec s);

/// Alphabet with the end marker appended (used by tm_blank and tag).
Alphabet with_end_marker(const Alphabet& a);
inline const char* kEndMarker = "_";

// ---- products

using SystemFamily = std::function<SystemPtr(int)>;

class ProductSystem;
/// Lazy product of family(0..horizon-1); every component lives on `component`.
std::shared_ptr<const ProductSystem> product(SpacePtr component, SystemFamily family, int horizon);

class ProductSystem : public EffectiveSystem {
public:
  ProductSystem(SpacePtr component, SystemFamily family, int horizon);
  ~ProductSystem() override;

  bool meets(const ClopenSet& c) const override;
  ClopenSet preimage(const ClopenSet& c) const override;
  std::vector<bool> relevant_tracks(const ClopenSet& c) const override;
  std::optional<Window> step_window(const Window& w) const override;
  std::string kind() const override { return "product"; }

  int horizon() const { return horizon_; }
  const SpacePtr& component_space() const { return component_; }
  /// Instantiates on first touch; throws HorizonError beyond the horizon.
  const EffectiveSystem& component(int i) const;
  int instantiated() const;
  /// pi_i^-1(c) for a clopen c of the component space.
  ClopenSet lift(int i, const ClopenSet& c) const;

private:
  struct Lazy;
  SpacePtr component_;
  SystemFamily family_;
  int horizon_;
  std::unique_ptr<Lazy> lazy_;
};

}  // namespace symdyn

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/automata.hpp"
#include "symdyn/language.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

enum class Outcome { Holds, Fails, Unknown };
const char* to_string(Outcome o);

struct Budget {
  int max_len = 10;    // word length for witness search
  int max_iter = 64;   // fixpoint iterations
  int max_depth = 4;   // ball resolution for over-approximations
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string method;
  std::optional<Letters> witness;       // finite induced word
  std::optional<Lasso> lasso;           // eventually periodic induced word
  std::optional<ClopenSet> points;      // points realising the witness
  int resolution = -1;                  // resolution of an exact graph or refutation
  std::string note;
  Budget used{0, 0, 0};
};

/// f_Delta(x, q) = (f(x), Delta(q, cell(x))) on X x Q; points outside every
/// cell keep their state.
class ObservationSystem : public EffectiveSystem {
public:
  ObservationSystem(SystemPtr f, Partition p, std::vector<std::string> states, std::vector<int> delta);

  bool meets(const ClopenSet& c) const override;
  ClopenSet preimage(const ClopenSet& c) const override;
  std::vector<bool> relevant_tracks(const ClopenSet& c) const override;
  std::optional<Window> step_window(const Window& w) const override;
  std::string kind() const override { return "observation"; }

  const EffectiveSystem& base() const { return *f_; }
  std::size_t state_track() const { return q_track_; }
  /// (x in v, q) for a clopen v of the base space.
  ClopenSet lift(const ClopenSet& v, int q) const;
  ClopenSet lift(const ClopenSet& v) const;
  /// Existential projection to the base space.
  ClopenSet project_base(const ClopenSet& c) const;

private:
  SystemPtr f_;
  Partition p_;
  ClopenSet rest_;
  int nq_;
  std::vector<int> delta_;
  std::size_t q_track_;
};

std::shared_ptr<const ObservationSystem> observe(SystemPtr f, const Partition& p, const Dfa& d);
std::shared_ptr<const ObservationSystem> observe(SystemPtr f, const Partition& p, const MullerAutomaton& m);

Verdict check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d, const Budget& b);
/// Budgeted semi-decision: backward witness search, then ball-graph
/// over-approximations. Never consults the regular presentation.
Verdict semi_check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d, const Budget& b);
/// Exact decision through the window graph (effectively regular systems).
Verdict exact_check_regular(const EffectiveSystem& f, const Partition& p, const Dfa& d);

Verdict check_omega(SystemPtr f, const Partition& p, const MullerAutomaton& m, const Budget& b);
/// The basin procedure alone (Unknown when a basin does not stabilise).
Verdict basin_check_omega(SystemPtr f, const Partition& p, const MullerAutomaton& m, const Budget& b);
Verdict exact_check_omega(const EffectiveSystem& f, const Partition& p, const MullerAutomaton& m);

struct Basin {
  std::optional<ClopenSet> set;  // nullopt: no stabilisation within budget
  int m = 0;                     // B = union_{n<m} f^-n(V)
  int iterations = 0;
};

Basin basin(const EffectiveSystem& f, const ClopenSet& v, const Budget& b);
/// B(B(V)^c)^c; nullopt if either basin fails to stabilise.
std::optional<ClopenSet> infinitely_often(const EffectiveSystem& f, const ClopenSet& v, const Budget& b);

/// Union of the resolution-iv balls whose intersection with s meets X.
ClopenSet dilate(const EffectiveSystem& f, const ClopenSet& s, const Intervals& iv);

/// Is there a resolution-n pseudo-orbit from U to V?
bool pseudo_reach(const EffectiveSystem& f, const ClopenSet& u, const ClopenSet& v, int n);

struct ReachDecision {
  bool reachable = false;
  int rounds = 0;
  int steps = -1;       // orbit length when reachable by witness
  int resolution = -1;  // refuting or certifying resolution
  std::string method;
};

/// Total for systems with a shadowing modulus; CapabilityError otherwise.
ReachDecision decide_reach_shadowing(const EffectiveSystem& f, const ClopenSet& u, const ClopenSet& v);

struct Equicontinuity {
  std::optional<int> delta;      // resolution; nullopt if no stabilisation
  int rounds = 0;
  std::vector<int> resolutions;  // resolution of B_n per round, starting at eps
  std::vector<int> atoms;        // atoms of B_n per round
};

Equicontinuity equicontinuity_modulus(const EffectiveSystem& f, int eps, const Budget& b);

}  // namespace symdyn

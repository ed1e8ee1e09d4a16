#pragma once
// Systems whose map, on each guard cylinder, only copies input positions or
// writes constants. Preimages of cylinders are then cylinders.

#include <functional>
#include <tuple>
#include <vector>

#include "symdyn/system.hpp"

namespace symdyn::detail {

struct Src {
  bool constant = false;
  Symbol sym = 0;
  std::size_t track = 0;
  int pos = 0;

  static Src copy(std::size_t t, int p) { return {false, 0, t, p}; }
  static Src value(Symbol s) { return {true, s, 0, 0}; }
};

struct Guard {
  std::size_t track;
  int pos;
  Symbol sym;
};

struct AffineCase {
  std::vector<Guard> guard;
  std::function<Src(std::size_t track, int i)> out;
};

/// Cases must have pairwise disjoint guards covering the space.
class AffineSystem : public EffectiveSystem {
public:
  using EffectiveSystem::EffectiveSystem;

  ClopenSet preimage(const ClopenSet& c) const override;
  std::optional<Window> step_window(const Window& w) const override;

protected:
  std::vector<AffineCase> cases_;
};

/// Constraint on one-sided tracks: no non-marker symbol after the marker
/// (marker = alphabet index `end`); used for padded finite/infinite words.
bool word_respects_marker(const Word& w, Symbol end);
/// Unary embedding constraint 1^n 0^w: no 1 after a 0 inside the window.
bool word_is_unary(const Word& w);

}  // namespace symdyn::detail

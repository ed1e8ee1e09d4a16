#include <algorithm>
#include <map>
#include <set>

#include "affine.hpp"
#include "symdyn/errors.hpp"
#include "symdyn/kernels.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

namespace {

using detail::AffineCase;
using detail::Src;

class ShiftSystem : public detail::AffineSystem {
public:
  ShiftSystem(SpacePtr sp, std::string kind) : AffineSystem(std::move(sp)), kind_(std::move(kind)) {
    cases_.push_back({{}, [](std::size_t t, int i) { return Src::copy(t, i + 1); }});
  }
  std::string kind() const override { return kind_; }

private:
  std::string kind_;
};

// Subshift given by a trimmed presentation; the map is the shift.
class SoficSystem : public ShiftSystem {
public:
  SoficSystem(SpacePtr sp, SoficPresentation g, std::string kind, std::function<int(int)> modulus)
      : ShiftSystem(std::move(sp), std::move(kind)) {
    two_sided_ = space()->track(0).kind == TrackKind::TwoSided;
    graph_ = trim(g, two_sided_);
    succ_.assign(static_cast<std::size_t>(graph_.states), {});
    for (const auto& e : graph_.edges) succ_[e.from].push_back(e);
    caps_.regular = std::make_shared<const SoficPresentation>(graph_);
    caps_.shadowing_modulus = std::move(modulus);
  }

  bool meets(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "meets");
    if (c.is_empty() || graph_.states == 0) return false;
    if (c.is_whole()) return true;
    const auto& iv = c.intervals()[0];
    // states at which a walk can be after iv.lo steps (one-sided)
    std::vector<bool> start(static_cast<std::size_t>(graph_.states), true);
    if (!two_sided_) {
      for (int k = 0; k < iv.lo; ++k) {
        std::vector<bool> nxt(start.size(), false);
        for (const auto& e : graph_.edges)
          if (start[e.from]) nxt[e.to] = true;
        if (nxt == start) break;
        start = std::move(nxt);
      }
    }
    for (const auto& w : c.words())
      if (accepts_from(start, w)) return true;
    return false;
  }

private:
  bool accepts_from(std::vector<bool> cur, const Word& w) const {
    for (unsigned char a : w) {
      std::vector<bool> nxt(cur.size(), false);
      bool any = false;
      for (std::size_t s = 0; s < cur.size(); ++s) {
        if (!cur[s]) continue;
        for (const auto& e : succ_[s])
          if (e.label == a) nxt[e.to] = any = true;
      }
      if (!any) return false;
      cur = std::move(nxt);
    }
    return true;
  }

  bool two_sided_ = false;
  SoficPresentation graph_;
  std::vector<std::vector<LabeledEdge>> succ_;
};

class PrependZero : public detail::AffineSystem {
public:
  PrependZero() : AffineSystem(Space::one_sided(Alphabet({"0", "1"}))) {
    cases_.push_back({{}, [](std::size_t t, int i) { return i == 0 ? Src::value(0) : Src::copy(t, i - 1); }});
  }
  std::string kind() const override { return "prepend_zero"; }
};

class IdentitySystem : public detail::AffineSystem {
public:
  explicit IdentitySystem(SpacePtr sp) : AffineSystem(std::move(sp)) {
    cases_.push_back({{}, [](std::size_t t, int i) { return Src::copy(t, i); }});
  }
  std::string kind() const override { return "identity"; }
};

class CellularAutomaton : public EffectiveSystem {
public:
  CellularAutomaton(Alphabet a, LocalRule rule) : EffectiveSystem(Space::two_sided(std::move(a))), rule_(std::move(rule)) {
    std::size_t n = 1;
    for (int k = 0; k < 2 * rule_.radius + 1; ++k) n *= space()->track(0).alphabet.size();
    if (rule_.radius < 0) throw SpecError("negative CA radius");
    if (rule_.table.size() != n) throw SpecError("CA rule table must have |A|^(2r+1) entries");
    for (auto s : rule_.table)
      if (s >= radix()) throw SpecError("CA rule outputs a symbol outside the alphabet");
  }

  ClopenSet preimage(const ClopenSet& c) const override {
    require_same_space(space(), c.space(), "preimage");
    if (c.is_empty() || c.is_whole()) return c;
    const auto& iv = c.intervals()[0];
    auto words = ca_preimage_words(radix(), rule_.radius, rule_.table, c.words(), static_cast<std::size_t>(iv.length()), default_exec());
    return ClopenSet::from_words(space(), {{iv.lo - rule_.radius, iv.hi + rule_.radius}}, std::move(words));
  }

  std::optional<Window> step_window(const Window& w) const override {
    const auto& iv = w.iv[0];
    if (iv.length() < 2 * rule_.radius + 1) return std::nullopt;
    return Window{{{iv.lo + rule_.radius, iv.hi - rule_.radius}}, ca_apply(radix(), rule_.radius, rule_.table, w.word)};
  }

  std::string kind() const override { return "ca"; }
  const LocalRule& rule() const { return rule_; }

private:
  int radix() const { return static_cast<int>(space()->track(0).alphabet.size()); }
  LocalRule rule_;
};

SpacePtr shift_space(Alphabet a, bool two_sided) {
  return two_sided ? Space::two_sided(std::move(a)) : Space::one_sided(std::move(a));
}

}  // namespace

SystemPtr full_shift(Alphabet a, bool two_sided) {
  SoficPresentation g;
  g.states = 1;
  for (std::size_t s = 0; s < a.size(); ++s) g.edges.push_back({0, static_cast<Symbol>(s), 0});
  return std::make_shared<SoficSystem>(shift_space(std::move(a), two_sided), std::move(g), "full_shift",
                                       [](int n) { return n; });
}

SoficPresentation sft_presentation(const Alphabet& a, const std::vector<Word>& forbidden) {
  std::size_t m = 1;
  for (const auto& f : forbidden) {
    if (f.empty()) throw SpecError("empty forbidden word");
    for (unsigned char c : f)
      if (c >= a.size()) throw SpecError("forbidden word uses a symbol outside the alphabet");
    m = std::max(m, f.size());
  }
  const std::size_t k = std::max<std::size_t>(m - 1, 1);
  auto clean = [&](const Word& w) {
    for (const auto& f : forbidden)
      if (w.find(f) != Word::npos) return false;
    return true;
  };
  std::vector<int> radix(k, static_cast<int>(a.size()));
  std::vector<Word> states;
  expand_wildcards(Word(k, static_cast<char>(kWildcard)), radix, states);
  std::map<Word, int> id;
  for (const auto& s : states)
    if (clean(s)) id.emplace(s, static_cast<int>(id.size()));
  SoficPresentation g;
  g.states = static_cast<int>(id.size());
  for (const auto& [u, i] : id) {
    for (std::size_t c = 0; c < a.size(); ++c) {
      Word uc = u + static_cast<char>(c);
      if (!clean(uc)) continue;
      auto it = id.find(uc.substr(1));
      if (it != id.end()) g.edges.push_back({i, static_cast<Symbol>(u[0]), it->second});
    }
  }
  return g;
}

SystemPtr sft(Alphabet a, std::vector<Word> forbidden, bool two_sided) {
  auto g = sft_presentation(a, forbidden);
  int window = 0;
  for (const auto& f : forbidden) window = std::max(window, static_cast<int>(f.size()) - 1);
  return std::make_shared<SoficSystem>(shift_space(std::move(a), two_sided), std::move(g), "sft",
                                       [window](int n) { return std::max(n, window); });
}

SystemPtr sofic(Alphabet a, SoficPresentation g, bool two_sided) {
  for (const auto& e : g.edges) {
    if (e.from < 0 || e.to < 0 || e.from >= g.states || e.to >= g.states) throw SpecError("sofic edge references an unknown state");
    if (e.label >= a.size()) throw SpecError("sofic edge label outside the alphabet");
  }
  return std::make_shared<SoficSystem>(shift_space(std::move(a), two_sided), std::move(g), "sofic", nullptr);
}

SystemPtr cellular_automaton(Alphabet a, LocalRule rule) {
  return std::make_shared<CellularAutomaton>(std::move(a), std::move(rule));
}

SystemPtr prepend_zero() { return std::make_shared<PrependZero>(); }

SystemPtr identity(SpacePtr space) { return std::make_shared<IdentitySystem>(std::move(space)); }

}  // namespace symdyn

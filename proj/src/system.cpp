#include "symdyn/system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "affine.hpp"
#include "symdyn/errors.hpp"

namespace symdyn {

SoficPresentation trim(const SoficPresentation& g, bool two_sided) {
  std::vector<bool> alive(static_cast<std::size_t>(g.states), true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> out(alive.size(), 0), in(alive.size(), 0);
    for (const auto& e : g.edges) {
      if (!alive[e.from] || !alive[e.to]) continue;
      ++out[e.from];
      ++in[e.to];
    }
    for (std::size_t s = 0; s < alive.size(); ++s) {
      if (alive[s] && (out[s] == 0 || (two_sided && in[s] == 0))) {
        alive[s] = false;
        changed = true;
      }
    }
  }
  std::vector<int> id(alive.size(), -1);
  SoficPresentation r;
  for (std::size_t s = 0; s < alive.size(); ++s)
    if (alive[s]) id[s] = r.states++;
  std::set<std::tuple<int, Symbol, int>> seen;
  for (const auto& e : g.edges) {
    if (!alive[e.from] || !alive[e.to]) continue;
    if (seen.emplace(id[e.from], e.label, id[e.to]).second) r.edges.push_back({id[e.from], e.label, id[e.to]});
  }
  std::sort(r.edges.begin(), r.edges.end(), [](const LabeledEdge& a, const LabeledEdge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  return r;
}

std::vector<bool> EffectiveSystem::relevant_tracks(const ClopenSet&) const {
  return std::vector<bool>(space_->track_count(), true);
}

Intervals query_resolution(const EffectiveSystem& f, int n, const std::vector<ClopenSet>& sets) {
  std::vector<bool> mask(f.space()->track_count(), sets.empty());
  for (const auto& s : sets) {
    auto m = f.relevant_tracks(s);
    for (std::size_t t = 0; t < mask.size(); ++t) mask[t] = mask[t] || m[t];
  }
  return f.space()->resolution(n, mask);
}

Alphabet with_end_marker(const Alphabet& a) {
  auto s = a.symbols();
  s.emplace_back(kEndMarker);
  return Alphabet(std::move(s));
}

namespace detail {

bool word_respects_marker(const Word& w, Symbol end) {
  bool seen = false;
  for (unsigned char c : w) {
    if (c == end) seen = true;
    else if (seen) return false;
  }
  return true;
}

bool word_is_unary(const Word& w) {
  bool zero = false;
  for (unsigned char c : w) {
    if (c == 0) zero = true;
    else if (zero) return false;
  }
  return true;
}

namespace {

using Key = std::pair<std::size_t, int>;

bool add(std::map<Key, Symbol>& cons, std::size_t t, int p, Symbol s) {
  auto [it, fresh] = cons.emplace(Key{t, p}, s);
  return fresh || it->second == s;
}

Cylinder to_cylinder(const Space& sp, const std::map<Key, Symbol>& cons) {
  Cylinder c;
  c.parts.resize(sp.track_count());
  std::vector<Interval> iv(sp.track_count());
  for (const auto& [k, s] : cons) iv[k.first] = Interval::hull(iv[k.first], {k.second, k.second});
  for (std::size_t t = 0; t < iv.size(); ++t) {
    if (iv[t].empty()) continue;
    c.parts[t].anchor = iv[t].lo;
    c.parts[t].word.assign(static_cast<std::size_t>(iv[t].length()), static_cast<char>(kWildcard));
  }
  for (const auto& [k, s] : cons) c.parts[k.first].word[static_cast<std::size_t>(k.second - iv[k.first].lo)] = static_cast<char>(s);
  return c;
}

}  // namespace

ClopenSet AffineSystem::preimage(const ClopenSet& c) const {
  require_same_space(space(), c.space(), "preimage");
  if (c.is_empty()) return c;
  const auto& sp = *space();
  Layout lay(sp, c.intervals());
  std::vector<Cylinder> raw;
  for (const auto& w : c.words()) {
    for (const auto& cs : cases_) {
      std::map<Key, Symbol> cons;
      bool ok = true;
      for (const auto& g : cs.guard) ok = ok && add(cons, g.track, g.pos, g.sym);
      for (std::size_t t = 0; ok && t < sp.track_count(); ++t) {
        const auto& iv = c.intervals()[t];
        for (int i = iv.lo; ok && i <= iv.hi; ++i) {
          auto sym = static_cast<Symbol>(w[lay.at(t, i)]);
          auto src = cs.out(t, i);
          if (src.constant) ok = src.sym == sym;
          else ok = add(cons, src.track, src.pos, sym);
        }
      }
      if (ok) raw.push_back(to_cylinder(sp, cons));
    }
  }
  return normalize(space(), raw);
}

std::optional<Window> AffineSystem::step_window(const Window& win) const {
  const auto& sp = *space();
  Layout lay(sp, win.iv);
  auto read = [&](std::size_t t, int p) -> std::optional<Symbol> {
    if (!win.iv[t].contains(p)) return std::nullopt;
    return static_cast<Symbol>(win.word[lay.at(t, p)]);
  };
  const AffineCase* hit = nullptr;
  for (const auto& cs : cases_) {
    bool match = true;
    for (const auto& g : cs.guard) {
      auto s = read(g.track, g.pos);
      if (!s) return std::nullopt;
      if (*s != g.sym) match = false;
    }
    if (match) {
      hit = &cs;
      break;
    }
  }
  if (!hit) return std::nullopt;
  Window out;
  out.iv = sp.no_intervals();
  std::vector<Word> pieces(sp.track_count());
  for (std::size_t t = 0; t < sp.track_count(); ++t) {
    int lo, hi;
    if (sp.track(t).kind == TrackKind::Cell) {
      lo = hi = 0;
    } else {
      const auto& iv = win.iv[t];
      lo = iv.empty() ? -2 : iv.lo - 2;
      hi = iv.empty() ? 2 : iv.hi + 2;
      if (sp.track(t).kind == TrackKind::OneSided) lo = std::max(lo, 0);
    }
    // longest run of resolvable output positions
    int best_lo = 0, best_len = 0, run_lo = lo, run_len = 0;
    Word best, run;
    for (int i = lo; i <= hi; ++i) {
      auto src = hit->out(t, i);
      std::optional<Symbol> s = src.constant ? std::optional<Symbol>(src.sym) : read(src.track, src.pos);
      if (s) {
        if (run_len == 0) run_lo = i;
        ++run_len;
        run.push_back(static_cast<char>(*s));
        if (run_len > best_len) {
          best_len = run_len;
          best_lo = run_lo;
          best = run;
        }
      } else {
        run_len = 0;
        run.clear();
      }
    }
    if (best_len > 0) out.iv[t] = {best_lo, best_lo + best_len - 1};
    pieces[t] = best;
  }
  for (auto& p : pieces) out.word += p;
  return out;
}

}  // namespace detail
}  // namespace symdyn

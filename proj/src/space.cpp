#include "symdyn/space.hpp"

#include <algorithm>
#include <set>

#include "symdyn/errors.hpp"

namespace symdyn {

namespace {

std::size_t utf8_codepoints(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw SpecError("alphabet must contain at least one symbol");
  if (symbols_.size() >= kWildcard) throw SpecError("alphabet too large");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw SpecError("empty symbol name");
    if (!seen.insert(s).second) throw SpecError("duplicate symbol '" + s + "'");
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

Symbol Alphabet::index(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw SpecError("unknown symbol '" + std::string(name) + "'");
}

bool Alphabet::single_codepoint() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return utf8_codepoints(s) == 1; });
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Space::Space(std::vector<Track> tracks) : tracks_(std::move(tracks)) {
  if (tracks_.empty()) throw SpecError("space needs at least one track");
  std::set<std::string> names;
  for (const auto& t : tracks_) {
    if (t.alphabet.size() == 0) throw SpecError("track '" + t.name + "' has no alphabet");
    if (!names.insert(t.name).second) throw SpecError("duplicate track name '" + t.name + "'");
  }
}

SpacePtr Space::one_sided(Alphabet a) {
  return std::make_shared<const Space>(std::vector<Track>{{"x", TrackKind::OneSided, std::move(a)}});
}

SpacePtr Space::two_sided(Alphabet a) {
  return std::make_shared<const Space>(std::vector<Track>{{"x", TrackKind::TwoSided, std::move(a)}});
}

SpacePtr Space::tagged(Alphabet tags, const Space& inner) {
  std::vector<Track> tracks;
  tracks.push_back({"tag", TrackKind::Cell, std::move(tags)});
  for (const auto& t : inner.tracks()) tracks.push_back(t);
  return std::make_shared<const Space>(std::move(tracks));
}

std::optional<std::size_t> Space::find_track(std::string_view name) const {
  for (std::size_t t = 0; t < tracks_.size(); ++t)
    if (tracks_[t].name == name) return t;
  return std::nullopt;
}

SpacePtr Space::with_cell(const std::string& name, Alphabet tags) const {
  auto tracks = tracks_;
  tracks.push_back({name, TrackKind::Cell, std::move(tags)});
  return std::make_shared<const Space>(std::move(tracks));
}

SpacePtr Space::without_track(std::size_t t) const {
  auto tracks = tracks_;
  tracks.erase(tracks.begin() + static_cast<std::ptrdiff_t>(t));
  return std::make_shared<const Space>(std::move(tracks));
}

Intervals Space::resolution(int n) const {
  return resolution(n, std::vector<bool>(tracks_.size(), true));
}

Intervals Space::resolution(int n, const std::vector<bool>& mask) const {
  Intervals iv(tracks_.size());
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    if (!mask[t]) continue;
    switch (tracks_[t].kind) {
      case TrackKind::OneSided: iv[t] = {0, n - 1}; break;
      case TrackKind::TwoSided: iv[t] = {-n, n}; break;
      case TrackKind::Cell: iv[t] = {0, 0}; break;
    }
  }
  return iv;
}

int Space::resolution_of(const Intervals& iv) const {
  int n = 0;
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    if (iv[t].empty()) continue;
    switch (tracks_[t].kind) {
      case TrackKind::OneSided: n = std::max(n, iv[t].hi + 1); break;
      case TrackKind::TwoSided: n = std::max({n, -iv[t].lo, iv[t].hi}); break;
      case TrackKind::Cell: break;
    }
  }
  return n;
}

bool Space::valid_intervals(const Intervals& iv) const {
  if (iv.size() != tracks_.size()) return false;
  for (std::size_t t = 0; t < tracks_.size(); ++t) {
    if (iv[t].empty()) continue;
    if (tracks_[t].kind == TrackKind::OneSided && iv[t].lo < 0) return false;
    if (tracks_[t].kind == TrackKind::Cell && (iv[t].lo != 0 || iv[t].hi != 0)) return false;
  }
  return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where) {
  if (!same_space(a, b)) throw SpaceMismatch(where);
}

}  // namespace symdyn

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symdyn {

using Symbol = std::uint8_t;

/// Symbol index reserved for "any symbol" in raw cylinders.
inline constexpr Symbol kWildcard = 0xFF;

/// Ordered list of distinct symbol names. The order fixes the enumeration of
/// words and balls.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(Symbol s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<Symbol> find(std::string_view name) const;
  Symbol index(std::string_view name) const;  // throws SpecError
  bool single_codepoint() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> symbols_;
};

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  int length() const { return empty() ? 0 : hi - lo + 1; }
  bool contains(int p) const { return lo <= p && p <= hi; }
  bool contains(const Interval& o) const { return o.empty() || (!empty() && lo <= o.lo && o.hi <= hi); }

  static Interval hull(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) {
    return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
  }
};

using Intervals = std::vector<Interval>;

enum class TrackKind { OneSided, TwoSided, Cell };

/// One coordinate family of a space: A^N, A^Z, or a single finite cell.
struct Track {
  std::string name;
  TrackKind kind = TrackKind::OneSided;
  Alphabet alphabet;

  friend bool operator==(const Track&, const Track&) = default;
};

/// A finite product of tracks. One-sided and two-sided shift spaces are single
/// tracks; tagged spaces such as Q x A^Z add a Cell track in front.
class Space {
public:
  Space() = default;
  explicit Space(std::vector<Track> tracks);

  static std::shared_ptr<const Space> one_sided(Alphabet a);
  static std::shared_ptr<const Space> two_sided(Alphabet a);
  static std::shared_ptr<const Space> tagged(Alphabet tags, const Space& inner);

  std::size_t track_count() const { return tracks_.size(); }
  const Track& track(std::size_t t) const { return tracks_.at(t); }
  const std::vector<Track>& tracks() const { return tracks_; }
  std::optional<std::size_t> find_track(std::string_view name) const;

  /// Space with an extra Cell track appended (observation products).
  std::shared_ptr<const Space> with_cell(const std::string& name, Alphabet tags) const;
  /// Space with track t removed.
  std::shared_ptr<const Space> without_track(std::size_t t) const;

  /// Per-track intervals of the resolution-n balls: [0, n-1] one-sided,
  /// [-n, n] two-sided, [0, 0] for cells. Tracks with mask=false stay empty.
  Intervals resolution(int n) const;
  Intervals resolution(int n, const std::vector<bool>& mask) const;
  /// Smallest n whose ball intervals contain the given intervals.
  int resolution_of(const Intervals& iv) const;

  /// Empty intervals for every track.
  Intervals no_intervals() const { return Intervals(tracks_.size()); }
  bool valid_intervals(const Intervals& iv) const;

  friend bool operator==(const Space&, const Space&) = default;

private:
  std::vector<Track> tracks_;
};

using SpacePtr = std::shared_ptr<const Space>;

bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b, const char* where);

}  // namespace symdyn

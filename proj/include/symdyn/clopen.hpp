#pragma once

#include <string>
#include <vector>

#include "symdyn/space.hpp"

namespace symdyn {

/// Packed symbol indices, one byte per position. Multi-track words are the
/// concatenation of the per-track pieces in track order.
using Word = std::string;

/// One track's constraint inside a raw cylinder. An empty word leaves the
/// track unconstrained. kWildcard bytes match any symbol.
struct TrackWord {
  int anchor = 0;
  Word word;
};

/// Raw cylinder: one TrackWord per track of the space.
struct Cylinder {
  std::vector<TrackWord> parts;
};

/// Finite piece of a configuration: per-track intervals and the packed word
/// over them.
struct Window {
  Intervals iv;
  Word word;
};

/// Offsets of each track inside a packed word for a given interval vector.
class Layout {
public:
  Layout(const Space& space, const Intervals& iv);

  std::size_t length() const { return length_; }
  std::size_t offset(std::size_t track) const { return offsets_[track]; }
  /// Offset of position p of track t; p must lie in the interval.
  std::size_t at(std::size_t track, int p) const { return offsets_[track] + static_cast<std::size_t>(p - iv_[track].lo); }
  /// Alphabet size at each packed offset.
  const std::vector<int>& radix() const { return radix_; }

private:
  Intervals iv_;
  std::vector<std::size_t> offsets_;
  std::vector<int> radix_;
  std::size_t length_ = 0;
};

/// A clopen subset in canonical form: the minimal per-track intervals and
/// the sorted set of admissible packed words over them.
class ClopenSet {
public:
  ClopenSet() = default;

  static ClopenSet empty(SpacePtr space);
  static ClopenSet whole(SpacePtr space);
  /// Words may contain kWildcard; the result is canonical.
  static ClopenSet from_words(SpacePtr space, Intervals iv, std::vector<Word> words);
  /// Single-track cylinder [word] at anchor on the given track.
  static ClopenSet cylinder(SpacePtr space, const Word& word, int anchor = 0, std::size_t track = 0);
  /// Cell track fixed to one symbol.
  static ClopenSet cell(SpacePtr space, std::size_t track, Symbol s);

  const SpacePtr& space() const { return space_; }
  const Intervals& intervals() const { return iv_; }
  const std::vector<Word>& words() const { return words_; }

  bool is_empty() const { return words_.empty(); }
  bool is_whole() const { return words_.size() == 1 && words_.front().empty(); }
  /// Smallest ball resolution at which this set is a union of balls.
  int resolution() const;

  /// Word set re-expressed over wider intervals (each iv[t] must contain ours).
  std::vector<Word> words_at(const Intervals& iv) const;
  /// Membership of any configuration extending the window. The window must
  /// cover every nonempty interval of the set.
  bool contains(const Window& w) const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b);

private:
  ClopenSet(SpacePtr space, Intervals iv, std::vector<Word> words);
  void canonicalize();

  SpacePtr space_;
  Intervals iv_;
  std::vector<Word> words_;
};

/// Union of raw cylinders in canonical form.
ClopenSet normalize(SpacePtr space, const std::vector<Cylinder>& raw);

ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);

bool is_empty(const ClopenSet& a);
bool equals(const ClopenSet& a, const ClopenSet& b);
bool subset_of(const ClopenSet& a, const ClopenSet& b);

inline ClopenSet operator|(const ClopenSet& a, const ClopenSet& b) { return unite(a, b); }
inline ClopenSet operator&(const ClopenSet& a, const ClopenSet& b) { return intersect(a, b); }
inline ClopenSet operator~(const ClopenSet& a) { return complement(a); }
inline ClopenSet operator-(const ClopenSet& a, const ClopenSet& b) { return difference(a, b); }

/// All packed words over iv in enumeration order.
std::vector<Word> all_words(const Space& space, const Intervals& iv);
/// Expand kWildcard bytes, given the alphabet size per offset.
void expand_wildcards(const Word& w, const std::vector<int>& radix, std::vector<Word>& out);

/// Partition of the space into all cylinders over iv, in enumeration order.
std::vector<ClopenSet> balls(SpacePtr space, const Intervals& iv);
std::vector<ClopenSet> balls(SpacePtr space, int n);

/// Positions of one track moved by delta (two-sided, or one-sided staying >= 0).
ClopenSet translate(const ClopenSet& a, std::size_t track, int delta);
/// {x : (x with cell track = s) in a}, over the space without that track.
ClopenSet section(const ClopenSet& a, std::size_t track, Symbol s, SpacePtr reduced);
/// Cylinder-wise embedding into a space with more tracks; map[t] is the
/// index in big of our track t.
ClopenSet extrude(const ClopenSet& a, SpacePtr big, const std::vector<std::size_t>& map);
/// Existential projection; keep[j] is the index in a's space of small's track j.
ClopenSet project(const ClopenSet& a, SpacePtr small, const std::vector<std::size_t>& keep);

std::string to_string(const ClopenSet& a);
std::string word_to_string(const Alphabet& a, const Word& w, const char* sep = "");

}  // namespace symdyn

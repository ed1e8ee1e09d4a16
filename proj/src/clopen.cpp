#include "symdyn/clopen.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "symdyn/errors.hpp"

namespace symdyn {

Layout::Layout(const Space& space, const Intervals& iv) : iv_(iv), offsets_(iv.size()) {
  for (std::size_t t = 0; t < iv.size(); ++t) {
    offsets_[t] = length_;
    auto len = static_cast<std::size_t>(iv[t].length());
    length_ += len;
    radix_.insert(radix_.end(), len, static_cast<int>(space.track(t).alphabet.size()));
  }
}

void expand_wildcards(const Word& w, const std::vector<int>& radix, std::vector<Word>& out) {
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (static_cast<Symbol>(w[i]) == kWildcard) holes.push_back(i);
  Word cur = w;
  for (auto h : holes) cur[h] = 0;
  while (true) {
    out.push_back(cur);
    // odometer, last hole fastest
    std::size_t k = holes.size();
    while (k > 0) {
      auto h = holes[k - 1];
      auto v = static_cast<Symbol>(cur[h]) + 1;
      if (v < radix[h]) {
        cur[h] = static_cast<char>(v);
        break;
      }
      cur[h] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

std::vector<Word> all_words(const Space& space, const Intervals& iv) {
  Layout lay(space, iv);
  std::vector<Word> out;
  expand_wildcards(Word(lay.length(), static_cast<char>(kWildcard)), lay.radix(), out);
  return out;
}

namespace {

void sort_unique(std::vector<Word>& w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
}

// If offset o is a free coordinate of the set, replace words by the reduced set.
bool try_drop(std::vector<Word>& words, std::size_t o, int radix) {
  std::vector<Word> reduced;
  reduced.reserve(words.size());
  for (const auto& w : words) {
    Word r = w;
    r.erase(o, 1);
    reduced.push_back(std::move(r));
  }
  sort_unique(reduced);
  if (reduced.size() * static_cast<std::size_t>(radix) != words.size()) return false;
  words = std::move(reduced);
  return true;
}

}  // namespace

ClopenSet::ClopenSet(SpacePtr space, Intervals iv, std::vector<Word> words)
    : space_(std::move(space)), iv_(std::move(iv)), words_(std::move(words)) {}

void ClopenSet::canonicalize() {
  Layout lay(*space_, iv_);
  bool wild = false;
  for (const auto& w : words_) {
    if (w.size() != lay.length()) throw Error("clopen word length does not match its intervals");
    if (!wild && w.find(static_cast<char>(kWildcard)) != Word::npos) wild = true;
  }
  if (wild) {
    std::vector<Word> out;
    for (const auto& w : words_) expand_wildcards(w, lay.radix(), out);
    words_ = std::move(out);
  }
  sort_unique(words_);
  if (words_.empty()) {
    iv_ = space_->no_intervals();
    return;
  }
  for (std::size_t t = 0; t < iv_.size(); ++t) {
    int radix = static_cast<int>(space_->track(t).alphabet.size());
    while (!iv_[t].empty()) {
      Layout l(*space_, iv_);
      if (!try_drop(words_, l.at(t, iv_[t].hi), radix)) break;
      --iv_[t].hi;
    }
    while (!iv_[t].empty()) {
      Layout l(*space_, iv_);
      if (!try_drop(words_, l.at(t, iv_[t].lo), radix)) break;
      ++iv_[t].lo;
    }
    if (iv_[t].empty()) iv_[t] = Interval{};
  }
}

ClopenSet ClopenSet::empty(SpacePtr space) {
  auto iv = space->no_intervals();
  return ClopenSet(std::move(space), std::move(iv), {});
}

ClopenSet ClopenSet::whole(SpacePtr space) {
  auto iv = space->no_intervals();
  return ClopenSet(std::move(space), std::move(iv), {Word()});
}

ClopenSet ClopenSet::from_words(SpacePtr space, Intervals iv, std::vector<Word> words) {
  if (!space) throw Error("clopen set without a space");
  if (!space->valid_intervals(iv)) throw SpecError("intervals do not fit the space");
  ClopenSet c(std::move(space), std::move(iv), std::move(words));
  c.canonicalize();
  return c;
}

ClopenSet ClopenSet::cylinder(SpacePtr space, const Word& word, int anchor, std::size_t track) {
  auto iv = space->no_intervals();
  if (!word.empty()) iv.at(track) = {anchor, anchor + static_cast<int>(word.size()) - 1};
  return from_words(std::move(space), std::move(iv), {word});
}

ClopenSet ClopenSet::cell(SpacePtr space, std::size_t track, Symbol s) {
  if (space->track(track).kind != TrackKind::Cell) throw SpecError("track is not a cell");
  return cylinder(std::move(space), Word(1, static_cast<char>(s)), 0, track);
}

int ClopenSet::resolution() const { return space_->resolution_of(iv_); }

std::vector<Word> ClopenSet::words_at(const Intervals& iv) const {
  if (iv == iv_) return words_;
  Layout big(*space_, iv);
  Layout small(*space_, iv_);
  for (std::size_t t = 0; t < iv.size(); ++t)
    if (!iv[t].contains(iv_[t])) throw Error("words_at: intervals do not contain the set's intervals");
  std::vector<Word> out;
  for (const auto& w : words_) {
    Word tmpl(big.length(), static_cast<char>(kWildcard));
    for (std::size_t t = 0; t < iv.size(); ++t)
      if (!iv_[t].empty())
        std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(small.offset(t)), iv_[t].length(),
                    tmpl.begin() + static_cast<std::ptrdiff_t>(big.at(t, iv_[t].lo)));
    expand_wildcards(tmpl, big.radix(), out);
  }
  sort_unique(out);
  return out;
}

bool ClopenSet::contains(const Window& win) const {
  if (is_empty()) return false;
  Layout wl(*space_, win.iv);
  Word sub;
  for (std::size_t t = 0; t < iv_.size(); ++t) {
    if (iv_[t].empty()) continue;
    if (!win.iv[t].contains(iv_[t])) throw Error("window does not cover the clopen set");
    sub.append(win.word, wl.at(t, iv_[t].lo), static_cast<std::size_t>(iv_[t].length()));
  }
  return std::binary_search(words_.begin(), words_.end(), sub);
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
  return same_space(a.space_, b.space_) && a.iv_ == b.iv_ && a.words_ == b.words_;
}

ClopenSet normalize(SpacePtr space, const std::vector<Cylinder>& raw) {
  if (raw.empty()) return ClopenSet::empty(space);
  Intervals hull = space->no_intervals();
  for (const auto& c : raw) {
    if (c.parts.size() != space->track_count()) throw SpaceMismatch("cylinder track count");
    for (std::size_t t = 0; t < hull.size(); ++t) {
      const auto& p = c.parts[t];
      if (p.word.empty()) continue;
      Interval i{p.anchor, p.anchor + static_cast<int>(p.word.size()) - 1};
      if (space->track(t).kind == TrackKind::OneSided && i.lo < 0) throw SpecError("negative anchor on a one-sided track");
      if (space->track(t).kind == TrackKind::Cell && (i.lo != 0 || i.hi != 0)) throw SpecError("cell constraint must be one symbol at 0");
      for (unsigned char ch : p.word)
        if (ch != kWildcard && ch >= space->track(t).alphabet.size()) throw SpecError("symbol out of range");
      hull[t] = Interval::hull(hull[t], i);
    }
  }
  Layout lay(*space, hull);
  std::vector<Word> words;
  for (const auto& c : raw) {
    Word w(lay.length(), static_cast<char>(kWildcard));
    for (std::size_t t = 0; t < hull.size(); ++t) {
      const auto& p = c.parts[t];
      if (!p.word.empty()) std::copy(p.word.begin(), p.word.end(), w.begin() + static_cast<std::ptrdiff_t>(lay.at(t, p.anchor)));
    }
    words.push_back(std::move(w));
  }
  return ClopenSet::from_words(std::move(space), std::move(hull), std::move(words));
}

namespace {

Intervals hull_of(const ClopenSet& a, const ClopenSet& b) {
  Intervals h = a.intervals();
  for (std::size_t t = 0; t < h.size(); ++t) h[t] = Interval::hull(h[t], b.intervals()[t]);
  return h;
}

template <class Op>
ClopenSet combine(const ClopenSet& a, const ClopenSet& b, const char* where, Op op) {
  require_same_space(a.space(), b.space(), where);
  auto h = hull_of(a, b);
  auto wa = a.words_at(h);
  auto wb = b.words_at(h);
  std::vector<Word> out;
  op(wa, wb, out);
  return ClopenSet::from_words(a.space(), std::move(h), std::move(out));
}

}  // namespace

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  if (a.is_empty() && same_space(a.space(), b.space())) return b;
  if (b.is_empty() && same_space(a.space(), b.space())) return a;
  return combine(a, b, "union", [](auto& x, auto& y, auto& o) {
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(o));
  });
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  if (a.is_whole() && same_space(a.space(), b.space())) return b;
  if (b.is_whole() && same_space(a.space(), b.space())) return a;
  return combine(a, b, "intersection", [](auto& x, auto& y, auto& o) {
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(o));
  });
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) {
  return combine(a, b, "difference", [](auto& x, auto& y, auto& o) {
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(o));
  });
}

ClopenSet complement(const ClopenSet& a) {
  if (a.is_empty()) return ClopenSet::whole(a.space());
  auto all = all_words(*a.space(), a.intervals());
  std::vector<Word> out;
  std::set_difference(all.begin(), all.end(), a.words().begin(), a.words().end(), std::back_inserter(out));
  return ClopenSet::from_words(a.space(), a.intervals(), std::move(out));
}

bool is_empty(const ClopenSet& a) { return a.is_empty(); }

bool equals(const ClopenSet& a, const ClopenSet& b) {
  require_same_space(a.space(), b.space(), "equals");
  return a == b;
}

bool subset_of(const ClopenSet& a, const ClopenSet& b) {
  return difference(a, b).is_empty();
}

std::vector<ClopenSet> balls(SpacePtr space, const Intervals& iv) {
  std::vector<ClopenSet> out;
  for (auto& w : all_words(*space, iv)) out.push_back(ClopenSet::from_words(space, iv, {std::move(w)}));
  return out;
}

std::vector<ClopenSet> balls(SpacePtr space, int n) {
  auto iv = space->resolution(n);
  return balls(std::move(space), iv);
}

ClopenSet translate(const ClopenSet& a, std::size_t track, int delta) {
  if (a.intervals()[track].empty()) return a;
  auto kind = a.space()->track(track).kind;
  if (kind == TrackKind::Cell) throw Error("cannot translate a cell track");
  auto iv = a.intervals();
  iv[track].lo += delta;
  iv[track].hi += delta;
  if (kind == TrackKind::OneSided && iv[track].lo < 0) throw Error("translation leaves the one-sided track");
  return ClopenSet::from_words(a.space(), std::move(iv), a.words());
}

ClopenSet section(const ClopenSet& a, std::size_t track, Symbol s, SpacePtr reduced) {
  Intervals iv;
  for (std::size_t t = 0; t < a.intervals().size(); ++t)
    if (t != track) iv.push_back(a.intervals()[t]);
  if (a.intervals()[track].empty()) return ClopenSet::from_words(std::move(reduced), std::move(iv), a.words());
  Layout lay(*a.space(), a.intervals());
  auto o = lay.offset(track);
  std::vector<Word> out;
  for (const auto& w : a.words()) {
    if (static_cast<Symbol>(w[o]) != s) continue;
    Word r = w;
    r.erase(o, 1);
    out.push_back(std::move(r));
  }
  return ClopenSet::from_words(std::move(reduced), std::move(iv), std::move(out));
}

ClopenSet extrude(const ClopenSet& a, SpacePtr big, const std::vector<std::size_t>& map) {
  if (a.is_empty()) return ClopenSet::empty(big);
  auto iv = big->no_intervals();
  for (std::size_t t = 0; t < map.size(); ++t) iv[map[t]] = a.intervals()[t];
  Layout from(*a.space(), a.intervals());
  Layout to(*big, iv);
  std::vector<Word> out;
  out.reserve(a.words().size());
  for (const auto& w : a.words()) {
    Word r(to.length(), 0);
    for (std::size_t t = 0; t < map.size(); ++t)
      std::copy_n(w.begin() + static_cast<std::ptrdiff_t>(from.offset(t)), a.intervals()[t].length(),
                  r.begin() + static_cast<std::ptrdiff_t>(to.offset(map[t])));
    out.push_back(std::move(r));
  }
  return ClopenSet::from_words(std::move(big), std::move(iv), std::move(out));
}

ClopenSet project(const ClopenSet& a, SpacePtr small, const std::vector<std::size_t>& keep) {
  if (a.is_empty()) return ClopenSet::empty(small);
  Intervals iv;
  for (auto k : keep) iv.push_back(a.intervals()[k]);
  Layout from(*a.space(), a.intervals());
  std::vector<Word> out;
  for (const auto& w : a.words()) {
    Word r;
    for (auto k : keep) r.append(w, from.offset(k), static_cast<std::size_t>(a.intervals()[k].length()));
    out.push_back(std::move(r));
  }
  return ClopenSet::from_words(std::move(small), std::move(iv), std::move(out));
}

std::string word_to_string(const Alphabet& a, const Word& w, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && *sep) s += sep;
    auto c = static_cast<Symbol>(w[i]);
    s += c == kWildcard ? std::string("*") : a.name(c);
  }
  return s;
}

std::string to_string(const ClopenSet& a) {
  if (a.is_empty()) return "{}";
  if (a.is_whole()) return "X";
  const auto& sp = *a.space();
  Layout lay(sp, a.intervals());
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& w : a.words()) {
    if (!first) os << ", ";
    first = false;
    bool ft = true;
    for (std::size_t t = 0; t < sp.track_count(); ++t) {
      const auto& iv = a.intervals()[t];
      if (iv.empty()) continue;
      if (!ft) os << ' ';
      ft = false;
      if (sp.track_count() > 1) os << sp.track(t).name << ':';
      os << '[' << word_to_string(sp.track(t).alphabet, w.substr(lay.offset(t), static_cast<std::size_t>(iv.length())),
                                  sp.track(t).alphabet.single_codepoint() ? "" : " ")
         << ']';
      if (iv.lo != 0) os << '@' << iv.lo;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace symdyn

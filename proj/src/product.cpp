#include <atomic>
#include <map>
#include <mutex>

#include "symdyn/errors.hpp"
#include "symdyn/system.hpp"

namespace symdyn {

struct ProductSystem::Lazy {
  explicit Lazy(int n) : flags(new std::once_flag[static_cast<std::size_t>(n)]), comps(static_cast<std::size_t>(n)) {}
  std::unique_ptr<std::once_flag[]> flags;
  std::vector<SystemPtr> comps;
  std::atomic<int> count{0};
};

namespace {

SpacePtr product_space(const Space& comp, int horizon) {
  if (horizon < 1) throw SpecError("product horizon must be positive");
  std::vector<Track> tracks;
  for (int i = 0; i < horizon; ++i)
    for (const auto& t : comp.tracks()) tracks.push_back({t.name + std::to_string(i), t.kind, t.alphabet});
  return std::make_shared<const Space>(std::move(tracks));
}

}  // namespace

ProductSystem::ProductSystem(SpacePtr component, SystemFamily family, int horizon)
    : EffectiveSystem(product_space(*component, horizon)),
      component_(std::move(component)),
      family_(std::move(family)),
      horizon_(horizon),
      lazy_(std::make_unique<Lazy>(horizon)) {}

ProductSystem::~ProductSystem() = default;

std::shared_ptr<const ProductSystem> product(SpacePtr component, SystemFamily family, int horizon) {
  return std::make_shared<ProductSystem>(std::move(component), std::move(family), horizon);
}

const EffectiveSystem& ProductSystem::component(int i) const {
  if (i < 0 || i >= horizon_) throw HorizonError("component " + std::to_string(i) + " beyond horizon " + std::to_string(horizon_));
  auto k = static_cast<std::size_t>(i);
  std::call_once(lazy_->flags[k], [&] {
    auto s = family_(i);
    if (!s || !same_space(s->space(), component_)) throw SpecError("product family returned a system on the wrong space");
    lazy_->comps[k] = std::move(s);
    ++lazy_->count;
  });
  return *lazy_->comps[k];
}

int ProductSystem::instantiated() const { return lazy_->count.load(); }

ClopenSet ProductSystem::lift(int i, const ClopenSet& c) const {
  if (i < 0 || i >= horizon_) throw HorizonError("component " + std::to_string(i) + " beyond horizon");
  const std::size_t T = component_->track_count();
  std::vector<std::size_t> map(T);
  for (std::size_t t = 0; t < T; ++t) map[t] = static_cast<std::size_t>(i) * T + t;
  return extrude(c, space(), map);
}

namespace {

struct Split {
  std::vector<int> touched;
  std::vector<Intervals> iv;         // per touched component
  std::vector<std::size_t> offset;   // packed offset per touched component
  std::vector<std::size_t> length;
};

Split split(const ClopenSet& c, std::size_t T, int horizon) {
  Split s;
  Layout lay(*c.space(), c.intervals());
  for (int i = 0; i < horizon; ++i) {
    Intervals iv(c.intervals().begin() + static_cast<std::ptrdiff_t>(i * T),
                 c.intervals().begin() + static_cast<std::ptrdiff_t>((i + 1) * T));
    std::size_t len = 0;
    for (const auto& x : iv) len += static_cast<std::size_t>(x.length());
    if (len == 0) continue;
    s.touched.push_back(i);
    s.iv.push_back(iv);
    s.offset.push_back(lay.offset(static_cast<std::size_t>(i) * T));
    s.length.push_back(len);
  }
  return s;
}

}  // namespace

bool ProductSystem::meets(const ClopenSet& c) const {
  require_same_space(space(), c.space(), "meets");
  if (c.is_empty()) return false;
  if (c.is_whole()) {
    for (int i = 0; i < horizon_; ++i)
      if (!component(i).meets(ClopenSet::whole(component_))) return false;
    return true;
  }
  auto s = split(c, component_->track_count(), horizon_);
  std::vector<std::map<Word, bool>> memo(s.touched.size());
  for (const auto& w : c.words()) {
    bool all = true;
    for (std::size_t k = 0; all && k < s.touched.size(); ++k) {
      Word part = w.substr(s.offset[k], s.length[k]);
      auto it = memo[k].find(part);
      if (it == memo[k].end())
        it = memo[k].emplace(part, component(s.touched[k]).meets(ClopenSet::from_words(component_, s.iv[k], {part}))).first;
      all = it->second;
    }
    if (all) return true;
  }
  return false;
}

ClopenSet ProductSystem::preimage(const ClopenSet& c) const {
  require_same_space(space(), c.space(), "preimage");
  if (c.is_empty() || c.is_whole()) return c;
  auto s = split(c, component_->track_count(), horizon_);
  std::vector<std::map<Word, ClopenSet>> memo(s.touched.size());
  ClopenSet acc = ClopenSet::empty(space());
  for (const auto& w : c.words()) {
    ClopenSet box = ClopenSet::whole(space());
    for (std::size_t k = 0; k < s.touched.size() && !box.is_empty(); ++k) {
      Word part = w.substr(s.offset[k], s.length[k]);
      auto it = memo[k].find(part);
      if (it == memo[k].end()) {
        int i = s.touched[k];
        auto pre = component(i).preimage(ClopenSet::from_words(component_, s.iv[k], {part}));
        it = memo[k].emplace(part, lift(i, pre)).first;
      }
      box = intersect(box, it->second);
    }
    acc = unite(acc, box);
  }
  return acc;
}

std::vector<bool> ProductSystem::relevant_tracks(const ClopenSet& c) const {
  const std::size_t T = component_->track_count();
  std::vector<bool> mask(space()->track_count(), false);
  for (int i : split(c, T, horizon_).touched)
    for (std::size_t t = 0; t < T; ++t) mask[static_cast<std::size_t>(i) * T + t] = true;
  return mask;
}

std::optional<Window> ProductSystem::step_window(const Window& w) const {
  const std::size_t T = component_->track_count();
  Layout lay(*space(), w.iv);
  Window out;
  for (int i = 0; i < horizon_; ++i) {
    Window part;
    part.iv.assign(w.iv.begin() + static_cast<std::ptrdiff_t>(i * T), w.iv.begin() + static_cast<std::ptrdiff_t>((i + 1) * T));
    std::size_t len = 0;
    for (const auto& x : part.iv) len += static_cast<std::size_t>(x.length());
    if (len == 0) {
      for (std::size_t t = 0; t < T; ++t) out.iv.push_back(Interval{});
      continue;
    }
    part.word = w.word.substr(lay.offset(static_cast<std::size_t>(i) * T), len);
    auto r = component(i).step_window(part);
    if (!r) return std::nullopt;
    out.iv.insert(out.iv.end(), r->iv.begin(), r->iv.end());
    out.word += r->word;
  }
  return out;
}

}  // namespace symdyn

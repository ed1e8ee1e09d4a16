#include "symdyn/kernels.hpp"

#include <algorithm>
#include <atomic>

#ifdef SYMDYN_HAVE_OPENMP
#include <omp.h>
#endif

namespace symdyn {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

int worker_count() {
#ifdef SYMDYN_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Word ca_apply(int radix, int radius, const std::vector<Symbol>& table, const Word& w) {
  const std::size_t span = static_cast<std::size_t>(2 * radius + 1);
  if (w.size() < span) return {};
  Word out(w.size() - span + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < span; ++k) idx = idx * static_cast<std::size_t>(radix) + static_cast<Symbol>(w[i + k]);
    out[i] = static_cast<char>(table[idx]);
  }
  return out;
}

namespace {

// All pre-words of one target, by extending a (2r)-symbol history.
void dfs_one(int radix, int radius, const std::vector<Symbol>& table, const Word& target, std::vector<Word>& out) {
  const std::size_t hist = static_cast<std::size_t>(2 * radius);
  const std::size_t total = target.size() + hist;
  const std::size_t r = static_cast<std::size_t>(radix);
  std::size_t mod = 1;
  for (std::size_t k = 0; k < hist; ++k) mod *= r;
  if (total == 0) {
    out.emplace_back();
    return;
  }
  Word cur(total, 0);
  // choice[k] is the next symbol to try at position k
  std::vector<int> choice(total + 1, 0);
  std::vector<std::size_t> code(total + 1, 0);  // window code of the last 2r symbols
  std::size_t k = 0;
  while (true) {
    if (k == total) {
      out.push_back(cur);
      --k;
      continue;
    }
    if (choice[k] == radix) {
      choice[k] = 0;
      if (k == 0) return;
      --k;
      continue;
    }
    Symbol s = static_cast<Symbol>(choice[k]++);
    std::size_t full = code[k] * r + s;
    if (k >= hist && table[full] != static_cast<Symbol>(target[k - hist])) continue;
    cur[k] = static_cast<char>(s);
    code[k + 1] = mod == 1 ? 0 : full % mod;
    ++k;
  }
}

}  // namespace

std::vector<Word> ca_preimage_words(int radix, int radius, const std::vector<Symbol>& table,
                                    const std::vector<Word>& targets, std::size_t len, Exec e) {
  std::vector<std::vector<Word>> parts(targets.size());
  for_each_index(targets.size(), e, [&](std::size_t i) {
    if (targets[i].size() == len) dfs_one(radix, radius, table, targets[i], parts[i]);
  });
  std::vector<Word> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> ca_preimage_brute(int radix, int radius, const std::vector<Symbol>& table,
                                    const std::vector<Word>& targets, std::size_t len) {
  const std::size_t total = len + static_cast<std::size_t>(2 * radius);
  std::vector<Word> cand;
  std::vector<int> radixes(total, radix);
  expand_wildcards(Word(total, static_cast<char>(kWildcard)), radixes, cand);
  std::vector<Word> out;
  for (auto& w : cand)
    if (std::binary_search(targets.begin(), targets.end(), ca_apply(radix, radius, table, w))) out.push_back(std::move(w));
  return out;
}

}  // namespace symdyn

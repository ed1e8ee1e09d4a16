#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#include "symdyn/clopen.hpp"

namespace symdyn {

enum class Exec { Serial, Parallel };

/// Process-wide default used by the library's hot loops.
Exec default_exec();
void set_default_exec(Exec e);
int worker_count();

/// Runs f(i) for i in [0, n). Exceptions from workers are rethrown once the
/// loop has finished.
template <class F>
void for_each_index(std::size_t n, Exec e, F&& f) {
#ifdef SYMDYN_HAVE_OPENMP
  if (e == Exec::Parallel && n > 1) {
    std::exception_ptr err;
    std::mutex mu;
    const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < m; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)e;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

/// CA pre-words: all words of length len + 2r whose image under the local
/// rule lies in the sorted target set (all targets of length len).
/// Depth-first over the de Bruijn graph of (2r)-windows.
std::vector<Word> ca_preimage_words(int radix, int radius, const std::vector<Symbol>& table,
                                    const std::vector<Word>& targets, std::size_t len, Exec e);
/// Serial reference by exhaustive enumeration.
std::vector<Word> ca_preimage_brute(int radix, int radius, const std::vector<Symbol>& table,
                                    const std::vector<Word>& targets, std::size_t len);
/// Image of a word under the local rule (length shrinks by 2r).
Word ca_apply(int radix, int radius, const std::vector<Symbol>& table, const Word& w);

}  // namespace symdyn

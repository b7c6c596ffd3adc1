#include "beamwalk/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace beamwalk {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = unset, use hardware concurrency
}

void set_max_threads(int k) { g_max_threads.store(k > 0 ? k : 0); }

int max_threads() {
  int k = g_max_threads.load();
  if (k > 0) return k;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_for(int64_t n, const std::function<void(int64_t)>& fn) {
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<int64_t>(max_threads(), n));
  if (workers <= 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int64_t i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace beamwalk

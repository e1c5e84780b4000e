#include "banach/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace banach {

namespace {
std::atomic<int> g_threads{1};
}

int thread_budget() { return g_threads.load(); }

void set_thread_budget(int n) { g_threads.store(std::max(1, n)); }

void parallel_for(int n, const std::function<void(int)>& fn) {
  int budget = std::min(thread_budget(), n);
  if (budget <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  // Static block partition: thread t handles [t*chunk, min((t+1)*chunk, n)).
  int chunk = (n + budget - 1) / budget;
  std::vector<std::thread> pool;
  pool.reserve(budget);
  for (int t = 0; t < budget; ++t) {
    int lo = t * chunk;
    int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace banach

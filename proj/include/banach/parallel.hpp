#pragma once

#include <functional>

namespace banach {

// Global thread budget.  Defaults to 1; the CLI sets it from --threads or the
// BANACHLAB_THREADS environment variable.  Results are byte-identical for any
// budget: work items are statically partitioned, each item writes to its own
// slot, and reductions happen sequentially in index order afterwards.
int thread_budget();
void set_thread_budget(int n);

// Runs fn(0..n-1), possibly on several threads.  fn must only touch state
// owned by its own index.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace banach

#pragma once

#include <functional>
#include <vector>

namespace wigner {

/// Worker count from the WIGNERWALK_WORKERS environment variable, falling back
/// to the hardware concurrency, clamped to [1, 16].
int default_worker_count();

/// Runs the tasks on up to worker_count threads and joins them all.
/// Tasks must not throw; completion order is unspecified.
void run_tasks(const std::vector<std::function<void()>>& tasks, int worker_count);

}  // namespace wigner

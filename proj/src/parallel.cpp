#include "wigner/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace wigner {

int default_worker_count() {
  if (const char* env = std::getenv("WIGNERWALK_WORKERS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return std::min(requested, 16);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(static_cast<int>(hw), 1, 16);
}

void run_tasks(const std::vector<std::function<void()>>& tasks, int worker_count) {
  if (tasks.empty()) return;
  worker_count = std::clamp<int>(worker_count, 1, static_cast<int>(tasks.size()));
  if (worker_count == 1) {
    for (const auto& task : tasks) task();
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) tasks[i]();
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace wigner

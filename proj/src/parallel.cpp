#include "radcal/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace radcal {

unsigned worker_count() {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("RADCAL_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1 && static_cast<unsigned>(requested) < workers)
      workers = static_cast<unsigned>(requested);
  }
  return workers;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) threads.emplace_back(run);
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace radcal

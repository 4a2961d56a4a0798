#include "locmaass/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace locmaass {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t env_workers() {
  const char *env = std::getenv("LOCMAASS_THREADS");
  if (env == nullptr)
    return 0;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<std::size_t>(v) : 0;
  } catch (...) {
    return 0;
  }
}

} // namespace

std::size_t worker_count() {
  if (const std::size_t o = g_override.load(); o > 0)
    return o;
  if (const std::size_t e = env_workers(); e > 0)
    return e;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void set_worker_count(std::size_t n) { g_override.store(n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load())
        return;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true))
          failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t)
    pool.emplace_back(run);
  run();
  for (auto &th : pool)
    th.join();
  if (failure)
    std::rethrow_exception(failure);
}

cplx deterministic_sum(std::size_t n, const std::function<cplx(std::size_t)> &term) {
  const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<cplx> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    CompensatedComplexSum acc;
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    for (std::size_t i = lo; i < hi; ++i)
      acc += term(i);
    partial[c] = acc.value();
  });
  CompensatedComplexSum total;
  for (const cplx &p : partial)
    total += p;
  return total.value();
}

} // namespace locmaass

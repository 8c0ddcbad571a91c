#include "primepoly/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace primepoly {

unsigned worker_count() {
  if (const char* env = std::getenv("PRIMEPOLY_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::uint64_t kChunk = 256;

// Runs jobs [0, n) on up to `workers` threads, rethrowing the first exception.
void run_jobs(unsigned workers, std::uint64_t n, const std::function<void(std::uint64_t)>& job) {
  if (workers <= 1 || n <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  const unsigned spawn = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  threads.reserve(spawn);
  for (unsigned w = 0; w < spawn; ++w) {
    threads.emplace_back([&] {
      for (std::uint64_t i = next++; i < n; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::optional<std::uint64_t> first_index(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred) {
  const unsigned workers = worker_count();
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const std::uint64_t round = kChunk * workers;
  for (std::uint64_t base = 0; base < count; base += round) {
    const std::uint64_t end = std::min(count, base + round);
    const std::uint64_t chunks = (end - base + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> best(chunks, UINT64_MAX);
    run_jobs(workers, chunks, [&](std::uint64_t c) {
      const std::uint64_t lo = base + c * kChunk, hi = std::min(end, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (pred(i)) {
          best[c] = i;
          return;
        }
      }
    });
    for (auto b : best) {
      if (b != UINT64_MAX) return b;
    }
  }
  return std::nullopt;
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body) {
  run_jobs(worker_count(), count, body);
}

}  // namespace primepoly

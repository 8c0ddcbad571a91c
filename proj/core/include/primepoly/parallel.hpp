#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace primepoly {

// Worker cap: PRIMEPOLY_THREADS if set to a positive integer, else all cores.
unsigned worker_count();

// Smallest index in [0, count) satisfying pred, scanned in rounds of
// contiguous chunks spread over the workers. The answer never depends on
// the worker count. pred must be safe to call concurrently.
std::optional<std::uint64_t> first_index(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred);

// Runs body(i) for i in [0, count) across the workers. Each i is visited once.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& body);

}  // namespace primepoly

// Deterministic fan-out of per-n work over a fixed range: results land in
// per-index slots and are concatenated in index order, so the output is
// identical for any worker count.
#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace cyclo {

template <typename Fn>
auto map_range(unsigned long lo, unsigned long hi, unsigned jobs, Fn fn)
    -> std::vector<decltype(fn(lo))> {
  if (hi < lo) return {};
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<decltype(fn(lo))> slots(count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i] = fn(lo + i);
    return slots;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      slots[i] = fn(lo + i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return slots;
}

}  // namespace cyclo

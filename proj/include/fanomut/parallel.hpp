#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fanomut {

/// results[i] = fn(items[i]). Work is spread over `jobs` threads; the output
/// order never depends on scheduling. The first exception is rethrown.
template <class Item, class Fn>
auto parallel_map(const std::vector<Item>& items, Fn fn, unsigned jobs) {
  using Result = decltype(fn(items.front()));
  std::vector<Result> results(items.size());
  if (jobs <= 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(items.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(items.size()));
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace fanomut

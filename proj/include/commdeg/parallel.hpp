#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace commdeg {

/// Splits [0, total) into `workers` contiguous chunks, runs body(begin, end)
/// on each (one thread per chunk beyond the first) and returns the partial
/// results in chunk order. Exceptions from any chunk are rethrown.
template <class Body>
auto run_partitioned(std::uint64_t total, unsigned workers, Body body)
    -> std::vector<decltype(body(std::uint64_t{}, std::uint64_t{}))> {
  using Partial = decltype(body(std::uint64_t{}, std::uint64_t{}));
  workers = std::max(1u, workers);
  if (total < workers)
    workers = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  std::vector<Partial> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    try {
      parts[w] = body(begin, end);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 1; w < workers; ++w)
    threads.emplace_back(run, w);
  run(0);
  for (auto &t : threads)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return parts;
}

} // namespace commdeg

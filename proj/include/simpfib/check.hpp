// Runs an exhaustive check over an index range, optionally on several
// threads, and folds the outcome into a CheckRecord.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "simpfib/report.hpp"

namespace simpfib {

/// Worker count used by validators. 0 means "all hardware threads". The
/// environment variable SIMPFIB_JOBS, when set, takes precedence.
void set_default_jobs(unsigned jobs) noexcept;
unsigned default_jobs() noexcept;

/// Calls `probe(i)` for every i in [0, count). The probe returns a
/// counterexample description on failure. The record keeps the failure with
/// the smallest index, so the result does not depend on scheduling.
template <class Probe>
CheckRecord run_check(std::string name, int dimension, std::uint64_t count,
                      Probe&& probe, unsigned jobs = default_jobs()) {
  auto const start = std::chrono::steady_clock::now();
  CheckRecord record{std::move(name), dimension, true, count, std::nullopt, 0};

  struct Partial {
    std::uint64_t index = ~std::uint64_t{0};
    std::optional<std::string> message;
  };
  auto scan = [&probe](std::uint64_t begin, std::uint64_t end) {
    Partial partial;
    for (std::uint64_t i = begin; i < end; ++i) {
      std::optional<std::string> failure;
      try {
        failure = probe(i);
      } catch (std::exception const& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        partial.index = i;
        partial.message = std::move(failure);
        break;
      }
    }
    return partial;
  };

  unsigned const workers = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1u, jobs), std::max<std::uint64_t>(count / 64, 1)));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    partials[0] = scan(0, count);
  } else {
    std::vector<std::jthread> threads;
    auto const chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      auto begin = std::min<std::uint64_t>(count, w * chunk);
      auto end = std::min<std::uint64_t>(count, begin + chunk);
      threads.emplace_back(
          [&, w, begin, end] { partials[w] = scan(begin, end); });
    }
  }
  auto best = std::min_element(
      partials.begin(), partials.end(),
      [](Partial const& a, Partial const& b) { return a.index < b.index; });
  if (best->message) {
    record.passed = false;
    record.counterexample = std::move(best->message);
  }
  record.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return record;
}

/// A record for a single yes/no fact.
inline CheckRecord make_record(std::string name, int dimension, bool ok,
                               std::uint64_t checked,
                               std::optional<std::string> counterexample = {}) {
  return CheckRecord{std::move(name), dimension, ok, checked,
                     ok ? std::nullopt : std::move(counterexample), 0.0};
}

}  // namespace simpfib

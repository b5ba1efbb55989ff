#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace conelab {

// Worker count: CONELAB_THREADS caps it, hardware concurrency is the default.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("CONELAB_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

struct MinReduce {
  double min_value;
  std::size_t argmin;
};

// Minimum of value_at(i) over i in [0, count). value_at must be a pure
// function of i, so the result is independent of the thread split; ties go
// to the smallest index.
inline MinReduce parallel_min(std::size_t count, const std::function<double(std::size_t)>& value_at) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1)));
  std::vector<MinReduce> partial(workers, MinReduce{0.0, 0});
  auto run = [&](unsigned w) {
    const std::size_t lo = count * w / workers;
    const std::size_t hi = count * (w + 1) / workers;
    MinReduce best{0.0, count};
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = value_at(i);
      if (best.argmin == count || v < best.min_value) best = {v, i};
    }
    partial[w] = best;
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  MinReduce best{0.0, count};
  for (const auto& p : partial) {
    if (p.argmin == count) continue;
    if (best.argmin == count || p.min_value < best.min_value ||
        (p.min_value == best.min_value && p.argmin < best.argmin))
      best = p;
  }
  return best;
}

}  // namespace conelab

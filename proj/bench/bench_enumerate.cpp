// Serial reference versus OpenMP enumerate over the same range.
//   bench_enumerate [lo] [hi] [workers]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "quintic/radicand.hpp"

int main(int argc, char** argv) {
  const std::uint64_t lo = argc > 1 ? std::stoull(argv[1]) : 2;
  const std::uint64_t hi = argc > 2 ? std::stoull(argv[2]) : 200'000;
  const int workers = argc > 3 ? std::stoi(argv[3]) : omp_get_max_threads();

  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::duration d) { return std::chrono::duration<double>(d).count(); };

  auto t0 = Clock::now();
  const auto serial = quintic::enumerate_serial(lo, hi);
  auto t1 = Clock::now();
  const auto parallel = quintic::enumerate_parallel(lo, hi, std::nullopt, workers);
  auto t2 = Clock::now();

  const bool same = serial == parallel;
  std::cout << "range [" << lo << ", " << hi << "], " << serial.size() << " radicands\n";
  std::cout << "serial:   " << seconds(t1 - t0) << " s\n";
  std::cout << "parallel: " << seconds(t2 - t1) << " s with " << workers << " workers\n";
  std::cout << "speedup:  " << seconds(t1 - t0) / seconds(t2 - t1) << "\n";
  std::cout << "outputs " << (same ? "identical" : "DIFFER") << "\n";
  return same ? EXIT_SUCCESS : EXIT_FAILURE;
}

#pragma once
// Small shared utilities: a counter-based splittable RNG (samples are a pure
// function of (seed, index), so draws are order-independent and identical
// across platforms), a chunked parallel_for, and integer helpers.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace pantsatlas {

// SplitMix64 finalizer. Good avalanche, trivially reproducible.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform draw in [0,1) keyed by (seed, index).
inline double keyed_uniform(uint64_t seed, uint64_t index) {
  uint64_t h = mix64(seed ^ mix64(index));
  return double(h >> 11) * 0x1.0p-53;
}

// Worker count: PANTS_ATLAS_THREADS if set and positive, else 1.
inline int worker_count() {
  static int cached = [] {
    const char* env = std::getenv("PANTS_ATLAS_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
  }();
  return cached;
}

// Runs fn(i) for i in [0, count) on worker_count() threads, static chunking.
// Callers write results into preallocated slots indexed by i, so the outcome
// is independent of the thread count.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = std::size_t(w); i < count; i += std::size_t(workers)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline uint64_t pow3(int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// Double factorial (2n-5)!! for the trivalent tree count; n >= 3.
inline uint64_t double_factorial_odd(long long k) {
  uint64_t r = 1;
  for (long long v = k; v >= 2; v -= 2) r *= uint64_t(v);
  return r;
}

// C(n, k) without overflow for the sizes used here (result < 2^63).
inline uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace pantsatlas

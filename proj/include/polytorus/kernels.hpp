#ifndef POLYTORUS_KERNELS_HPP
#define POLYTORUS_KERNELS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polytorus {

// Every kernel has a serial reference path next to the OpenMP path; the
// parallel path is chunked so its result is bit-identical for any thread
// count.
enum class Exec { serial, parallel };

namespace kernels {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Neumaier-compensated accumulator
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      carry += (sum - t) + x;
    else
      carry += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

// Chunk width is fixed so partial sums and their combine order do not depend
// on the thread count.
inline constexpr std::int64_t kChunk = 4096;

template <class F>
double sum_mapped(std::int64_t n, F&& f, Exec exec) {
  if (exec == Exec::serial || n < 2 * kChunk) {
    CompensatedSum acc;
    for (std::int64_t i = 0; i < n; ++i) acc.add(f(i));
    return acc.value();
  }
  const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partial(static_cast<std::size_t>(nchunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t c = 0; c < nchunks; ++c) {
    CompensatedSum acc;
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(n, lo + kChunk);
    for (std::int64_t i = lo; i < hi; ++i) acc.add(f(i));
    partial[static_cast<std::size_t>(c)] = acc;
  }
  CompensatedSum total;
  for (const auto& p : partial) {
    total.add(p.sum);
    total.add(p.carry);
  }
  return total.value();
}

template <class F>
std::complex<double> sum_mapped_complex(std::int64_t n, F&& f, Exec exec) {
  struct Pair {
    CompensatedSum re, im;
  };
  auto accumulate = [&](Pair& acc, std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::complex<double> v = f(i);
      acc.re.add(v.real());
      acc.im.add(v.imag());
    }
  };
  if (exec == Exec::serial || n < 2 * kChunk) {
    Pair acc;
    accumulate(acc, 0, n);
    return {acc.re.value(), acc.im.value()};
  }
  const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<Pair> partial(static_cast<std::size_t>(nchunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t c = 0; c < nchunks; ++c) {
    Pair acc;
    accumulate(acc, c * kChunk, std::min(n, (c + 1) * kChunk));
    partial[static_cast<std::size_t>(c)] = acc;
  }
  Pair total;
  for (const auto& p : partial) {
    total.re.add(p.re.sum);
    total.re.add(p.re.carry);
    total.im.add(p.im.sum);
    total.im.add(p.im.carry);
  }
  return {total.re.value(), total.im.value()};
}

// independent per-index writes; deterministic by construction
template <class F>
void for_each_index(std::int64_t n, F&& body, Exec exec) {
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

// splitmix64; used to derive deterministic per-start seeds
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// uniform double in [-1, 1], platform-independent
inline double uniform_pm1(std::uint64_t& state) {
  state = mix64(state);
  return static_cast<double>(state >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace kernels
}  // namespace polytorus

#endif

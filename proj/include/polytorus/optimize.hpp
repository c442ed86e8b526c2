#ifndef POLYTORUS_OPTIMIZE_HPP
#define POLYTORUS_OPTIMIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "polytorus/kernels.hpp"

namespace polytorus {

// golden-section maximization on [lo, hi]; f is evaluated at interior
// points only and assumed unimodal there
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double xtol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return (f1 >= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

struct CoordinateSearchOptions {
  int starts = 20;
  double box = 1.0;  // each coordinate searched on [-box, box]
  double param_tol = 1e-6;
  int max_rounds = 40;
  std::uint64_t seed = 0x51D5EED5ull;
  Exec exec = Exec::parallel;
};

struct CoordinateSearchResult {
  double value = 0.0;
  std::vector<double> point;
  int best_start = -1;
};

// Repeated per-coordinate golden-section sweeps from multiple deterministic
// starts.  Starts run independently (parallelizable); the winner is picked
// serially with ties broken by the lowest start index, so the result does
// not depend on the thread count.  fixed_starts are tried before the random
// ones and share their indices with them.
template <class F>
CoordinateSearchResult coordinate_search_max(int nparams, F&& f,
                                             const CoordinateSearchOptions& opt,
                                             const std::vector<std::vector<double>>& fixed_starts = {}) {
  const int total = opt.starts;
  std::vector<CoordinateSearchResult> runs(static_cast<std::size_t>(total));
  kernels::for_each_index(
      total,
      [&](std::int64_t s) {
        std::vector<double> x(static_cast<std::size_t>(nparams));
        if (s < static_cast<std::int64_t>(fixed_starts.size())) {
          x = fixed_starts[static_cast<std::size_t>(s)];
          x.resize(static_cast<std::size_t>(nparams), 0.0);
        } else {
          std::uint64_t state = opt.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(s + 1);
          for (auto& xi : x) xi = kernels::uniform_pm1(state);
        }
        double best = f(x);
        for (int round = 0; round < opt.max_rounds; ++round) {
          double moved = 0.0;
          for (int i = 0; i < nparams; ++i) {
            const double old = x[static_cast<std::size_t>(i)];
            auto line = [&](double t) {
              std::vector<double> y(x);
              y[static_cast<std::size_t>(i)] = t;
              return f(y);
            };
            auto [t, v] = golden_max(line, -opt.box, opt.box, opt.param_tol);
            if (v >= best) {
              best = v;
              x[static_cast<std::size_t>(i)] = t;
              moved = std::max(moved, std::abs(t - old));
            }
          }
          if (moved < opt.param_tol) break;
        }
        runs[static_cast<std::size_t>(s)] = {best, std::move(x), static_cast<int>(s)};
      },
      opt.exec);
  CoordinateSearchResult winner = runs[0];
  for (int s = 1; s < total; ++s)
    if (runs[static_cast<std::size_t>(s)].value > winner.value) winner = runs[static_cast<std::size_t>(s)];
  return winner;
}

}  // namespace polytorus

#endif

// Timings for the OpenMP kernels against their serial reference paths.  The
// parallel paths are chunked to be bit-identical to the serial ones, so every
// row also checks that the two results match exactly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "polytorus/case_family.hpp"
#include "polytorus/hankel.hpp"
#include "polytorus/kernels.hpp"
#include "polytorus/quadrature.hpp"
#include "polytorus/weak_product.hpp"

using namespace polytorus;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

Polynomial dense_symbol(int degree) {
  Polynomial p(2);
  std::uint64_t state = 0xB0B5EED5ull;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      p.add_term(MultiIndex({i, j}), Complex(kernels::uniform_pm1(state), kernels::uniform_pm1(state)));
  return p;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", kernels::max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  const Polynomial phi = symmetric_quadratic(1.0);
  const TorusGrid grid(2, 512);

  GridSamples s_ser{grid, {}}, s_par{grid, {}};
  const double t_sample_s = best_of(3, [&] { s_ser = sample(phi, grid, Exec::serial); });
  const double t_sample_p = best_of(3, [&] { s_par = sample(phi, grid, Exec::parallel); });
  row("sample 512x512", t_sample_s, t_sample_p, s_ser.values == s_par.values);

  double l1_s = 0, l1_p = 0;
  const double t_l1_s = best_of(3, [&] { l1_s = lp_norm(s_ser, 1.0, Exec::serial); });
  const double t_l1_p = best_of(3, [&] { l1_p = lp_norm(s_par, 1.0, Exec::parallel); });
  row("lp_norm p=1", t_l1_s, t_l1_p, l1_s == l1_p);

  Complex fc_s, fc_p;
  const double t_fc_s = best_of(3, [&] { fc_s = fourier_coeff(s_ser, {1, 1}, Exec::serial); });
  const double t_fc_p = best_of(3, [&] { fc_p = fourier_coeff(s_par, {1, 1}, Exec::parallel); });
  row("fourier_coeff (1,1)", t_fc_s, t_fc_p, fc_s == fc_p);

  std::pair<double, double> mm_s, mm_p;
  const double t_mm_s = best_of(3, [&] { mm_s = modulus_moments(s_ser, Exec::serial); });
  const double t_mm_p = best_of(3, [&] { mm_p = modulus_moments(s_par, Exec::parallel); });
  row("modulus_moments", t_mm_s, t_mm_p, mm_s == mm_p);

  const Polynomial dense = dense_symbol(12);
  HankelMatrix h_ser, h_par;
  const double t_h_s = best_of(3, [&] { h_ser = build_hankel(dense, Exec::serial); });
  const double t_h_p = best_of(3, [&] { h_par = build_hankel(dense, Exec::parallel); });
  row("hankel assembly deg 12", t_h_s, t_h_p, h_ser.entries.data == h_par.entries.data);

  DualSearchOptions ser, par;
  ser.search.exec = Exec::serial;
  par.search.exec = Exec::parallel;
  WLowerBound lb_s, lb_p;
  const double t_lb_s = best_of(1, [&] { lb_s = w_lower_bound(phi, ser); });
  const double t_lb_p = best_of(1, [&] { lb_p = w_lower_bound(phi, par); });
  row("dual search 20 starts", t_lb_s, t_lb_p, lb_s.value == lb_p.value);

  return 0;
}

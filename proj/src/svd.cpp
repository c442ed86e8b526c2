#include "polytorus/svd.hpp"

#include <cmath>
#include <stdexcept>

#include "polytorus/kernels.hpp"

namespace polytorus {

namespace {

using C = std::complex<double>;

void matvec(const ComplexMatrix& a, const std::vector<C>& x, std::vector<C>& y) {
  y.assign(a.rows, C(0.0, 0.0));
  for (std::size_t r = 0; r < a.rows; ++r) {
    C acc(0.0, 0.0);
    const C* row = a.data.data() + r * a.cols;
    for (std::size_t c = 0; c < a.cols; ++c) acc += row[c] * x[c];
    y[r] = acc;
  }
}

void matvec_adj(const ComplexMatrix& a, const std::vector<C>& y, std::vector<C>& x) {
  x.assign(a.cols, C(0.0, 0.0));
  for (std::size_t r = 0; r < a.rows; ++r) {
    const C* row = a.data.data() + r * a.cols;
    const C yr = y[r];
    for (std::size_t c = 0; c < a.cols; ++c) x[c] += std::conj(row[c]) * yr;
  }
}

double norm2(const std::vector<C>& v) {
  double acc = 0.0;
  for (const C& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

}  // namespace

PowerResult sigma_max_power(const ComplexMatrix& a, double rel_tol, int max_iter) {
  if (a.rows == 0 || a.cols == 0) throw std::invalid_argument("sigma_max_power: empty matrix");
  if (a.rows * a.cols == 1) return {std::abs(a.data[0]), true, 0};

  // fixed pseudo-random start so runs are reproducible
  std::vector<C> x(a.cols);
  std::uint64_t state = 0x243F6A8885A308D3ull;
  for (auto& xi : x) xi = C(1.0 + 0.25 * kernels::uniform_pm1(state), 0.25 * kernels::uniform_pm1(state));
  double nx = norm2(x);
  for (auto& xi : x) xi /= nx;

  // Step-size stopping cannot bound the error when the top two singular
  // values nearly tie (tiny steps, large residual), so certification demands
  // a run of small steps plus post-transient contraction ratios clearly
  // below 1.
  std::vector<C> y, gx;
  double rho_prev = -1.0, change_prev = -1.0;
  double rho = 0.0;
  double ratio_window[8];
  int wpos = 0, wcount = 0;
  int small_streak = 0, zero_streak = 0;
  int it = 0;
  for (; it < max_iter; ++it) {
    matvec(a, x, y);
    rho = 0.0;
    for (const C& z : y) rho += std::norm(z);  // Rayleigh quotient of A^H A at unit x
    if (rho == 0.0) return {0.0, true, it};
    matvec_adj(a, y, gx);
    const double ng = norm2(gx);
    if (ng == 0.0) return {std::sqrt(rho), true, it};
    for (std::size_t i = 0; i < gx.size(); ++i) x[i] = gx[i] / ng;

    if (rho_prev >= 0.0) {
      const double change = std::abs(rho - rho_prev) / std::max(rho, 1e-300);
      if (change == 0.0) {
        if (++zero_streak >= 3) return {std::sqrt(rho), true, it};  // exact fixed point
      } else {
        zero_streak = 0;
      }
      if (change_prev > 0.0 && change > 0.0 && it >= 5) {
        ratio_window[wpos] = change / change_prev;
        wpos = (wpos + 1) % 8;
        wcount = std::min(wcount + 1, 8);
      }
      small_streak = (change < rel_tol) ? small_streak + 1 : 0;
      if (small_streak >= 3) {
        double qmax = 0.0;
        for (int i = 0; i < wcount; ++i) qmax = std::max(qmax, ratio_window[i]);
        const bool usable = wcount >= 3 && qmax < 0.99;
        return {std::sqrt(rho), usable, it};
      }
      if (change > 0.0) change_prev = change;
    }
    rho_prev = rho;
  }
  return {std::sqrt(rho), false, it};
}

double sigma_max_jacobi(ComplexMatrix a) {
  if (a.rows == 0 || a.cols == 0) throw std::invalid_argument("sigma_max_jacobi: empty matrix");
  if (a.rows * a.cols > 512u * 512u) throw std::invalid_argument("sigma_max_jacobi: matrix too large");

  // operate on the taller orientation; singular values are shared
  if (a.rows < a.cols) {
    ComplexMatrix t(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r)
      for (std::size_t c = 0; c < a.cols; ++c) t.at(c, r) = std::conj(a.at(r, c));
    a = std::move(t);
  }
  const std::size_t m = a.rows, n = a.cols;

  auto col_dot = [&](std::size_t i, std::size_t j) {  // <a_i, a_j>
    C acc(0.0, 0.0);
    for (std::size_t r = 0; r < m; ++r) acc += std::conj(a.at(r, i)) * a.at(r, j);
    return acc;
  };

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const C g = col_dot(i, j);
        const double ag = std::abs(g);
        double aii = 0.0, ajj = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
          aii += std::norm(a.at(r, i));
          ajj += std::norm(a.at(r, j));
        }
        const double scale = std::sqrt(aii * ajj);
        if (scale == 0.0 || ag <= 1e-300) continue;
        off = std::max(off, ag / scale);
        if (ag <= 1e-16 * scale) continue;
        // complex rotation orthogonalizing columns i and j
        const C phase = g / ag;
        const double tau = (ajj - aii) / (2.0 * ag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;
        for (std::size_t r = 0; r < m; ++r) {
          const C bi = a.at(r, i), bj = a.at(r, j);
          a.at(r, i) = cth * bi - sth * std::conj(phase) * bj;
          a.at(r, j) = sth * phase * bi + cth * bj;
        }
      }
    if (off < 1e-15) break;
  }

  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += std::norm(a.at(r, j));
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

double sigma_max(const ComplexMatrix& a) {
  // Jacobi is authoritative (machine precision regardless of the spectral
  // gap) and cheap at the matrix sizes polynomial symbols produce; power
  // iteration serves the matrices beyond its size bound.
  if (a.rows * a.cols <= 512u * 512u) return sigma_max_jacobi(a);
  return sigma_max_power(a).sigma;  // best effort; may be uncertified
}

}  // namespace polytorus

#include "polytorus/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytorus {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TorusGrid::TorusGrid(int dim_, int n_) : dim(dim_), n(n_) {
  if (dim < 1 || dim > 16) throw std::invalid_argument("TorusGrid: dimension must be in [1, 16]");
  if (n < 1) throw std::invalid_argument("TorusGrid: need at least one node per axis");
  double total = 1.0;
  for (int a = 0; a < dim; ++a) total *= n;
  if (total > 1e9) throw std::invalid_argument("TorusGrid: grid too large");
}

std::int64_t TorusGrid::node_count() const {
  std::int64_t total = 1;
  for (int a = 0; a < dim; ++a) total *= n;
  return total;
}

double TorusGrid::theta(int j) const { return kTwoPi * j / n; }

GridSamples sample(const Polynomial& p, const TorusGrid& grid, Exec exec) {
  if (p.dim() != grid.dim) throw std::invalid_argument("sample: dimension mismatch");
  const int d = grid.dim;
  const int n = grid.n;
  const std::int64_t count = grid.node_count();

  // per-axis tables of e^{i k theta_j}, k up to the axis degree
  std::vector<std::vector<Complex>> table(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    const int da = std::max(0, p.axis_degree(a));
    auto& t = table[static_cast<std::size_t>(a)];
    t.resize(static_cast<std::size_t>(da + 1) * static_cast<std::size_t>(n));
    for (int k = 0; k <= da; ++k)
      for (int j = 0; j < n; ++j)
        t[static_cast<std::size_t>(k) * n + j] = std::polar(1.0, k * grid.theta(j));
  }

  GridSamples s{grid, std::vector<Complex>(static_cast<std::size_t>(count))};
  const auto& terms = p.terms();
  kernels::for_each_index(
      count,
      [&](std::int64_t node) {
        // row-major decode: axis d-1 varies fastest
        int idx[16];
        std::int64_t rest = node;
        for (int a = d - 1; a >= 0; --a) {
          idx[a] = static_cast<int>(rest % n);
          rest /= n;
        }
        Complex acc(0.0, 0.0);
        for (const auto& [k, c] : terms) {
          Complex t = c;
          for (int a = 0; a < d; ++a)
            t *= table[static_cast<std::size_t>(a)][static_cast<std::size_t>(k[a]) * n + idx[a]];
          acc += t;
        }
        s.values[static_cast<std::size_t>(node)] = acc;
      },
      exec);
  return s;
}

double lp_norm(const GridSamples& s, double p_exp, Exec exec) {
  if (!(p_exp >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1");
  const std::int64_t count = s.grid.node_count();
  const Complex* v = s.values.data();
  double mean;
  if (p_exp == 1.0)
    mean = kernels::sum_mapped(count, [&](std::int64_t i) { return std::abs(v[i]); }, exec);
  else if (p_exp == 2.0)
    mean = kernels::sum_mapped(count, [&](std::int64_t i) { return std::norm(v[i]); }, exec);
  else
    mean = kernels::sum_mapped(count, [&](std::int64_t i) { return std::pow(std::abs(v[i]), p_exp); }, exec);
  mean /= static_cast<double>(count);
  return std::pow(mean, 1.0 / p_exp);
}

Complex fourier_coeff(const GridSamples& s, const SignedIndex& kappa, Exec exec) {
  const int d = s.grid.dim;
  const int n = s.grid.n;
  if (static_cast<int>(kappa.size()) != d)
    throw std::invalid_argument("fourier_coeff: index dimension mismatch");
  for (int a = 0; a < d; ++a)
    if (2 * std::abs(kappa[static_cast<std::size_t>(a)]) >= n)
      throw std::invalid_argument("fourier_coeff: index aliases on this grid (need |kappa| < n/2)");

  std::vector<std::vector<Complex>> table(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& t = table[static_cast<std::size_t>(a)];
    t.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      t[static_cast<std::size_t>(j)] = std::polar(1.0, -kappa[static_cast<std::size_t>(a)] * s.grid.theta(j));
  }

  const std::int64_t count = s.grid.node_count();
  const Complex* v = s.values.data();
  Complex acc = kernels::sum_mapped_complex(
      count,
      [&](std::int64_t node) {
        int idx[16];
        std::int64_t rest = node;
        for (int a = d - 1; a >= 0; --a) {
          idx[a] = static_cast<int>(rest % n);
          rest /= n;
        }
        Complex t = v[node];
        for (int a = 0; a < d; ++a) t *= table[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[a])];
        return t;
      },
      exec);
  return acc / static_cast<double>(count);
}

GridSamples sgn_samples(const GridSamples& s) {
  GridSamples out{s.grid, std::vector<Complex>(s.values.size())};
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double m = std::abs(s.values[i]);
    out.values[i] = m < kSgnZeroEps ? Complex(0.0, 0.0) : s.values[i] / m;
  }
  return out;
}

std::pair<double, double> modulus_moments(const GridSamples& s, Exec exec) {
  const std::int64_t count = s.grid.node_count();
  const Complex* v = s.values.data();
  const double m1 =
      kernels::sum_mapped(count, [&](std::int64_t i) { return std::abs(v[i]); }, exec) / static_cast<double>(count);
  const double m2 =
      kernels::sum_mapped(count, [&](std::int64_t i) { return std::norm(v[i]); }, exec) / static_cast<double>(count);
  return {m1, m2};
}

std::optional<Polynomial> circle_reduction(const Polynomial& p) {
  if (p.dim() != 2) return std::nullopt;
  const auto m = p.homogeneous_degree();
  if (!m) return std::nullopt;
  Polynomial q(1);
  for (const auto& [k, c] : p.terms()) q.add_term(MultiIndex{k[0]}, c);
  return q;
}

namespace {

GridSamples reduced_or_full_samples(const Polynomial& p, const QuadratureOptions& opt) {
  if (auto q = circle_reduction(p)) return sample(*q, TorusGrid(1, opt.n_reduced), opt.exec);
  return sample(p, TorusGrid(p.dim(), opt.n_full), opt.exec);
}

}  // namespace

double lp_norm_quad(const Polynomial& p, double p_exp, const QuadratureOptions& opt) {
  return lp_norm(reduced_or_full_samples(p, opt), p_exp, opt.exec);
}

double h1_norm(const Polynomial& p, const QuadratureOptions& opt) { return lp_norm_quad(p, 1.0, opt); }

std::pair<double, double> modulus_moments_quad(const Polynomial& p, const QuadratureOptions& opt) {
  return modulus_moments(reduced_or_full_samples(p, opt), opt.exec);
}

Complex sgn_fourier(const Polynomial& p, const SignedIndex& kappa, const QuadratureOptions& opt) {
  if (p.is_zero()) throw std::invalid_argument("sgn_fourier: zero polynomial");
  if (static_cast<int>(kappa.size()) != p.dim())
    throw std::invalid_argument("sgn_fourier: index dimension mismatch");
  if (auto q = circle_reduction(p)) {
    const int m = *p.homogeneous_degree();
    int total = 0;
    for (int k : kappa) total += k;
    if (total != m) return {0.0, 0.0};  // sgn of m-homogeneous is m-homogeneous
    auto sg = sgn_samples(sample(*q, TorusGrid(1, opt.n_reduced), opt.exec));
    return fourier_coeff(sg, SignedIndex{kappa[0]}, opt.exec);
  }
  auto sg = sgn_samples(sample(p, TorusGrid(p.dim(), opt.n_full), opt.exec));
  return fourier_coeff(sg, kappa, opt.exec);
}

double h1_hilbert_residual(const Polynomial& phi, const QuadratureOptions& opt) {
  if (phi.is_zero()) throw std::invalid_argument("h1_hilbert_residual: zero polynomial");
  const double h2 = h2_norm(phi);

  double h1;
  std::vector<std::pair<MultiIndex, Complex>> sgn_coeffs;  // over the analytic index set

  if (auto q = circle_reduction(phi)) {
    const int m = *phi.homogeneous_degree();
    auto s = sample(*q, TorusGrid(1, opt.n_reduced), opt.exec);
    h1 = lp_norm(s, 1.0, opt.exec);
    auto sg = sgn_samples(s);
    for (int k = 0; k <= m; ++k) {
      const Complex c = fourier_coeff(sg, SignedIndex{k}, opt.exec);
      sgn_coeffs.emplace_back(MultiIndex{k, m - k}, c);
    }
  } else {
    auto s = sample(phi, TorusGrid(phi.dim(), opt.n_full), opt.exec);
    h1 = lp_norm(s, 1.0, opt.exec);
    auto sg = sgn_samples(s);
    for (int m : present_degrees(phi))
      for (const auto& k : degree_indices(phi.dim(), m)) {
        SignedIndex kappa(k.exponents().begin(), k.exponents().end());
        sgn_coeffs.emplace_back(k, fourier_coeff(sg, kappa, opt.exec));
      }
  }

  const double ratio = h1 / (h2 * h2);
  double acc = 0.0;
  for (const auto& [k, c] : sgn_coeffs) acc += std::norm(c - ratio * phi.coeff(k));
  return std::sqrt(acc);
}

double h1_hilbert_residual(const Polynomial& phi, const TorusGrid& grid, Exec exec) {
  if (grid.dim != phi.dim()) throw std::invalid_argument("h1_hilbert_residual: dimension mismatch");
  QuadratureOptions opt;
  opt.n_reduced = grid.n;
  opt.n_full = grid.n;
  opt.exec = exec;
  return h1_hilbert_residual(phi, opt);
}

}  // namespace polytorus

#ifndef POLYTORUS_QUADRATURE_HPP
#define POLYTORUS_QUADRATURE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polytorus/kernels.hpp"
#include "polytorus/polynomial.hpp"

namespace polytorus {

// Uniform tensor grid theta_j = 2*pi*j/n on each axis, node weight n^-d.
// Trapezoidal quadrature on it is exact for trigonometric polynomials of
// per-axis degree < n.
struct TorusGrid {
  int dim;
  int n;
  TorusGrid(int dim_, int n_);
  std::int64_t node_count() const;
  double theta(int j) const;
};

// values in row-major node order: axis 1 slowest, axis d fastest
struct GridSamples {
  TorusGrid grid;
  std::vector<Complex> values;
};

// samples below this modulus are treated as 0 by sgn
inline constexpr double kSgnZeroEps = 1e-13;

GridSamples sample(const Polynomial& p, const TorusGrid& grid, Exec exec = Exec::parallel);
// (mean |v|^p)^(1/p); requires p_exp >= 1
double lp_norm(const GridSamples& s, double p_exp, Exec exec = Exec::parallel);
// discrete Fourier coefficient; requires |kappa_j| < n/2 on every axis
Complex fourier_coeff(const GridSamples& s, const SignedIndex& kappa, Exec exec = Exec::parallel);
// pointwise v/|v|, with 0 below kSgnZeroEps
GridSamples sgn_samples(const GridSamples& s);
// mean |v| and mean |v|^2 in one pass
std::pair<double, double> modulus_moments(const GridSamples& s, Exec exec = Exec::parallel);

// Homogeneous bivariate p factors as z2^m q(z1/z2) on the torus, so |p|
// depends on theta1 - theta2 only.  Returns the univariate q with
// q_hat(k) = p_hat(k, m-k), or nullopt when the reduction does not apply.
std::optional<Polynomial> circle_reduction(const Polynomial& p);

struct QuadratureOptions {
  int n_reduced = 4096;  // nodes for the one-variable reduced path
  int n_full = 512;      // nodes per axis for the full tensor grid
  Exec exec = Exec::parallel;
};

// dispatch: reduced one-variable path for homogeneous bivariate p, full
// tensor grid otherwise
double lp_norm_quad(const Polynomial& p, double p_exp, const QuadratureOptions& opt = {});
double h1_norm(const Polynomial& p, const QuadratureOptions& opt = {});
std::pair<double, double> modulus_moments_quad(const Polynomial& p, const QuadratureOptions& opt = {});

// Fourier coefficient of sgn(p) at kappa.  On the reduced path this is the
// one-variable coefficient at kappa[0] when |kappa| = m, and exactly 0 for
// |kappa| != m (sgn of an m-homogeneous symbol is m-homogeneous).
Complex sgn_fourier(const Polynomial& p, const SignedIndex& kappa, const QuadratureOptions& opt = {});

// l2 distance, over the analytic indices of the degrees present in phi,
// between the Fourier coefficients of sgn(phi) and (|phi|_1/|phi|_2^2) phi.
// Zero exactly when phi satisfies the H1 Hilbert-point identity on that
// index set; for homogeneous phi the set carries the whole identity.
double h1_hilbert_residual(const Polynomial& phi, const TorusGrid& grid, Exec exec = Exec::parallel);
double h1_hilbert_residual(const Polynomial& phi, const QuadratureOptions& opt = {});

}  // namespace polytorus

#endif

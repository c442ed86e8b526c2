#include "polytorus/case_family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polytorus {

namespace {
constexpr double kPi = std::numbers::pi;

void require_alpha(double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("family parameter must be >= 0");
}
}  // namespace

Polynomial symmetric_quadratic(double alpha) {
  require_alpha(alpha);
  Polynomial p(2);
  p.add_term(MultiIndex{2, 0}, Complex(1.0, 0.0));
  p.add_term(MultiIndex{1, 1}, Complex(alpha, 0.0));
  p.add_term(MultiIndex{0, 2}, Complex(1.0, 0.0));
  return p;
}

std::optional<double> match_symmetric_quadratic(const Polynomial& p) {
  if (p.dim() != 2) return std::nullopt;
  constexpr double tol = 1e-12;
  double alpha = 0.0;
  for (const auto& [k, c] : p.terms()) {
    if (std::abs(c.imag()) > tol) return std::nullopt;
    if (k == MultiIndex{2, 0} || k == MultiIndex{0, 2}) {
      if (std::abs(c.real() - 1.0) > tol) return std::nullopt;
    } else if (k == MultiIndex{1, 1}) {
      if (c.real() < 0.0) return std::nullopt;
      alpha = c.real();
    } else {
      return std::nullopt;
    }
  }
  if (p.coeff(MultiIndex{2, 0}) == Complex(0.0, 0.0) || p.coeff(MultiIndex{0, 2}) == Complex(0.0, 0.0))
    return std::nullopt;
  return alpha;
}

double family_h2(double alpha) {
  require_alpha(alpha);
  return std::sqrt(2.0 + alpha * alpha);
}

double family_h1(double alpha) {
  require_alpha(alpha);
  if (alpha > 2.0) return alpha;  // the modulus alpha + 2cos(t) no longer changes sign
  return (2.0 / kPi) * (alpha * std::asin(alpha / 2.0) + std::sqrt(4.0 - alpha * alpha));
}

double family_dual(double alpha) {
  require_alpha(alpha);
  return std::max(std::sqrt(2.0 + alpha * alpha), 1.0 + alpha);
}

double family_w(double alpha) {
  require_alpha(alpha);
  if (alpha <= 0.5) return std::sqrt(2.0 + alpha * alpha);
  if (alpha <= 2.0) return (4.0 + alpha) / 3.0;
  return alpha;
}

double family_sgn_cross(double alpha) {
  require_alpha(alpha);
  if (alpha > 2.0) return 1.0;
  return (2.0 / kPi) * std::asin(alpha / 2.0);
}

double family_sgn_edge(double alpha) {
  require_alpha(alpha);
  if (alpha > 2.0) return 0.0;
  return std::sqrt(4.0 - alpha * alpha) / kPi;
}

double family_h1_residual(double alpha) {
  require_alpha(alpha);
  const double ratio = family_h1(alpha) / (2.0 + alpha * alpha);
  const double de = family_sgn_edge(alpha) - ratio;
  const double dc = family_sgn_cross(alpha) - alpha * ratio;
  return std::sqrt(2.0 * de * de + dc * dc);
}

double witness_quotient(double alpha, double beta) {
  require_alpha(alpha);
  if (!(beta >= 0.0)) throw std::invalid_argument("witness_quotient: beta must be >= 0");
  const double denom = beta <= 0.5 ? std::sqrt(2.0 + beta * beta) : 1.0 + beta;
  return (2.0 + alpha * beta) / denom;
}

WeakFactorization family_factorization(double alpha) {
  require_alpha(alpha);
  WeakFactorization f{symmetric_quadratic(alpha), {}};
  const Polynomial one = Polynomial::constant(2, Complex(1.0, 0.0));
  if (alpha <= 0.5) {
    f.pairs.emplace_back(f.target, one);
    return f;
  }
  if (alpha <= 2.0) {
    // (2/3)(alpha - 1/2)(z1 + z2)^2 + (2/3)(2 - alpha)(z1^2 + z1 z2/2 + z2^2)
    Polynomial lin(2);
    lin.add_term(MultiIndex{1, 0}, Complex(1.0, 0.0));
    lin.add_term(MultiIndex{0, 1}, Complex(1.0, 0.0));
    Polynomial half(2);
    half.add_term(MultiIndex{2, 0}, Complex(1.0, 0.0));
    half.add_term(MultiIndex{1, 1}, Complex(0.5, 0.0));
    half.add_term(MultiIndex{0, 2}, Complex(1.0, 0.0));
    // either scalar factor can vanish at a regime boundary; keep only the
    // live pairs so the certificate has no zero factor
    if (alpha > 0.5) f.pairs.emplace_back((2.0 / 3.0) * (alpha - 0.5) * lin, lin);
    if (alpha < 2.0) f.pairs.emplace_back((2.0 / 3.0) * (2.0 - alpha) * half, one);
    return f;
  }
  // (z1 + l+ z2)(z1 + l- z2) with l+- = (alpha +- sqrt(alpha^2 - 4))/2
  const double root = std::sqrt(alpha * alpha - 4.0);
  Polynomial gp(2), gm(2);
  gp.add_term(MultiIndex{1, 0}, Complex(1.0, 0.0));
  gp.add_term(MultiIndex{0, 1}, Complex((alpha + root) / 2.0, 0.0));
  gm.add_term(MultiIndex{1, 0}, Complex(1.0, 0.0));
  gm.add_term(MultiIndex{0, 1}, Complex((alpha - root) / 2.0, 0.0));
  f.pairs.emplace_back(gp, gm);
  return f;
}

}  // namespace polytorus

#include "polytorus/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "polytorus/case_family.hpp"
#include "polytorus/hankel.hpp"

namespace polytorus {

const char* route_name(Route r) { return r == Route::closed_form ? "closed" : "numeric"; }

namespace {

// relative spread of the modulus: sqrt(m2 - m1^2)/m1 with m1 = mean |phi|,
// m2 = mean |phi|^2; zero exactly for constant modulus
double modulus_spread(double m1, double m2) {
  if (m1 <= 0.0) return 0.0;
  return std::sqrt(std::max(0.0, m2 - m1 * m1)) / m1;
}

}  // namespace

NormReport classify(const Polynomial& phi, const ClassifySettings& settings) {
  if (phi.is_zero()) throw std::invalid_argument("classify: zero polynomial");

  NormReport rep;
  rep.symbol = phi;
  rep.alpha = match_symmetric_quadratic(phi);
  rep.h2 = h2_norm(phi);

  if (rep.alpha) {
    const double a = *rep.alpha;
    rep.h1 = family_h1(a);
    rep.w_lower = rep.w_upper = family_w(a);
    rep.w_dual = family_dual(a);
    rep.h1_residual = family_h1_residual(a);
    rep.h1_route = Route::closed_form;
    rep.w_route = Route::closed_form;
    rep.tol_used = settings.tol_closed;
    // closed moments: mean |phi| = h1, mean |phi|^2 = h2^2
    rep.na_h1 = modulus_spread(rep.h1, rep.h2 * rep.h2) < rep.tol_used;
    rep.hp_h1 = rep.h1_residual < rep.tol_used;
    rep.na_w = std::abs(rep.w_dual - rep.h2) <= rep.tol_used;
    rep.hp_w = std::abs(rep.w_lower * rep.w_dual - rep.h2 * rep.h2) <= rep.tol_used;
    rep.w_conclusive = true;
    return rep;
  }

  const auto [m1, m2] = modulus_moments_quad(phi, settings.quad);
  rep.h1 = m1;
  rep.w_dual = dual_w_norm(phi, settings.quad.exec);
  rep.h1_residual = h1_hilbert_residual(phi, settings.quad);
  rep.tol_used = settings.tol_numeric;

  const auto bracket = w_bracket(phi, {}, settings.search);
  rep.w_lower = bracket.lower;
  rep.w_upper = bracket.upper;

  rep.na_h1 = modulus_spread(m1, m2) < rep.tol_used;
  rep.hp_h1 = rep.h1_residual < rep.tol_used;
  rep.na_w = std::abs(rep.w_dual - rep.h2) <= rep.tol_used;
  const bool hp_lo = std::abs(rep.w_lower * rep.w_dual - rep.h2 * rep.h2) <= rep.tol_used;
  const bool hp_hi = std::abs(rep.w_upper * rep.w_dual - rep.h2 * rep.h2) <= rep.tol_used;
  // The product test is only decided when the bracket pins it: either the
  // bracket is tight or both endpoints agree.  An undecided case reports
  // hp_w = false rather than a guess; an isolated hp_w point (the family
  // has one at alpha = 2) is therefore only detectable on the closed route.
  rep.w_conclusive = (rep.w_upper - rep.w_lower <= rep.tol_used) || (hp_lo == hp_hi);
  rep.hp_w = rep.w_conclusive && hp_lo;
  return rep;
}

double solve_alpha0(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_alpha0: tolerance must be > 0");
  auto g = [](double a) { return std::sqrt(4.0 - a * a) - (2.0 / a) * std::asin(a / 2.0); };
  double lo = 1.0, hi = 2.0;  // g(1) > 0 > g(2)
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) < tol || hi - lo < 1e-15) break;
    if (gm > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

std::vector<NormReport> classification_sweep(const std::vector<double>& alphas,
                                             const ClassifySettings& settings) {
  std::vector<NormReport> out(alphas.size());
  kernels::for_each_index(
      static_cast<std::int64_t>(alphas.size()),
      [&](std::int64_t i) {
        out[static_cast<std::size_t>(i)] =
            classify(symmetric_quadratic(alphas[static_cast<std::size_t>(i)]), settings);
      },
      settings.quad.exec);
  return out;
}

std::vector<double> default_sweep_grid() {
  return {0.0, 0.25, 0.5, 0.75, 1.0, solve_alpha0(1e-8), 1.9, 2.0, 2.5};
}

}  // namespace polytorus

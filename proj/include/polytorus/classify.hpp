#ifndef POLYTORUS_CLASSIFY_HPP
#define POLYTORUS_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "polytorus/polynomial.hpp"
#include "polytorus/quadrature.hpp"
#include "polytorus/weak_product.hpp"

namespace polytorus {

enum class Route { closed_form, numeric };
const char* route_name(Route r);

struct ClassifySettings {
  QuadratureOptions quad;
  DualSearchOptions search;
  double tol_closed = 1e-6;   // flag tolerance when every value is closed-form
  double tol_numeric = 1e-3;  // flag tolerance on the numeric route
};

struct NormReport {
  Polynomial symbol;
  std::optional<double> alpha;  // set when symbol is a symmetric_quadratic member

  double h2 = 0.0;
  double h1 = 0.0;
  double w_lower = 0.0;
  double w_upper = 0.0;
  double w_dual = 0.0;
  double h1_residual = 0.0;  // Hilbert-point residual behind hp_h1

  Route h1_route = Route::numeric;
  Route w_route = Route::numeric;

  // norm attaining / Hilbert point for (H2, H1) and (H2, W)
  bool na_h1 = false;
  bool hp_h1 = false;
  bool na_w = false;
  bool hp_w = false;
  // false when the weak-product bracket is too loose to decide hp_w; the
  // undecided case reports hp_w = false rather than a guess
  bool w_conclusive = true;

  double tol_used = 0.0;
};

// Norms and classification flags for one symbol.  Family members take the
// closed-form route for every value; other symbols take quadrature, the
// Hankel spectrum and (when homogeneous) the duality search.  The isolated
// hp_w point of the family at alpha = 2 is only detectable on the
// closed-form route; the numeric route cannot certify an isolated point.
NormReport classify(const Polynomial& phi, const ClassifySettings& settings = {});

// Parameter where the family satisfies the H1 Hilbert-point identity:
// bisection root of g(a) = sqrt(4 - a^2) - (2/a) asin(a/2) on [1, 2],
// stopping at |g| < tol.
double solve_alpha0(double tol = 1e-8);

// classify(symmetric_quadratic(alpha)) over a parameter grid
std::vector<NormReport> classification_sweep(const std::vector<double>& alphas,
                                             const ClassifySettings& settings = {});

// default sweep grid: the family's decision points including alpha0
std::vector<double> default_sweep_grid();

}  // namespace polytorus

#endif

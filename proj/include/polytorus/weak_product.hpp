#ifndef POLYTORUS_WEAK_PRODUCT_HPP
#define POLYTORUS_WEAK_PRODUCT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polytorus/optimize.hpp"
#include "polytorus/polynomial.hpp"

namespace polytorus {

// the identity sum g_j h_j = target must hold to this coefficient tolerance
// for a factorization to be usable as a norm certificate
inline constexpr double kFactorizationTol = 1e-10;

struct WeakFactorization {
  Polynomial target;
  std::vector<std::pair<Polynomial, Polynomial>> pairs;

  Polynomial residual() const;           // sum g_j h_j - target
  double max_residual_coeff() const;
  bool verify(double tol = kFactorizationTol) const;
  // sum of |g_j|_2 |h_j|_2; throws when the identity fails at kFactorizationTol
  double cost() const;

  // pairs in the polynomial text format with a trailing cost line
  std::string to_text() const;
  // target is reconstructed as the pair sum
  static WeakFactorization from_text(std::string_view text);
};

struct DualSearchOptions {
  CoordinateSearchOptions search;
};

struct WLowerBound {
  double value = 0.0;
  Polynomial witness;
};

// Duality lower bound for the weak-product norm of a homogeneous phi:
// max over real m-homogeneous psi of Re<psi, phi> / dual_w_norm(psi),
// searched coordinate-wise (swap-symmetric psi when phi is symmetric).
// The real part of phi's own coefficient vector seeds the first start, so
// for real phi the value is never below h2(phi)^2 / dual_w_norm(phi);
// w_bracket enforces that floor for every phi.
WLowerBound w_lower_bound(const Polynomial& phi, const DualSearchOptions& opt = {});

struct WNormBracket {
  double lower = 0.0;
  double upper = 0.0;
  Polynomial witness;                       // dual witness behind lower
  std::optional<std::size_t> best_certificate;  // index into the certificates passed
};

// lower from duality (search for homogeneous phi, h2^2/dual always), upper
// as the cheapest certificate among {(phi, 1)} and the ones supplied
WNormBracket w_bracket(const Polynomial& phi, const std::vector<WeakFactorization>& certificates = {},
                       const DualSearchOptions& opt = {});

}  // namespace polytorus

#endif

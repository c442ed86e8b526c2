#ifndef POLYTORUS_CASE_FAMILY_HPP
#define POLYTORUS_CASE_FAMILY_HPP

#include <optional>

#include "polytorus/polynomial.hpp"
#include "polytorus/weak_product.hpp"

namespace polytorus {

// The one-parameter family z1^2 + alpha z1 z2 + z2^2, alpha >= 0, for which
// every norm in the library has a closed form.  All formulas below are
// checked against quadrature and the Hankel spectrum in the test suite.

Polynomial symmetric_quadratic(double alpha);
// alpha when p is exactly the family member (real cross coefficient >= 0)
std::optional<double> match_symmetric_quadratic(const Polynomial& p);

double family_h2(double alpha);    // sqrt(2 + alpha^2)
double family_h1(double alpha);    // (2/pi)(alpha asin(alpha/2) + sqrt(4 - alpha^2)), alpha once alpha > 2
double family_dual(double alpha);  // max(sqrt(2 + alpha^2), 1 + alpha)

// weak-product norm: sqrt(2 + alpha^2) up to 1/2, (4 + alpha)/3 up to 2,
// alpha beyond; boundaries belong to the left regime
double family_w(double alpha);

// Fourier coefficients of sgn applied to the family member.
// cross: index (1,1), (2/pi) asin(alpha/2), saturating at 1.
// edge: indices (2,0) and (0,2), (1/pi) sqrt(4 - alpha^2), 0 beyond 2.
// The edge constant is pinned by the Hilbert-point identity: at alpha = 0
// the edge coefficient must equal |phi|_1 / |phi|_2^2 = 2/pi, and the root
// of alpha*edge = cross must solve sqrt(4 - a^2) = (2/a) asin(a/2).
double family_sgn_cross(double alpha);
double family_sgn_edge(double alpha);

// closed form of h1_hilbert_residual for the family
double family_h1_residual(double alpha);

// duality quotient of the witness z1^2 + beta z1 z2 + z2^2 against the
// family member: (2 + alpha beta) / max(sqrt(2 + beta^2), 1 + beta)
double witness_quotient(double alpha, double beta);

// cost-optimal factorization catalog: (phi, 1) up to 1/2; the two-pair
// square-plus-remainder form up to 2; the conjugate linear split beyond
WeakFactorization family_factorization(double alpha);

}  // namespace polytorus

#endif

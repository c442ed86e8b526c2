#ifndef POLYTORUS_SVD_HPP
#define POLYTORUS_SVD_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace polytorus {

struct ComplexMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::complex<double>> data;  // row-major

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  std::complex<double>& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct PowerResult {
  double sigma = 0.0;
  bool certified = false;  // stopping criterion met with a usable gap estimate
  int iterations = 0;
};

// Power iteration on the Gram product A^H A with Rayleigh-quotient stopping
// at relative change < rel_tol.  certified is true only when the observed
// post-transient contraction stays clearly below 1; a near-tie between the
// two largest singular values reports false, because step-size stopping
// cannot bound the error there.
PowerResult sigma_max_power(const ComplexMatrix& a, double rel_tol = 1e-14, int max_iter = 20000);

// One-sided Jacobi; machine precision regardless of the spectral gap, for
// matrices up to 512 x 512.
double sigma_max_jacobi(ComplexMatrix a);

// Jacobi within its size bound (authoritative), power iteration beyond.
double sigma_max(const ComplexMatrix& a);

}  // namespace polytorus

#endif

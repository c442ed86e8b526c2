#ifndef POLYTORUS_HANKEL_HPP
#define POLYTORUS_HANKEL_HPP

#include <vector>

#include "polytorus/kernels.hpp"
#include "polytorus/polynomial.hpp"
#include "polytorus/svd.hpp"

namespace polytorus {

// Matrix of the (small) Hankel operator with analytic polynomial symbol psi:
// entry(r, c) = conj(psi_hat(row_r + col_c)).  Row and column bases both
// list every multi-index dominated componentwise by some support index of
// psi, in degree-major (degree, then lex) order.
struct HankelMatrix {
  Polynomial symbol;
  std::vector<MultiIndex> row_basis;
  std::vector<MultiIndex> col_basis;
  ComplexMatrix entries;
};

HankelMatrix build_hankel(const Polynomial& psi, Exec exec = Exec::parallel);

double spectral_norm(const HankelMatrix& h);

// Dual weak-product norm of psi: the operator norm of its Hankel matrix.
double dual_w_norm(const Polynomial& psi, Exec exec = Exec::parallel);

// Degree split of the matrix of an m-homogeneous symbol: block k pairs
// degree-(m-k) rows with degree-k columns.  Entries outside these blocks
// are exactly zero, and the spectral norm is the max over blocks.
struct HankelBlock {
  int col_degree;
  ComplexMatrix m;
};
std::vector<HankelBlock> blocks(const HankelMatrix& h);

}  // namespace polytorus

#endif

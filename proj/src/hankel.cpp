#include "polytorus/hankel.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace polytorus {

namespace {

// every mu <= k componentwise, odometer order
void push_dominated(const MultiIndex& k, std::set<MultiIndex, GradedLexLess>& out) {
  const int d = k.dim();
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  while (true) {
    out.insert(MultiIndex(cur));
    int a = d - 1;
    while (a >= 0 && cur[static_cast<std::size_t>(a)] == k[a]) {
      cur[static_cast<std::size_t>(a)] = 0;
      --a;
    }
    if (a < 0) break;
    ++cur[static_cast<std::size_t>(a)];
  }
}

}  // namespace

HankelMatrix build_hankel(const Polynomial& psi, Exec exec) {
  if (psi.is_zero()) throw std::invalid_argument("build_hankel: zero symbol");

  std::set<MultiIndex, GradedLexLess> basis_set;
  for (const auto& [k, c] : psi.terms()) push_dominated(k, basis_set);
  std::vector<MultiIndex> basis(basis_set.begin(), basis_set.end());

  const std::size_t n = basis.size();
  HankelMatrix h{psi, basis, basis, ComplexMatrix(n, n)};
  kernels::for_each_index(
      static_cast<std::int64_t>(n),
      [&](std::int64_t r) {
        const auto ri = static_cast<std::size_t>(r);
        for (std::size_t c = 0; c < n; ++c)
          h.entries.at(ri, c) = std::conj(psi.coeff(h.row_basis[ri] + h.col_basis[c]));
      },
      exec);
  return h;
}

double spectral_norm(const HankelMatrix& h) { return sigma_max(h.entries); }

double dual_w_norm(const Polynomial& psi, Exec exec) { return spectral_norm(build_hankel(psi, exec)); }

std::vector<HankelBlock> blocks(const HankelMatrix& h) {
  const auto m = h.symbol.homogeneous_degree();
  if (!m) throw std::invalid_argument("blocks: symbol is not homogeneous");

  std::map<int, std::vector<std::size_t>> row_by_deg, col_by_deg;
  for (std::size_t i = 0; i < h.row_basis.size(); ++i) row_by_deg[h.row_basis[i].degree()].push_back(i);
  for (std::size_t i = 0; i < h.col_basis.size(); ++i) col_by_deg[h.col_basis[i].degree()].push_back(i);

  std::vector<HankelBlock> out;
  for (int k = 0; k <= *m; ++k) {
    const auto rit = row_by_deg.find(*m - k);
    const auto cit = col_by_deg.find(k);
    if (rit == row_by_deg.end() || cit == col_by_deg.end()) continue;
    const auto& rows = rit->second;
    const auto& cols = cit->second;
    ComplexMatrix b(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) b.at(r, c) = h.entries.at(rows[r], cols[c]);
    out.push_back({k, std::move(b)});
  }
  return out;
}

}  // namespace polytorus

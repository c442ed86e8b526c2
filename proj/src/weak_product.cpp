#include "polytorus/weak_product.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "polytorus/hankel.hpp"

namespace polytorus {

Polynomial WeakFactorization::residual() const {
  Polynomial acc(target.dim());
  for (const auto& [g, h] : pairs) acc += g * h;
  acc -= target;
  return acc;
}

double WeakFactorization::max_residual_coeff() const {
  // named local: terms() references the polynomial, which must outlive the loop
  const Polynomial r = residual();
  double worst = 0.0;
  for (const auto& [k, c] : r.terms()) worst = std::max(worst, std::abs(c));
  return worst;
}

bool WeakFactorization::verify(double tol) const { return max_residual_coeff() <= tol; }

double WeakFactorization::cost() const {
  if (!verify(kFactorizationTol))
    throw std::runtime_error("WeakFactorization::cost: pair sum does not reproduce the target");
  double acc = 0.0;
  for (const auto& [g, h] : pairs) acc += h2_norm(g) * h2_norm(h);
  return acc;
}

std::string WeakFactorization::to_text() const {
  std::string out;
  for (const auto& [g, h] : pairs) {
    out += "pair\n";
    out += polytorus::to_text(g);
    out += "*\n";
    out += polytorus::to_text(h);
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "cost %.12g\n", cost());
  out += buf;
  return out;
}

WeakFactorization WeakFactorization::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<std::string, std::string>> raw;
  std::string* cur = nullptr;
  bool saw_cost = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.rfind("pair", first) == first) {
      raw.emplace_back();
      cur = &raw.back().first;
    } else if (line[first] == '*') {
      if (raw.empty()) throw std::invalid_argument("factorization text: '*' before any pair");
      cur = &raw.back().second;
    } else if (line.rfind("cost", first) == first) {
      saw_cost = true;
    } else {
      if (!cur) throw std::invalid_argument("factorization text: term line outside a pair");
      *cur += line;
      *cur += '\n';
    }
  }
  if (raw.empty() || !saw_cost) throw std::invalid_argument("factorization text: need pairs and a cost line");
  WeakFactorization f{Polynomial(1), {}};
  for (const auto& [gs, hs] : raw)
    f.pairs.emplace_back(polynomial_from_text(gs), polynomial_from_text(hs));
  Polynomial sum(f.pairs.front().first.dim());
  for (const auto& [g, h] : f.pairs) sum += g * h;
  f.target = std::move(sum);
  return f;
}

namespace {

// orbit structure of the coefficient search space: for swap-symmetric
// bivariate phi the two mirror indices share one parameter
struct SearchSpace {
  std::vector<std::vector<MultiIndex>> orbits;
  Polynomial assemble(const std::vector<double>& c) const {
    Polynomial psi(orbits.front().front().dim());
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (const auto& k : orbits[i]) psi.add_term(k, Complex(c[i], 0.0));
    return psi;
  }
  std::vector<double> project(const Polynomial& phi, double scale) const {
    std::vector<double> c(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i)
      c[i] = phi.coeff(orbits[i].front()).real() / scale;
    return c;
  }
};

bool is_swap_symmetric(const Polynomial& p) {
  if (p.dim() != 2) return false;
  for (const auto& [k, c] : p.terms()) {
    const MultiIndex sw{k[1], k[0]};
    if (std::abs(c - p.coeff(sw)) > 1e-12) return false;
    if (std::abs(c.imag()) > 1e-12) return false;
  }
  return true;
}

SearchSpace make_space(const Polynomial& phi, int m) {
  SearchSpace sp;
  const auto idx = degree_indices(phi.dim(), m);
  if (is_swap_symmetric(phi)) {
    for (const auto& k : idx) {
      if (k[0] > k[1]) continue;  // mirror handled with (k1 <= k2) representative
      std::vector<MultiIndex> orbit{k};
      if (k[0] != k[1]) orbit.push_back(MultiIndex{k[1], k[0]});
      sp.orbits.push_back(std::move(orbit));
    }
  } else {
    for (const auto& k : idx) sp.orbits.push_back({k});
  }
  return sp;
}

}  // namespace

WLowerBound w_lower_bound(const Polynomial& phi, const DualSearchOptions& opt) {
  if (phi.is_zero()) throw std::invalid_argument("w_lower_bound: zero polynomial");
  const auto m = phi.homogeneous_degree();
  if (!m) throw std::invalid_argument("w_lower_bound: polynomial is not homogeneous");

  const SearchSpace sp = make_space(phi, *m);
  const int nparams = static_cast<int>(sp.orbits.size());

  auto objective = [&](const std::vector<double>& c) {
    double amax = 0.0;
    for (double ci : c) amax = std::max(amax, std::abs(ci));
    if (amax < 1e-9) return -1e308;
    const Polynomial psi = sp.assemble(c);
    if (psi.is_zero()) return -1e308;
    return inner_product(psi, phi).real() / dual_w_norm(psi, Exec::serial);
  };

  // the real part of phi's coefficient pattern seeds start 0; for real phi
  // the result is then at least h2(phi)^2 / dual_w_norm(phi)
  double scale = 0.0;
  for (const auto& [k, c] : phi.terms()) scale = std::max(scale, std::abs(c));
  std::vector<std::vector<double>> fixed = {sp.project(phi, scale)};

  const auto r = coordinate_search_max(nparams, objective, opt.search, fixed);

  Polynomial witness = sp.assemble(r.point);
  double amax = 0.0;
  for (const auto& [k, c] : witness.terms()) amax = std::max(amax, std::abs(c));
  if (amax > 0.0) witness *= Complex(1.0 / amax, 0.0);
  return {r.value, witness};
}

WNormBracket w_bracket(const Polynomial& phi, const std::vector<WeakFactorization>& certificates,
                       const DualSearchOptions& opt) {
  if (phi.is_zero()) throw std::invalid_argument("w_bracket: zero polynomial");

  const double h2 = h2_norm(phi);
  const double dual = dual_w_norm(phi, opt.search.exec);

  WNormBracket b;
  b.lower = h2 * h2 / dual;  // duality with phi itself as witness
  if (phi.homogeneous_degree()) {
    const auto lb = w_lower_bound(phi, opt);
    if (lb.value > b.lower) {
      b.lower = lb.value;
      b.witness = lb.witness;
    } else {
      b.witness = phi;
    }
  } else {
    b.witness = phi;
  }

  b.upper = h2;  // the trivial certificate (phi, 1)
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    const auto& cert = certificates[i];
    Polynomial gap = cert.target - phi;
    double worst = 0.0;
    for (const auto& [k, c] : gap.terms()) worst = std::max(worst, std::abs(c));
    if (cert.target.dim() != phi.dim() || worst > 1e-10)
      throw std::invalid_argument("w_bracket: certificate targets a different polynomial");
    const double c = cert.cost();  // throws when the pair identity fails
    if (c < b.upper) {
      b.upper = c;
      b.best_certificate = i;
    }
  }

  if (b.lower > b.upper + 1e-8) throw std::runtime_error("w_bracket: bracket inverted");
  return b;
}

}  // namespace polytorus

#include "polytorus/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polytorus {

Polynomial::Polynomial(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
}

Polynomial Polynomial::constant(int dim, Complex c) {
  Polynomial p(dim);
  p.add_term(MultiIndex::zero(dim), c);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& k, Complex c) {
  Polynomial p(k.dim());
  p.add_term(k, c);
  return p;
}

Complex Polynomial::coeff(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

void Polynomial::add_term(const MultiIndex& k, Complex c) {
  if (k.dim() != dim_) throw std::invalid_argument("Polynomial: index dimension mismatch");
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kCoeffCleanup) terms_.erase(it);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
  return d;
}

int Polynomial::axis_degree(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("Polynomial: axis out of range");
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k[axis]);
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int m = terms_.begin()->first.degree();
  for (const auto& [k, c] : terms_)
    if (k.degree() != m) return std::nullopt;
  return m;
}

Complex powi(Complex z, int k) {
  if (k < 0) throw std::invalid_argument("powi: negative exponent");
  Complex r(1.0, 0.0);
  while (k > 0) {
    if (k & 1) r *= z;
    z *= z;
    k >>= 1;
  }
  return r;
}

Complex Polynomial::evaluate(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("Polynomial: evaluation point dimension mismatch");
  Complex acc(0.0, 0.0);
  for (const auto& [k, c] : terms_) {
    Complex t = c;
    for (int a = 0; a < dim_; ++a) t *= powi(z[static_cast<std::size_t>(a)], k[a]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.dim_ != dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial r(a.dim_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
  Polynomial r(dim_);
  for (const auto& [k, c] : terms_) r.add_term(k, c * s);
  *this = std::move(r);
  return *this;
}

double h2_norm(const Polynomial& p) {
  double acc = 0.0;
  for (const auto& [k, c] : p.terms()) acc += std::norm(c);
  return std::sqrt(acc);
}

Complex inner_product(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  // iterate the sparser map
  const Polynomial& small = p.term_count() <= q.term_count() ? p : q;
  const Polynomial& large = p.term_count() <= q.term_count() ? q : p;
  const bool swapped = &small != &p;
  Complex acc(0.0, 0.0);
  for (const auto& [k, c] : small.terms()) {
    const Complex other = large.coeff(k);
    acc += swapped ? other * std::conj(c) : c * std::conj(other);
  }
  return acc;
}

HomogeneousPart homogeneous_part(const Polynomial& p, int m) {
  if (m < 0) throw std::invalid_argument("homogeneous_part: negative degree");
  Polynomial r(p.dim());
  for (const auto& [k, c] : p.terms())
    if (k.degree() == m) r.add_term(k, c);
  return {m, r};
}

std::vector<int> present_degrees(const Polynomial& p) {
  std::vector<int> ds;
  for (const auto& [k, c] : p.terms()) ds.push_back(k.degree());
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

namespace {

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_text(const Polynomial& p) {
  std::string out;
  for (const auto& [k, c] : p.terms()) {
    out += k.str();
    out += ' ';
    out += fmt_g17(c.real());
    out += ' ';
    out += fmt_g17(c.imag());
    out += '\n';
  }
  return out;
}

Polynomial polynomial_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int dim = -1;
  std::vector<std::pair<MultiIndex, Complex>> parsed;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> tok;
    double v;
    while (ls >> v) tok.push_back(v);
    if (!ls.eof())
      throw std::invalid_argument("polynomial text: bad token on line " + std::to_string(lineno));
    if (tok.size() < 3)
      throw std::invalid_argument("polynomial text: need k1..kd re im on line " + std::to_string(lineno));
    const int d = static_cast<int>(tok.size()) - 2;
    if (dim == -1)
      dim = d;
    else if (d != dim)
      throw std::invalid_argument("polynomial text: inconsistent dimension on line " + std::to_string(lineno));
    std::vector<int> exps(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      const double e = tok[static_cast<std::size_t>(i)];
      if (e < 0 || e != std::floor(e))
        throw std::invalid_argument("polynomial text: bad exponent on line " + std::to_string(lineno));
      exps[static_cast<std::size_t>(i)] = static_cast<int>(e);
    }
    parsed.emplace_back(MultiIndex(std::move(exps)),
                        Complex(tok[static_cast<std::size_t>(d)], tok[static_cast<std::size_t>(d) + 1]));
  }
  if (dim == -1) throw std::invalid_argument("polynomial text: no terms");
  Polynomial p(dim);
  for (const auto& [k, c] : parsed) p.add_term(k, c);
  return p;
}

}  // namespace polytorus

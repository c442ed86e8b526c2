#ifndef POLYTORUS_POLYNOMIAL_HPP
#define POLYTORUS_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polytorus/multi_index.hpp"

namespace polytorus {

using Complex = std::complex<double>;

// Coefficients with modulus below this are dropped when a polynomial is
// brought to canonical form; polynomial equality is equality of the
// canonical term maps.
inline constexpr double kCoeffCleanup = 1e-15;

// Sparse analytic polynomial on T^d.  The term map is canonical: keys in
// lexicographic order, no coefficient with |c| < kCoeffCleanup.
class Polynomial {
public:
  using TermMap = std::map<MultiIndex, Complex>;

  Polynomial() : dim_(1) {}  // zero polynomial on T^1
  explicit Polynomial(int dim);
  static Polynomial constant(int dim, Complex c);
  static Polynomial monomial(const MultiIndex& k, Complex c = Complex(1.0, 0.0));

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Complex coeff(const MultiIndex& k) const;
  void add_term(const MultiIndex& k, Complex c);  // accumulates, keeps canonical form

  int total_degree() const;         // -1 for the zero polynomial
  int axis_degree(int axis) const;  // max exponent on one axis, -1 for zero
  // m when every term has total degree m (constants are 0-homogeneous);
  // nullopt for the zero polynomial or mixed degrees
  std::optional<int> homogeneous_degree() const;

  Complex evaluate(std::span<const Complex> z) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(Complex s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, Polynomial p) { p *= s; return p; }
  friend Polynomial operator*(Polynomial p, Complex s) { p *= s; return p; }
  friend Polynomial operator*(double s, Polynomial p) { p *= Complex(s, 0.0); return p; }

  bool operator==(const Polynomial&) const = default;

private:
  int dim_;
  TermMap terms_;
};

// sqrt of the coefficient power sum (Parseval)
double h2_norm(const Polynomial& p);
// sum over shared support of p_hat * conj(q_hat)
Complex inner_product(const Polynomial& p, const Polynomial& q);

struct HomogeneousPart {
  int degree;
  Polynomial poly;
};
// degree-m slice of p; the zero polynomial of matching dimension when no
// term has degree m
HomogeneousPart homogeneous_part(const Polynomial& p, int m);

// sorted distinct total degrees present in p
std::vector<int> present_degrees(const Polynomial& p);

Complex powi(Complex z, int k);  // k >= 0

// Text form: one term per line, "k1 k2 ... kd re im", keys in lexicographic
// order.  Blank lines and lines starting with '#' are ignored on input.
std::string to_text(const Polynomial& p);
Polynomial polynomial_from_text(std::string_view text);

}  // namespace polytorus

#endif

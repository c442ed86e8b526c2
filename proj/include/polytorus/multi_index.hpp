#ifndef POLYTORUS_MULTI_INDEX_HPP
#define POLYTORUS_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polytorus {

// Exponent vector of an analytic monomial z^k on T^d.  Entries are >= 0.
class MultiIndex {
public:
  explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    for (int k : e_)
      if (k < 0) throw std::invalid_argument("MultiIndex: negative exponent");
  }
  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex zero(int dim) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
  }

  int dim() const { return static_cast<int>(e_.size()); }
  int operator[](int axis) const { return e_[static_cast<std::size_t>(axis)]; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  const std::vector<int>& exponents() const { return e_; }

  bool operator==(const MultiIndex&) const = default;
  // lexicographic; term maps iterate in this order
  auto operator<=>(const MultiIndex& o) const { return e_ <=> o.e_; }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("MultiIndex: dimension mismatch");
    std::vector<int> e(a.e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e_[i];
    return MultiIndex(std::move(e));
  }

  // true when a <= b componentwise
  static bool dominated(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("MultiIndex: dimension mismatch");
    for (int i = 0; i < a.dim(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(e_[i]);
    }
    return s;
  }

private:
  std::vector<int> e_;
};

// degree-major order (total degree, then lex); Hankel bases use it so that
// blocks of a homogeneous symbol occupy contiguous index ranges
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

// Fourier query index; components may be negative
using SignedIndex = std::vector<int>;

// all d-dimensional multi-indices of total degree m, in lexicographic order
inline std::vector<MultiIndex> degree_indices(int dim, int m) {
  if (dim < 1) throw std::invalid_argument("degree_indices: dimension must be >= 1");
  if (m < 0) throw std::invalid_argument("degree_indices: negative degree");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int axis, int rem) -> void {
    if (axis == dim - 1) {
      cur[static_cast<std::size_t>(axis)] = rem;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[static_cast<std::size_t>(axis)] = v;
      self(self, axis + 1, rem - v);
    }
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace polytorus

#endif

#include <doctest.h>

#include <cmath>
#include <vector>

#include "polytorus/case_family.hpp"
#include "polytorus/hankel.hpp"
#include "polytorus/kernels.hpp"

using namespace polytorus;

namespace {

Polynomial two_var_sum() {
  Polynomial p(2);
  p.add_term(MultiIndex{1, 0}, Complex(1.0, 0.0));
  p.add_term(MultiIndex{0, 1}, Complex(1.0, 0.0));
  return p;
}

Polynomial random_homogeneous(std::uint64_t seed, int m) {
  Polynomial p(2);
  std::uint64_t state = seed;
  for (const auto& k : degree_indices(2, m))
    p.add_term(k, Complex(kernels::uniform_pm1(state), kernels::uniform_pm1(state)));
  return p;
}

}  // namespace

TEST_CASE("frozen matrix of the symmetric quadratic at alpha = 1") {
  const HankelMatrix h = build_hankel(symmetric_quadratic(1.0));
  const std::vector<MultiIndex> expect_basis = {MultiIndex{0, 0}, MultiIndex{0, 1},
                                                MultiIndex{1, 0}, MultiIndex{0, 2},
                                                MultiIndex{1, 1}, MultiIndex{2, 0}};
  CHECK(h.row_basis == expect_basis);
  CHECK(h.col_basis == expect_basis);
  REQUIRE(h.entries.rows == 6);
  REQUIRE(h.entries.cols == 6);
  const double expect[6][6] = {
      {0, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
      {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0},
  };
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      CHECK(h.entries.at(r, c) == Complex(expect[r][c], 0.0));
  CHECK(spectral_norm(h) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("tiny symbols") {
  const HankelMatrix one = build_hankel(Polynomial::constant(2, Complex(1.0, 0.0)));
  REQUIRE(one.entries.rows == 1);
  REQUIRE(one.entries.cols == 1);
  CHECK(one.entries.at(0, 0) == Complex(1.0, 0.0));
  CHECK(spectral_norm(one) == doctest::Approx(1.0).epsilon(1e-15));

  // conjugation: entries are conjugated coefficients
  const HankelMatrix ci = build_hankel(Polynomial::constant(2, Complex(0.0, 2.0)));
  CHECK(ci.entries.at(0, 0) == Complex(0.0, -2.0));

  const HankelMatrix lin = build_hankel(two_var_sum());
  CHECK(lin.row_basis.size() == 3);  // (0,0), (0,1), (1,0)
  CHECK(spectral_norm(lin) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(build_hankel(Polynomial(2)), std::invalid_argument);
}

TEST_CASE("dual norms of the quadratic family match the closed form") {
  // max(sqrt(2 + a^2), 1 + a), the larger of the edge block and cross block
  for (double a = 0.0; a <= 4.0; a += 0.01) {
    const double expect = std::max(std::sqrt(2.0 + a * a), 1.0 + a);
    CHECK(dual_w_norm(symmetric_quadratic(a)) == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK(dual_w_norm(symmetric_quadratic(0.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(dual_w_norm(symmetric_quadratic(0.5)) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(dual_w_norm(symmetric_quadratic(3.0)) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("degree blocks of homogeneous symbols") {
  const HankelMatrix h = build_hankel(symmetric_quadratic(0.7));
  const auto bl = blocks(h);
  REQUIRE(bl.size() == 3);
  CHECK(bl[0].col_degree == 0);
  CHECK(bl[0].m.rows == 3);  // degree-2 rows x the constant column
  CHECK(bl[0].m.cols == 1);
  CHECK(bl[1].col_degree == 1);
  CHECK(bl[1].m.rows == 2);
  CHECK(bl[1].m.cols == 2);
  CHECK(bl[2].col_degree == 2);
  CHECK(bl[2].m.rows == 1);
  CHECK(bl[2].m.cols == 3);
  // edge blocks carry the coefficient vector, the middle block is
  // ((a, 1), (1, a))
  CHECK(sigma_max(bl[0].m) == doctest::Approx(std::sqrt(2.49)).epsilon(1e-13));
  CHECK(sigma_max(bl[1].m) == doctest::Approx(1.7).epsilon(1e-13));
  CHECK(sigma_max(bl[2].m) == doctest::Approx(std::sqrt(2.49)).epsilon(1e-13));

  CHECK_THROWS_AS(blocks(build_hankel(Polynomial::constant(2, Complex(1.0, 0.0)) + two_var_sum())),
                  std::invalid_argument);
}

TEST_CASE("entries outside the degree blocks vanish identically") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int m = 1 + static_cast<int>(kernels::mix64(seed) % 4);
    const Polynomial psi = random_homogeneous(seed * 577, m);
    if (psi.is_zero()) continue;
    const HankelMatrix h = build_hankel(psi);
    int inside = 0;
    for (std::size_t r = 0; r < h.entries.rows; ++r)
      for (std::size_t c = 0; c < h.entries.cols; ++c) {
        if (h.row_basis[r].degree() + h.col_basis[c].degree() == m)
          ++inside;
        else
          CHECK(h.entries.at(r, c) == Complex(0.0, 0.0));
      }
    CHECK(inside > 0);

    // and the spectral norm is the max over blocks
    double best = 0.0;
    for (const auto& b : blocks(h)) best = std::max(best, sigma_max(b.m));
    CHECK(spectral_norm(h) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("duality inequality against rank-one certificates") {
  // |<p q, psi>| <= dual(psi) |p|_2 |q|_2 for the pairing on coefficients
  std::uint64_t state = 0xABCDEF12ull;
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial psi = random_homogeneous(kernels::mix64(state = kernels::mix64(state)), 2);
    if (psi.is_zero()) continue;
    const double dual = dual_w_norm(psi);
    Polynomial p(2), q(2);
    for (const auto& k : degree_indices(2, 1)) {
      p.add_term(k, Complex(kernels::uniform_pm1(state), kernels::uniform_pm1(state)));
      q.add_term(k, Complex(kernels::uniform_pm1(state), kernels::uniform_pm1(state)));
    }
    const double lhs = std::abs(inner_product(p * q, psi));
    CHECK(lhs <= dual * h2_norm(p) * h2_norm(q) + 1e-9);
  }
}

TEST_CASE("dual norm dominates the h2 norm") {
  // taking q = 1 in the duality pairing gives dual(psi) >= |psi|_2
  std::uint64_t state = 0x13572468ull;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(kernels::mix64(state = kernels::mix64(state)) % 4);
    const Polynomial psi = random_homogeneous(state, m);
    if (psi.is_zero()) continue;
    CHECK(dual_w_norm(psi) >= h2_norm(psi) - 1e-10);
  }
}

#include <doctest.h>

#include <cmath>
#include <complex>

#include "polytorus/kernels.hpp"
#include "polytorus/svd.hpp"

using namespace polytorus;

namespace {

ComplexMatrix random_matrix(std::uint64_t seed, std::size_t r, std::size_t c) {
  ComplexMatrix m(r, c);
  std::uint64_t state = seed;
  for (auto& v : m.data) v = {kernels::uniform_pm1(state), kernels::uniform_pm1(state)};
  return m;
}

double frobenius(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& v : m.data) acc += std::norm(v);
  return std::sqrt(acc);
}

double max_col_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    double acc = 0.0;
    for (std::size_t r = 0; r < m.rows; ++r) acc += std::norm(m.at(r, c));
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = std::conj(m.at(r, c));
  return t;
}

}  // namespace

TEST_CASE("closed-form spectral norms") {
  ComplexMatrix one(1, 1);
  one.at(0, 0) = {3.0, -4.0};
  CHECK(sigma_max(one) == doctest::Approx(5.0).epsilon(1e-15));

  ComplexMatrix diag(3, 3);
  diag.at(0, 0) = 1.0;
  diag.at(1, 1) = 5.0;
  diag.at(2, 2) = 2.0;
  CHECK(sigma_max(diag) == doctest::Approx(5.0).epsilon(1e-13));

  for (double a : {0.0, 0.3, 1.0, 2.5}) {
    ComplexMatrix sym(2, 2);
    sym.at(0, 0) = sym.at(1, 1) = 1.0;
    sym.at(0, 1) = sym.at(1, 0) = a;
    CHECK(sigma_max(sym) == doctest::Approx(1.0 + a).epsilon(1e-13));

    ComplexMatrix row(1, 3);
    row.at(0, 0) = 1.0;
    row.at(0, 1) = a;
    row.at(0, 2) = 1.0;
    CHECK(sigma_max(row) == doctest::Approx(std::sqrt(2.0 + a * a)).epsilon(1e-13));
  }

  // A^H A = ((1, i), (-i, 2)) has top eigenvalue (3+sqrt(5))/2, so sigma is
  // the golden ratio
  ComplexMatrix g(2, 2);
  g.at(0, 0) = 1.0;
  g.at(0, 1) = {0.0, 1.0};
  g.at(1, 1) = 1.0;
  CHECK(sigma_max(g) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
}

TEST_CASE("jacobi stays within the column-norm and frobenius bracket") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t r = 1 + (kernels::mix64(seed * 3) % 12);
    const std::size_t c = 1 + (kernels::mix64(seed * 7 + 1) % 12);
    const ComplexMatrix m = random_matrix(seed * 1013, r, c);
    const double s = sigma_max_jacobi(m);
    CHECK(s >= max_col_norm(m) - 1e-12);
    CHECK(s <= frobenius(m) + 1e-12);
  }
}

TEST_CASE("certified power iteration matches jacobi") {
  int certified_count = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t r = 2 + (kernels::mix64(seed * 11) % 10);
    const std::size_t c = 2 + (kernels::mix64(seed * 13 + 5) % 10);
    const ComplexMatrix m = random_matrix(seed * 2027, r, c);
    const double exact = sigma_max_jacobi(m);
    const PowerResult p = sigma_max_power(m);
    if (p.certified) {
      ++certified_count;
      CHECK(p.sigma == doctest::Approx(exact).epsilon(1e-10));
    }
  }
  // random complex matrices have well-separated top singular values almost
  // surely, so certification should be the normal outcome
  CHECK(certified_count > 150);
}

TEST_CASE("near-tied top singular values never yield a wrong certificate") {
  // step-size stopping cannot bound the error when sigma_1 and sigma_2
  // nearly coincide; the result must be either honest (uncertified) or right
  ComplexMatrix m(2, 2);
  m.at(0, 0) = 1.5;
  m.at(1, 1) = 1.5 * (1.0 - 7e-8);
  const PowerResult p = sigma_max_power(m);
  if (p.certified) CHECK(p.sigma == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(sigma_max(m) == doctest::Approx(1.5).epsilon(1e-13));

  ComplexMatrix tie(3, 3);
  tie.at(0, 0) = 2.0;
  tie.at(1, 1) = 2.0;
  tie.at(2, 2) = 0.5;
  const PowerResult q = sigma_max_power(tie);
  // an exact tie is benign: any mix of the two top directions is optimal
  CHECK(q.sigma == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(sigma_max(tie) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("scaling and orientation invariance") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const ComplexMatrix m = random_matrix(seed * 3011, 3, 7);
    const double s = sigma_max(m);
    CHECK(sigma_max(adjoint(m)) == doctest::Approx(s).epsilon(1e-12));
    ComplexMatrix scaled = m;
    for (auto& v : scaled.data) v *= std::complex<double>(0.0, -2.5);
    CHECK(sigma_max(scaled) == doctest::Approx(2.5 * s).epsilon(1e-12));
  }
}

TEST_CASE("large matrices route to power iteration") {
  ComplexMatrix big(520, 520);  // 520^2 exceeds the jacobi bound
  big.at(0, 0) = 3.0;
  big.at(1, 1) = 1.0;
  big.at(519, 519) = {0.0, 2.0};
  CHECK(sigma_max(big) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK_THROWS_AS(sigma_max_jacobi(big), std::invalid_argument);
}

TEST_CASE("degenerate shapes are rejected") {
  CHECK_THROWS_AS(sigma_max(ComplexMatrix()), std::invalid_argument);
  CHECK_THROWS_AS(sigma_max_jacobi(ComplexMatrix(0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(sigma_max_power(ComplexMatrix(3, 0)), std::invalid_argument);
}

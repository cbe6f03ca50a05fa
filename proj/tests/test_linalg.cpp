#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "exspec/linalg.hpp"

using namespace exspec;

namespace {

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

IntMatrix complete(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i != j;
  return m;
}

}  // namespace

TEST_CASE("char_poly small cases") {
  CHECK(char_poly(complete(3)) == IntPolynomial{-2, -3, 0, 1});
  CHECK(char_poly(IntMatrix(1)) == IntPolynomial{0, 1});
  CHECK(char_poly(IntMatrix(0)) == IntPolynomial{1});
  IntMatrix q{{1, 9, 2}, {2, 8, 0}, {2, 0, 1}};
  CHECK(char_poly(q).evaluate(mpz_class(2)) == 0);
}

TEST_CASE("char_poly agrees with fraction-free determinant at integer points") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {2u, 5u, 9u, 17u, 40u}) {
    IntMatrix m = random_symmetric(rng, n, -3, 3);
    m(0, n - 1) += 1;  // also exercise a non-symmetric matrix
    IntPolynomial p = char_poly(m);
    REQUIRE(p.is_monic());
    REQUIRE(p.degree() == static_cast<int>(n));
    CHECK(-p.coeff(n - 1) == m.trace());
    std::uniform_int_distribution<int> xs(-50, 50);
    for (int t = 0; t < 10; ++t) {
      mpz_class x = xs(rng);
      CHECK(p.evaluate(x) == char_poly_at(m, x));
    }
  }
}

TEST_CASE("coefficients beyond 64 bits") {
  IntPolynomial p = char_poly(complete(60));
  CHECK(p == IntPolynomial::linear_root(59) * IntPolynomial::linear_root(-1).pow(59));
}

TEST_CASE("factor_spectrum") {
  auto s = factor_spectrum(IntPolynomial{-2, -3, 0, 1});
  CHECK(s.mult_two == 1);
  CHECK(s.mult_minus_one == 2);
  CHECK(s.residual == IntPolynomial{1});

  s = factor_spectrum(char_poly(complete(4)));
  CHECK(s.mult_two == 0);
  CHECK(s.mult_minus_one == 3);
  CHECK(s.residual == IntPolynomial::linear_root(3));
  REQUIRE(s.residual_roots.size() == 1);
  CHECK(std::abs(s.residual_roots[0].value - 3.0) < 1e-12);
  CHECK(s.reconstruct() == char_poly(complete(4)));
}

TEST_CASE("real root isolation") {
  IntPolynomial p = IntPolynomial{-6, -2, 1} * IntPolynomial{0, 1}.pow(2);  // roots 1 +- sqrt 7, 0 twice
  auto roots = real_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].value == doctest::Approx(1 - std::sqrt(7.0)).epsilon(1e-12));
  CHECK(std::abs(roots[1].value) < 1e-12);
  CHECK(roots[1].multiplicity == 2);
  CHECK(roots[3].value == doctest::Approx(1 + std::sqrt(7.0)).epsilon(1e-12));
  for (const auto& r : roots) CHECK(r.error_bound <= 1e-12);

  CHECK(count_roots_between(p, -1, 2) == 2);
  CHECK(count_roots_between(p, 0, 2) == 0);
  CHECK(count_roots_between(p, 0, 0, false, true) == 1);
  CHECK(count_roots_between(p, 0, 0, true, false) == 1);
  CHECK(real_roots(IntPolynomial{1, 0, 1}).empty());
}

TEST_CASE("Jacobi eigenvalues") {
  auto ev = eigenvalues_symmetric(complete(3));
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(-1.0));

  IntMatrix j5(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t k = 0; k < 5; ++k) j5(i, k) = 1;
  ev = eigenvalues_symmetric(j5);
  CHECK(std::abs(ev[0] - 5.0) < 1e-9);
  for (std::size_t i = 1; i < 5; ++i) CHECK(std::abs(ev[i]) < 1e-9);

  IntMatrix bad{{0, 1}, {0, 0}};
  CHECK_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);

  std::mt19937_64 rng(11);
  IntMatrix m = random_symmetric(rng, 30, -2, 2);
  ev = eigenvalues_symmetric(m);
  double sum = 0;
  for (double v : ev) sum += v;
  CHECK(std::abs(sum - static_cast<double>(m.trace())) < 1e-9);
  auto exact = real_roots(char_poly(m));
  REQUIRE(exact.size() == 30);
  std::reverse(exact.begin(), exact.end());
  for (std::size_t i = 0; i < 30; ++i) CHECK(std::abs(ev[i] - exact[i].value) < 1e-9);
}

TEST_CASE("PSD and rank certificates") {
  auto c = psd_rank_certificate(IntMatrix{{-1, 1}, {1, 2}});
  CHECK_FALSE(c.is_psd);
  CHECK(c.rank == 2);

  IntMatrix a = complete(4);
  IntMatrix s = a * a - a - 2 * IntMatrix::identity(4);
  c = psd_rank_certificate(s);
  CHECK(c.is_psd);
  CHECK(c.rank == 1);

  c = psd_rank_certificate(IntMatrix{{0, 1}, {1, 0}});
  CHECK_FALSE(c.is_psd);
  c = psd_rank_certificate(IntMatrix{{0, 0}, {0, 3}});
  CHECK(c.is_psd);
  CHECK(c.rank == 1);
  c = psd_rank_certificate(IntMatrix{{1, 1}, {1, 1}});
  CHECK(c.is_psd);
  CHECK(c.rank == 1);
  CHECK_THROWS_AS(psd_rank_certificate(IntMatrix{{0, 1}, {0, 0}}), std::invalid_argument);

  CHECK(exact_rank(IntMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 3}}) == 5);
}

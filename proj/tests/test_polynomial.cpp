#include "doctest.h"
#include "exspec/polynomial.hpp"

using exspec::IntPolynomial;

TEST_CASE("polynomial arithmetic") {
  IntPolynomial p{-2, -3, 0, 1};  // x^3 - 3x - 2
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(p.evaluate(mpz_class(2)) == 0);
  CHECK(p.evaluate(mpz_class(-1)) == 0);
  CHECK(p == IntPolynomial::linear_root(2) * IntPolynomial::linear_root(-1).pow(2));
  CHECK(p.to_string() == "x^3 - 3x - 2");
  CHECK(p.derivative() == IntPolynomial{-3, 0, 3});
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
}

TEST_CASE("division") {
  IntPolynomial p{-2, -3, 0, 1};
  auto [q, r] = p.divmod_monic(IntPolynomial::linear_root(2));
  CHECK(r.is_zero());
  CHECK(q == IntPolynomial{1, 2, 1});
  CHECK(p.deflate(-1) == IntPolynomial{-2, -1, 1});
  CHECK_THROWS_AS(p.deflate(1), std::domain_error);
  CHECK(exact_quotient(p, IntPolynomial{1, 2, 1}) == IntPolynomial::linear_root(2));
  CHECK_THROWS_AS(exact_quotient(p, IntPolynomial{1, 0, 1}), std::domain_error);
}

TEST_CASE("gcd and square-free parts") {
  IntPolynomial a = IntPolynomial::linear_root(2) * IntPolynomial::linear_root(-1).pow(2) * IntPolynomial{-7, 0, 1}.pow(3);
  auto parts = exspec::squarefree_decomposition(a);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == IntPolynomial::linear_root(2));
  CHECK(parts[1] == IntPolynomial::linear_root(-1));
  CHECK(parts[2] == IntPolynomial{-7, 0, 1});
  CHECK(exspec::poly_gcd(a, a.derivative()) == IntPolynomial::linear_root(-1) * IntPolynomial{-7, 0, 1}.pow(2));
}

TEST_CASE("dyadic sign evaluation") {
  IntPolynomial p{-2, 0, 1};  // x^2 - 2
  CHECK(p.sign_at_dyadic(mpz_class(181), 7) < 0);   // 1.4140625
  CHECK(p.sign_at_dyadic(mpz_class(363), 8) > 0);   // 1.41796875
  CHECK(p.sign_at_dyadic(mpz_class(0), 0) < 0);
}

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace exspec {

/// Dense polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// x - root
  static IntPolynomial linear_root(long root);
  static IntPolynomial x_power(std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero beyond the degree.
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  mpz_class evaluate(const mpz_class& x) const;
  /// Sign of p(num / 2^shift), computed exactly.
  int sign_at_dyadic(const mpz_class& num, unsigned long shift) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;

  IntPolynomial derivative() const;
  /// Content (gcd of coefficients), positive; zero for the zero polynomial.
  mpz_class content() const;
  /// Divide out the content and make the leading coefficient positive.
  IntPolynomial primitive_part() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  IntPolynomial pow(unsigned k) const;

  /// Quotient and remainder by a monic divisor.
  std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;
  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  IntPolynomial pseudo_remainder(const IntPolynomial& divisor) const;
  /// Exact synthetic division by (x - root); requires p(root) == 0.
  IntPolynomial deflate(long root) const;

  /// e.g. "x^3 - 3x - 2"
  std::string to_string(char var = 'x') const;
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Primitive gcd over Z[x] (positive leading coefficient).
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// Exact quotient a / b over Z[x]; throws if b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition (Yun). Entry i holds the primitive factor whose
/// roots have multiplicity i + 1; unit factors are returned as constant 1.
std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p);

}  // namespace exspec

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "exspec/polynomial.hpp"

namespace exspec {

/// Square integer matrix. Entries are machine integers; everything derived
/// from them (determinants, characteristic polynomials, elimination) is done
/// in arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const std::int64_t> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  bool is_symmetric() const;
  std::int64_t trace() const;
  /// Largest absolute row sum; bounds every eigenvalue in modulus.
  std::int64_t max_abs_row_sum() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Real root of an integer polynomial: midpoint of a certified isolating
/// interval, the half-width of that interval, and its multiplicity.
struct IsolatedRoot {
  double value = 0.0;
  double error_bound = 0.0;
  int multiplicity = 1;
};

/// Characteristic polynomial split as (x-2)^p (x+1)^q g(x) with g(2), g(-1) != 0.
struct ExactSpectrum {
  std::size_t mult_two = 0;
  std::size_t mult_minus_one = 0;
  IntPolynomial residual;
  /// One entry per root counted with multiplicity, ascending.
  std::vector<IsolatedRoot> residual_roots;

  std::size_t exceptional_count() const { return residual.degree() < 0 ? 0 : static_cast<std::size_t>(residual.degree()); }
  /// (x-2)^p (x+1)^q g(x)
  IntPolynomial reconstruct() const;
  /// Every eigenvalue, descending.
  std::vector<double> eigenvalues() const;
};

/// det(xI - M), exact and monic.
IntPolynomial char_poly(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntMatrix& m);
/// det(x I - M) at one integer point, by fraction-free elimination.
mpz_class char_poly_at(const IntMatrix& m, const mpz_class& x);

/// Exact rank by fraction-free elimination with full pivoting.
std::size_t exact_rank(const IntMatrix& m);

/// Divide out every factor (x-2) and (x+1); isolate the real roots of the rest.
ExactSpectrum factor_spectrum(const IntPolynomial& p);
/// Same split without root isolation.
ExactSpectrum deflate_spectrum(const IntPolynomial& p);

/// Real roots counted with multiplicity, ascending, each refined to width `tol`.
std::vector<IsolatedRoot> real_roots(const IntPolynomial& p, double tol = 1e-12);

/// Number of real roots in the open interval (lo, hi), multiplicities counted.
/// Infinite endpoints are expressed by passing lo_infinite / hi_infinite.
std::size_t count_roots_between(const IntPolynomial& p, long lo, long hi, bool lo_infinite = false, bool hi_infinite = false);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotation, descending.
/// Throws std::invalid_argument for a non-symmetric input.
std::vector<double> eigenvalues_symmetric(const IntMatrix& m, double tol = 1e-12);
std::vector<double> eigenvalues_symmetric(std::vector<double> a, std::size_t n, double tol = 1e-12);

struct PsdCertificate {
  bool is_psd = false;
  std::size_t rank = 0;
};

/// Exact positive-semidefiniteness and rank of a symmetric integer matrix.
PsdCertificate psd_rank_certificate(const IntMatrix& m);

}  // namespace exspec

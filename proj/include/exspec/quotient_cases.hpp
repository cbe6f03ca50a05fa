#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exspec/linalg.hpp"

namespace exspec {

/// Multivariate integer polynomial in the single-letter variables a, b, k, m, x.
class ParamPolynomial {
 public:
  static constexpr std::string_view kVariables = "abkmx";
  using Exponents = std::array<int, 5>;

  ParamPolynomial() = default;
  static ParamPolynomial constant(const mpz_class& c);
  static ParamPolynomial variable(char name);

  /// Parses sums and products such as "2am^2-x+(1+x)(a-b)"; juxtaposition
  /// multiplies and '^' takes a non-negative integer exponent.
  static ParamPolynomial parse(std::string_view text);

  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  int degree_in(char name) const;

  /// Substitute the given values (every variable except x) and return the
  /// remaining polynomial in x.
  IntPolynomial in_x(const std::map<char, long>& values) const;

  ParamPolynomial operator+(const ParamPolynomial& o) const;
  ParamPolynomial operator-() const;
  ParamPolynomial operator*(const ParamPolynomial& o) const;
  ParamPolynomial pow(unsigned e) const;
  friend bool operator==(const ParamPolynomial&, const ParamPolynomial&) = default;

 private:
  void prune();
  std::map<Exponents, mpz_class> terms_;
};

class ExpressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One quotient matrix from the completeness argument together with its claimed
/// characteristic polynomial (if any) and the claimed parameter values where
/// 2 is an eigenvalue.
struct QuotientCase {
  std::string name;
  std::vector<char> params;
  std::function<IntMatrix(const std::map<char, long>&)> matrix;
  std::optional<std::string> claimed;
  /// Parameter box searched for roots: inclusive bounds; missing upper bounds default to 200.
  std::map<char, long> lower;
  std::map<char, long> upper;
  /// Extra domain restriction (e.g. a >= b); empty means none.
  std::function<bool(const std::map<char, long>&)> domain;
  /// Claimed parameter values where 2 is an eigenvalue, listed over the
  /// non-free parameters; `two_predicate`, when set, replaces the list.
  std::vector<std::map<char, long>> expected_two;
  std::function<bool(const std::map<char, long>&)> two_predicate;
  /// Parameters the claim does not depend on.
  std::vector<char> free_params;
  std::string leads_to;  // catalog kind reached when the claim selects parameters
  bool minus_one_always = false;  // (x+1) is a factor for every parameter value
  bool two_simple = false;        // claimed multiplicity of 2 is one, with no other root at 2 or -1
};

struct QuotientCaseReport {
  std::string name;
  bool identity_checked = false;
  bool identity_holds = true;
  int sign = 0;  // claimed == sign * det(xI - Q)
  std::size_t grid_points = 0;
  std::string counterexample;
  std::size_t searched = 0;
  std::vector<std::map<char, long>> found_two;  // restricted to non-free parameters
  bool two_matches = false;
  bool minus_one_matches = false;
  bool multiplicity_matches = true;
  std::string detail;
  bool passed() const { return identity_holds && two_matches && minus_one_matches && multiplicity_matches; }
};

const std::vector<QuotientCase>& quotient_cases();

QuotientCaseReport verify_quotient_case(const QuotientCase& c);

struct QuotientCasesReport {
  std::vector<QuotientCaseReport> cases;
  bool passed() const;
};

/// Checks every claimed quotient polynomial against det(xI - Q) on a grid that
/// exceeds the per-variable degrees, and reproduces the claimed eigenvalue-2
/// parameter sets by exhaustive search.
QuotientCasesReport verify_quotient_polynomials();

std::string format_params(const std::map<char, long>& values);

}  // namespace exspec

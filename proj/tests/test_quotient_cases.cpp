#include <doctest.h>

#include "exspec/quotient_cases.hpp"

using namespace exspec;

TEST_CASE("parameter polynomial parsing") {
  const auto p = ParamPolynomial::parse("2am^2 - x + (1+x)(a-b)");
  CHECK(p.degree_in('m') == 2);
  CHECK(p.degree_in('b') == 1);
  CHECK(p.degree_in('k') == 0);
  CHECK(ParamPolynomial{}.degree_in('a') == -1);
  // 2*1*9 - x + (1+x)(1-4) at a=1,b=4,m=3
  CHECK(p.in_x({{'a', 1}, {'b', 4}, {'m', 3}}) == IntPolynomial{15, -4});
  CHECK(ParamPolynomial::parse("(a+b)^2") == ParamPolynomial::parse("a^2+2ab+b^2"));
  CHECK(ParamPolynomial::parse("-x^3") == -ParamPolynomial::parse("x*x*x"));
  CHECK(ParamPolynomial::parse("a-a") == ParamPolynomial{});
  CHECK_THROWS_AS(ParamPolynomial::parse("a+"), ExpressionError);
  CHECK_THROWS_AS(ParamPolynomial::parse("(a"), ExpressionError);
  CHECK_THROWS_AS(ParamPolynomial::parse("y"), ExpressionError);
  CHECK_THROWS_AS(ParamPolynomial::parse("a^b"), ExpressionError);
  CHECK_THROWS_AS(ParamPolynomial::parse("a").in_x({}), ExpressionError);
}

TEST_CASE("a wrong claimed polynomial is caught") {
  QuotientCase c = quotient_cases().front();
  c.claimed = "a-ab-x+2ax+bx-2x^2+ax^2+bx^2-x^3+ab";
  const auto r = verify_quotient_case(c);
  CHECK_FALSE(r.identity_holds);
  CHECK_FALSE(r.counterexample.empty());
  CHECK_FALSE(r.passed());
}

TEST_CASE("a wrong root set is caught") {
  QuotientCase c = quotient_cases()[1];
  c.expected_two.pop_back();
  const auto r = verify_quotient_case(c);
  CHECK(r.identity_holds);
  CHECK_FALSE(r.two_matches);
}

TEST_CASE("every quotient case reproduces") {
  const auto rep = verify_quotient_polynomials();
  REQUIRE(rep.cases.size() == 11);
  for (const auto& r : rep.cases) {
    INFO(r.name << ": " << r.detail << r.counterexample);
    CHECK(r.passed());
    if (r.identity_checked) CHECK(r.grid_points > 0);
  }
  CHECK(rep.passed());
}

TEST_CASE("sign conventions of the claimed polynomials") {
  const auto rep = verify_quotient_polynomials();
  std::map<std::string, int> sign;
  for (const auto& r : rep.cases) sign[r.name] = r.sign;
  CHECK(sign["clique-pair-with-vertex"] == -1);
  CHECK(sign["two-edge-neighbourhoods"] == 1);
  CHECK(sign["independent-set-with-matching-and-apex"] == 1);
  CHECK(sign["triangles-with-vertex"] == 0);
}

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "exspec/families.hpp"
#include "exspec/spectral.hpp"

using namespace exspec;

TEST_CASE("spectrum summaries") {
  Graph g = pad_with_triangles(Graph::complete(3), 2);
  auto s = spectrum_summary(g);
  CHECK(s.mult_two == 3);
  CHECK(s.mult_minus_one == 6);
  CHECK(*s.residual == IntPolynomial{1});

  for (std::size_t t : {1u, 2u, 4u, 6u}) {
    s = spectrum_summary(Graph::complete(t));
    CHECK(s.mult_two == 0);
    CHECK(s.mult_minus_one == t - 1);
    CHECK(*s.residual == IntPolynomial::linear_root(static_cast<long>(t) - 1));
  }

  // C4: {2, 0, 0, -2}
  s = spectrum_summary(Graph::cycle(4));
  CHECK(s.mult_two == 1);
  CHECK(s.mult_minus_one == 0);
  CHECK(*s.residual == IntPolynomial{0, 0, 2, 1});
  REQUIRE(s.exceptional.size() == 3);
  CHECK(std::abs(s.exceptional[0].value + 2) < 1e-12);
  CHECK(std::abs(s.exceptional[2].value) < 1e-12);

  auto num = spectrum_summary(Graph::cycle(4), SpectrumMode::Numeric);
  CHECK(num.mult_two == 1);
  CHECK(num.exceptional_count() == 3);
  CHECK_FALSE(num.char_poly.has_value());
}

TEST_CASE("exceptional counts") {
  CHECK(exceptional_count(pad_with_triangles(Graph::complete(3), 1)) == 0);
  CHECK(exceptional_count(Graph::complete(5)) == 1);
  CHECK(exceptional_count(build_family(FamilyDescriptor::type_IV(2))) == 2);
  CHECK(eigenvalues_above(Graph::complete(5), 2) == 1);
  CHECK(eigenvalues_below(Graph::star(5), -1) == 1);
}

TEST_CASE("quotients") {
  const auto d = FamilyDescriptor::type_I(3, 4);
  Graph g = build_family(d);
  auto sizes = block_sizes(d);
  auto q = quotient(g, Partition::from_sizes(sizes));
  REQUIRE(q.equitable);
  CHECK(q.q == IntMatrix{{2, 12}, {3, 2}});

  q = quotient(g, Partition::discrete(g.order()));
  REQUIRE(q.equitable);
  CHECK(q.q == g.adjacency_matrix());

  Partition p3{{{0, 2}, {1}}};
  q = quotient(Graph::path(3), p3);
  REQUIRE(q.equitable);
  CHECK(q.q == IntMatrix{{0, 1}, {2, 0}});

  Partition bad{{{0, 1}, {2, 3}}};
  CHECK_FALSE(quotient(Graph::path(4), bad).equitable);
  CHECK_THROWS_AS(verify_quotient_eigenvalues(Graph::path(4), bad), std::invalid_argument);
  Partition overlap{{{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(quotient(Graph::path(3), overlap), std::invalid_argument);
}

TEST_CASE("quotient polynomial divides the graph polynomial for every natural partition") {
  for (const auto& d : catalog_descriptors(40)) {
    Graph g = build_family(d);
    auto v = verify_quotient_eigenvalues(g, Partition::from_sizes(block_sizes(d)));
    INFO(to_string(d));
    CHECK(v.divides);
    // the residual quadratic survives into the quotient
    auto cs = claimed_spectrum(d);
    CHECK(v.quotient_poly.divmod_monic(cs.residual()).second.is_zero());
  }
  Graph g = build_family(FamilyDescriptor::type_II(3, 2));
  auto v = verify_quotient_eigenvalues(g, Partition::discrete(g.order()));
  CHECK(v.cofactor == IntPolynomial{1});
}

TEST_CASE("interlacing criterion") {
  Graph p5 = Graph::path(5);
  std::vector<std::size_t> all5{0, 1, 2, 3, 4};
  CHECK_FALSE(interlacing_forbidden(p5, all5));
  std::vector<std::size_t> all6{0, 1, 2, 3, 4, 5};
  // the star's only negative eigenvalue is -sqrt 5; the second smallest is 0
  CHECK_FALSE(interlacing_forbidden(Graph::star(5), all6));
  CHECK(interlacing_forbidden(Graph::cycle(5), all5));
  // 2K3 has eigenvalue 2 twice exactly: needs the exact fallback, and is not forbidden
  auto c = interlacing_check(pad_with_triangles(Graph::complete(3), 1), all6);
  CHECK(c.exact_fallback);
  CHECK_FALSE(c.forbidden);
  // 2K4 has lambda_2 = 3
  CHECK(interlacing_forbidden(disjoint_union(Graph::complete(4), Graph::complete(4)), std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("interlacing soundness on random small graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng() % 6;
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (rng() % 3) s.push_back(v);
    if (s.size() < 2) continue;
    if (interlacing_forbidden(g, s)) CHECK((eigenvalues_above(g, 2) >= 2 || eigenvalues_below(g, -1) >= 2));
  }
}

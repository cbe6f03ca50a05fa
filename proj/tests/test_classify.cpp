#include <doctest.h>

#include <numeric>
#include <random>

#include "exspec/classify.hpp"

using namespace exspec;

namespace {
Graph triangles(std::size_t n) { return pad_with_triangles(Graph(0), n); }
}  // namespace

TEST_CASE("trichotomy verdicts") {
  auto v = classify(triangles(7));
  CHECK(v.verdict == VerdictCase::AllTwoMinusOne);
  CHECK(v.padding == 7);
  CHECK(v.exceptional == 0);

  v = classify(pad_with_triangles(Graph::complete(6), 2));
  CHECK(v.verdict == VerdictCase::OneExceptional);
  CHECK(v.padding == 2);
  CHECK(v.core_orders == std::vector<std::size_t>{6});

  v = classify(pad_with_triangles(disjoint_union(Graph::complete(4), Graph::complete(5)), 1));
  CHECK(v.verdict == VerdictCase::UnionOfCompletes);
  CHECK(v.core_orders == std::vector<std::size_t>{4, 5});

  v = classify(pad_with_triangles(build_family(FamilyDescriptor::type_I(3, 4)), 2));
  CHECK(v.verdict == VerdictCase::MemberOfF);
  REQUIRE(v.descriptor);
  CHECK(*v.descriptor == FamilyDescriptor::type_I(3, 4));
  CHECK(v.padding == 2);
  CHECK(v.canonical_confirmed == true);

  v = classify(Graph::cycle(5));
  CHECK(v.verdict == VerdictCase::NotInScope);
  CHECK(v.exceptional == 4);

  // K_1 alone: eigenvalue 0
  CHECK(classify(Graph::complete(1)).verdict == VerdictCase::OneExceptional);
  CHECK(classify(Graph(0)).verdict == VerdictCase::AllTwoMinusOne);
}

TEST_CASE("two exceptional eigenvalues on both sides of 2 is a gap") {
  // P3 has eigenvalues +-sqrt2 and 0: three exceptional, out of scope
  CHECK(classify(Graph::path(3)).verdict == VerdictCase::NotInScope);
  // K_{1,3}: +-sqrt3 and 0 twice
  CHECK(classify(Graph::star(3)).verdict == VerdictCase::NotInScope);
}

TEST_CASE("catalog graphs round-trip through the classifier") {
  for (const auto& d : sweep_descriptors()) {
    const Graph core = build_family(d);
    for (std::size_t beta : {0u, 1u, 5u}) {
      const auto v = classify(pad_with_triangles(core, beta));
      INFO(to_string(d) << " beta=" << beta << " " << v.reason);
      REQUIRE(v.verdict == VerdictCase::MemberOfF);
      CHECK(*v.descriptor == d);
      CHECK(v.padding == beta);
      CHECK(v.canonical_confirmed.has_value() == (core.order() <= 64));
    }
  }
}

TEST_CASE("catalog lookup is unique by spectrum") {
  for (const auto& d : catalog_descriptors(60)) CHECK(catalog_lookup(order(d), claimed_spectrum(d)).size() == 1);
}

TEST_CASE("classification is relabelling invariant") {
  std::mt19937_64 rng(11);
  std::vector<Graph> samples = {pad_with_triangles(build_family(FamilyDescriptor::type_II(3, 2)), 2),
                                build_family(FamilyDescriptor::type_VIII(4, 10)),
                                pad_with_triangles(Graph::complete(5), 1), Graph::cycle(7)};
  for (const Graph& g : samples) {
    const auto base = classify(g);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(classify(relabel(g, perm)) == base);
    }
  }
}

TEST_CASE("degree certificates") {
  auto v = degree_certificates(Graph::path(4));
  CHECK(std::count_if(v.begin(), v.end(), [](const Violation& x) { return x.kind == ViolationKind::LowDegree; }) == 4);

  // two leaves of K_{1,3}: det S = (1-2)(1-2) - 1 = 0 is not flagged
  v = degree_certificates(Graph::star(3));
  CHECK(std::none_of(v.begin(), v.end(), [](const Violation& x) { return x.kind == ViolationKind::NegativeDetS; }));
  CHECK(std::count_if(v.begin(), v.end(), [](const Violation& x) { return x.kind == ViolationKind::LowDegree; }) == 3);

  CHECK(degree_certificates(triangles(4)).empty());
  for (const auto& d : sweep_descriptors()) {
    INFO(to_string(d));
    CHECK(degree_certificates(pad_with_triangles(build_family(d), 1)).empty());
  }
}

TEST_CASE("psd rank-2 check") {
  auto c = psd_rank2_check(build_family(FamilyDescriptor::type_II(2, 2)));
  CHECK(c.holds);
  CHECK(c.rank == 2);
  c = psd_rank2_check(Graph::complete(4));
  CHECK(c.holds);
  CHECK(c.rank == 1);
  CHECK_FALSE(psd_rank2_check(Graph::cycle(5)).holds);
}

#include <doctest.h>

#include <set>

#include "exspec/canonical.hpp"
#include "exspec/classify.hpp"
#include "exspec/enumerate.hpp"

using namespace exspec;

namespace {
// connected graphs on 1..10 vertices (OEIS A001349)
constexpr std::size_t kKnown[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};
}

TEST_CASE("small orders by hand") {
  const auto three = connected_graphs(3);
  REQUIRE(three.size() == 2);
  std::set<CanonicalForm> forms;
  for (const auto& g : three) forms.insert(canonical_form(g));
  CHECK(forms == std::set<CanonicalForm>{canonical_form(Graph::path(3)), canonical_form(Graph::complete(3))});
  CHECK(connected_graphs(1).size() == 1);
  CHECK(connected_graphs(2).size() == 1);
}

TEST_CASE("augmentation emits each class once") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<CanonicalForm> forms;
    std::size_t count = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      CHECK(is_connected(g));
      CHECK(g.order() == n);
      forms.insert(canonical_form(g));
      ++count;
    });
    CHECK(forms.size() == count);
    CHECK(count == kKnown[n]);
  }
}

TEST_CASE("augmentation agrees with the brute-force oracle") {
  for (std::size_t n = 1; n <= 7; ++n) {
    INFO("n=" << n);
    CHECK(brute_force_connected_count(n) == kKnown[n]);
    CHECK(count_connected_graphs(n) == brute_force_connected_count(n));
  }
}

TEST_CASE("split work gives the same count for any job count") {
  const std::size_t n = 7;
  std::size_t below = 0;
  for (const auto& r : split_roots(n)) for_each_below(r, n, [&](const Graph&) { ++below; });
  CHECK(below == kKnown[n]);
  std::size_t calls = 0;
  EnumerationOptions opt;
  opt.jobs = 3;
  opt.progress = [&](std::size_t done, std::size_t total) {
    ++calls;
    CHECK(done <= total);
  };
  CHECK(count_connected_graphs(n, opt) == kKnown[n]);
  CHECK(calls == split_roots(n).size());
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = connected_graphs(6), b = connected_graphs(6);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_graph6(a[i]) == to_graph6(b[i]));
}

TEST_CASE("order caps") {
  CHECK_THROWS_AS(connected_graphs(11, true), EnumerationCapError);
  CHECK_THROWS_AS(count_connected_graphs(10), EnumerationCapError);
  CHECK_THROWS_AS(connected_graphs(0), EnumerationCapError);
  CHECK_THROWS_AS(brute_force_connected_count(9), EnumerationCapError);
}

TEST_CASE("survey of small orders") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = survey(n);
    INFO("n=" << n);
    CHECK(r.passed());
    CHECK(r.connected == kKnown[n]);
    CHECK(r.exceptional_zero == (n == 3 ? 1u : 0u));
    CHECK(r.exceptional_one == (n == 3 ? 0u : 1u));
    CHECK(r.match_count() == r.exceptional_two);
  }
  auto r = survey(7);
  CHECK(r.matches == std::map<FamilyDescriptor, std::size_t>{{FamilyDescriptor::type_I(1, 2), 1}});
  r = survey(8, {.jobs = 2});
  CHECK(r.matches == std::map<FamilyDescriptor, std::size_t>{{FamilyDescriptor::type_I(2, 2), 1}});
  CHECK(r.members.size() == 1);
}

TEST_CASE("spectral mates of small catalog graphs are only the padded ones") {
  // Any graph cospectral with H has components whose char polys divide char_poly(H).
  for (const auto& d : catalog_descriptors(9)) {
    const Graph h = build_family(d);
    const std::size_t n = h.order();
    const IntPolynomial target = char_poly(h.adjacency_matrix());
    std::vector<std::pair<std::size_t, IntPolynomial>> pieces;  // (order, char poly)
    for (std::size_t m = 1; m <= n; ++m)
      for_each_connected_graph(m, [&](const Graph& g) {
        IntPolynomial p = char_poly(g.adjacency_matrix());
        if (target.divmod_monic(p).second.is_zero()) pieces.push_back({m, std::move(p)});
      });
    // multisets of pieces whose product is exactly target
    std::size_t mates = 0;
    std::function<void(std::size_t, std::size_t, IntPolynomial)> rec = [&](std::size_t from, std::size_t left, IntPolynomial rest) {
      if (left == 0) {
        mates += rest.degree() == 0;
        return;
      }
      for (std::size_t i = from; i < pieces.size(); ++i) {
        if (pieces[i].first > left) continue;
        auto [q, r] = rest.divmod_monic(pieces[i].second);
        if (r.is_zero()) rec(i, left - pieces[i].first, q);
      }
    };
    rec(0, n, target);
    INFO(to_string(d));
    // H itself is the only graph with this spectrum on n vertices
    CHECK(mates == 1);
  }
}

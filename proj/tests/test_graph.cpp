#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "exspec/canonical.hpp"
#include "exspec/graph.hpp"

using namespace exspec;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Independent isomorphism oracle: least upper-triangle string over all n! orders.
std::string brute_canonical(const Graph& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t j = 1; j < g.order(); ++j)
      for (std::size_t i = 0; i < j; ++i) s += g.has_edge(p[i], p[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph::complete(3)) == "Bw");
  CHECK(from_graph6("Bw") == Graph::complete(3));
  CHECK(from_graph6(">>graph6<<Bw\n") == Graph::complete(3));
  CHECK(to_graph6(Graph::path(3)) == "Bg");
}

TEST_CASE("graph6 errors are distinct") {
  auto code = [](std::string_view s) {
    try {
      from_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  CHECK(code("") == static_cast<int>(Graph6Errc::MalformedHeader));
  CHECK(code("~") == static_cast<int>(Graph6Errc::MalformedHeader));
  CHECK(code("D") == static_cast<int>(Graph6Errc::TruncatedPayload));
  CHECK(code("B\x01") == static_cast<int>(Graph6Errc::InvalidCharacter));
  CHECK(code("Bww") == static_cast<int>(Graph6Errc::ExcessPayload));
  const int bx = code("Bx");
  CHECK((bx == -1 || bx == static_cast<int>(Graph6Errc::InvalidCharacter)));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    Graph g = random_graph(rng, rng() % 13, 0.5);
    REQUIRE(from_graph6(to_graph6(g)) == g);
  }
  for (std::size_t n : {62u, 63u, 64u, 65u, 130u}) {
    Graph g = random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("basic structure") {
  Graph k4 = Graph::complete(4);
  CHECK(k4.degree(0) == 3);
  CHECK(k4.common_neighbors(0, 1) == 2);
  CHECK(Graph(1).degree(0) == 0);
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(2)));

  Graph two = pad_with_triangles(Graph::complete(3), 1);
  CHECK(two == disjoint_union(Graph::complete(3), Graph::complete(3)));
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);

  std::vector<std::size_t> s{4, 1, 2};
  CHECK(induced_subgraph(Graph::complete(5), s) == Graph::complete(3));
  std::vector<std::size_t> all{0, 1, 2, 3};
  Graph p4 = Graph::path(4);
  CHECK(induced_subgraph(p4, all) == p4);
  std::vector<std::size_t> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(p4, bad), std::out_of_range);

  auto nc = non_cut_vertices(p4);
  CHECK(nc == std::vector<bool>{true, false, false, true});
  CHECK(std::ranges::all_of(non_cut_vertices(Graph::cycle(5)), [](bool b) { return b; }));
}

TEST_CASE("canonical form is relabelling invariant") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 10;
    Graph g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    Graph h = relabel(g, random_perm(rng, n));
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
  CHECK(canonical_form(Graph::complete(3)) != canonical_form(Graph::path(3)));
}

TEST_CASE("canonical form separates exactly the brute-force classes") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 4; n <= 6; ++n) {
    std::set<std::string> brute, fast;
    std::set<std::pair<std::string, std::string>> pairs;
    for (int t = 0; t < 400; ++t) {
      Graph g = random_graph(rng, n, 0.5);
      auto b = brute_canonical(g);
      auto f = canonical_form(g).graph6;
      brute.insert(b);
      fast.insert(f);
      pairs.insert({b, f});
    }
    CHECK(brute.size() == fast.size());
    CHECK(pairs.size() == brute.size());
  }
}

TEST_CASE("automorphism orbits") {
  auto lab = canonical_labeling(Graph::path(5));
  CHECK(lab.orbit == std::vector<std::size_t>{0, 1, 2, 1, 0});
  lab = canonical_labeling(Graph::cycle(7));
  CHECK(std::ranges::all_of(lab.orbit, [](std::size_t o) { return o == 0; }));
  for (const auto& gen : lab.generators) {
    Graph c = Graph::cycle(7);
    CHECK(relabel(c, gen) == c);
  }
  Graph star = Graph::star(4);
  std::vector<int> colors{0, 1, 1, 2, 2};
  lab = canonical_labeling(star, colors);
  CHECK(lab.orbit[1] == lab.orbit[2]);
  CHECK(lab.orbit[2] != lab.orbit[3]);
  CHECK_THROWS_AS(canonical_form(Graph(65)), std::length_error);
}

TEST_CASE("canonical form on larger symmetric graphs") {
  std::mt19937_64 rng(13);
  Graph g = pad_with_triangles(Graph::complete(5), 15);
  CHECK(canonical_form(g) == canonical_form(relabel(g, random_perm(rng, g.order()))));
  Graph h = random_graph(rng, 64, 0.5);
  CHECK(canonical_form(h) == canonical_form(relabel(h, random_perm(rng, 64))));
}

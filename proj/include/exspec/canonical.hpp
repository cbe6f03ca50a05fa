#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "exspec/graph.hpp"

namespace exspec {

/// Result of the individualization-refinement search.
struct CanonicalLabeling {
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<std::size_t> order;
  /// position[v] is the canonical position of original vertex v.
  std::vector<std::size_t> position;
  /// Automorphisms discovered during the search (vertex v maps to gen[v]).
  /// They generate the full automorphism group.
  std::vector<std::vector<std::size_t>> generators;
  /// Smallest vertex of each vertex's automorphism orbit.
  std::vector<std::size_t> orbit;
  Graph canonical_graph;
};

/// Canonical relabelling: equitable refinement from the degree partition,
/// individualization of the first non-singleton cell, and backtracking with
/// automorphism pruning; the lexicographically least relabelled adjacency is
/// selected. `colors`, when non-empty, gives a vertex colouring that every
/// relabelling must respect (cells ordered by colour value).
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

/// graph6 text of the canonically relabelled graph; equal iff isomorphic.
struct CanonicalForm {
  std::string graph6;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kDefaultCanonicalBound = 64;

/// Throws std::length_error when g has more than `max_order` vertices.
CanonicalForm canonical_form(const Graph& g, std::size_t max_order = kDefaultCanonicalBound);

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t max_order = kDefaultCanonicalBound);

}  // namespace exspec

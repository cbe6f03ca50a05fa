#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exspec/linalg.hpp"

namespace exspec {

/// Simple undirected graph on vertices 0..n-1. Adjacency rows are bitsets so
/// that neighbourhood intersections reduce to word-wise AND + popcount.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  /// From a symmetric 0/1 matrix with zero diagonal; throws otherwise.
  static Graph from_adjacency(const IntMatrix& a);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  std::size_t edge_count() const;

  bool has_edge(std::size_t u, std::size_t v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U; }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::span<const std::uint64_t> row(std::size_t v) const { return {bits_.data() + v * words_, words_}; }
  std::size_t degree(std::size_t v) const;
  std::size_t common_neighbors(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// N(u) \ {v} is contained in N(v).
  bool neighborhood_contained(std::size_t u, std::size_t v) const;

  IntMatrix adjacency_matrix() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Adjacency restricted to `vertices`, relabelled 0..|S|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

std::vector<std::vector<std::size_t>> components(const Graph& g);
bool is_connected(const Graph& g);
/// Vertices whose removal leaves the graph connected (every vertex of K1/K2).
std::vector<bool> non_cut_vertices(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);
/// G together with `count` disjoint triangles appended after its vertices.
Graph pad_with_triangles(const Graph& g, std::size_t count);
/// Copy of g with vertices permuted: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

bool is_complete(const Graph& g);

// graph6 ------------------------------------------------------------------

enum class Graph6Errc { MalformedHeader, TruncatedPayload, InvalidCharacter, ExcessPayload };

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Graph6Errc code() const { return code_; }

 private:
  Graph6Errc code_;
};

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix; surrounding whitespace is trimmed.
Graph from_graph6(std::string_view text);

}  // namespace exspec

#include "exspec/graph.hpp"

#include <algorithm>

namespace exspec {

Graph Graph::from_adjacency(const IntMatrix& a) {
  const std::size_t n = a.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i) != 0) throw std::invalid_argument("Graph: adjacency has a loop");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != a(j, i)) throw std::invalid_argument("Graph: adjacency is not symmetric");
      if (a(i, j) != 0 && a(i, j) != 1) throw std::invalid_argument("Graph: adjacency entries must be 0 or 1");
      if (a(i, j) == 1) g.add_edge(i, j);
    }
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(std::size_t v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const {
  check_vertex(u);
  check_vertex(v);
  std::size_t d = 0;
  auto ru = row(u), rv = row(v);
  for (std::size_t k = 0; k < words_; ++k) d += static_cast<std::size_t>(std::popcount(ru[k] & rv[k]));
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  check_vertex(v);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (has_edge(v, u)) out.push_back(u);
  return out;
}

bool Graph::neighborhood_contained(std::size_t u, std::size_t v) const {
  auto ru = row(u), rv = row(v);
  for (std::size_t k = 0; k < words_; ++k) {
    std::uint64_t extra = ru[k] & ~rv[k];
    if ((v >> 6) == k) extra &= ~(std::uint64_t{1} << (v & 63));
    if (extra) return false;
  }
  return true;
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix a(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = has_edge(i, j) ? 1 : 0;
  return a;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  for (auto v : vertices)
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j]) throw std::invalid_argument("induced_subgraph: repeated vertex");
      else if (g.has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const std::size_t v = comp[head];
      for (std::size_t u = 0; u < n; ++u)
        if (!seen[u] && g.has_edge(v, u)) {
          seen[u] = true;
          comp.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::vector<bool> non_cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = g.words();
  std::vector<bool> out(n, false);
  std::vector<std::uint64_t> reached(words), frontier(words), next(words);
  for (std::size_t skip = 0; skip < n; ++skip) {
    if (n <= 2) {
      out[skip] = true;
      continue;
    }
    const std::size_t start = skip == 0 ? 1 : 0;
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    reached[start >> 6] |= std::uint64_t{1} << (start & 63);
    frontier = reached;
    const std::uint64_t skip_mask = std::uint64_t{1} << (skip & 63);
    bool grew = true;
    while (grew) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          auto r = g.row(v);
          for (std::size_t k = 0; k < words; ++k) next[k] |= r[k];
        }
      }
      next[skip >> 6] &= ~skip_mask;
      grew = false;
      for (std::size_t k = 0; k < words; ++k) {
        frontier[k] = next[k] & ~reached[k];
        if (frontier[k]) grew = true;
        reached[k] |= next[k];
      }
    }
    std::size_t count = 0;
    for (auto w : reached) count += static_cast<std::size_t>(std::popcount(w));
    out[skip] = count == n - 1;
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t off = g.order();
  Graph u(off + h.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) u.add_edge(i, j);
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = i + 1; j < h.order(); ++j)
      if (h.has_edge(i, j)) u.add_edge(off + i, off + j);
  return u;
}

Graph pad_with_triangles(const Graph& g, std::size_t count) {
  Graph u(g.order() + 3 * count);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) u.add_edge(i, j);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t b = g.order() + 3 * t;
    u.add_edge(b, b + 1);
    u.add_edge(b, b + 2);
    u.add_edge(b + 1, b + 2);
  }
  return u;
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  Graph h(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (g.has_edge(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// ---------------------------------------------------------------------------
// graph6: N(n) header followed by the upper triangle, column by column, in
// 6-bit groups offset by 63.

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error(Graph6Errc::MalformedHeader, "graph6: empty input");

  auto value = [&](std::size_t pos) -> int {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw Graph6Error(Graph6Errc::InvalidCharacter, "graph6: invalid character at offset " + std::to_string(pos));
    return c - 63;
  };

  std::size_t n = 0, pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(value(0));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error(Graph6Errc::MalformedHeader, "graph6: truncated 8-byte header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(value(i));
    if (n <= 258047) throw Graph6Error(Graph6Errc::MalformedHeader, "graph6: non-minimal 8-byte header");
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error(Graph6Errc::MalformedHeader, "graph6: truncated 4-byte header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(value(i));
    if (n <= 62) throw Graph6Error(Graph6Errc::MalformedHeader, "graph6: non-minimal 4-byte header");
    pos = 4;
  }

  const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  const std::size_t available = text.size() - pos;
  for (std::size_t i = pos; i < text.size(); ++i) value(i);
  if (available < nchars)
    throw Graph6Error(Graph6Errc::TruncatedPayload, "graph6: expected " + std::to_string(nchars) + " payload bytes, got " +
                                                        std::to_string(available));
  if (available > nchars) throw Graph6Error(Graph6Errc::ExcessPayload, "graph6: trailing bytes after payload");

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int chunk = value(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

}  // namespace exspec

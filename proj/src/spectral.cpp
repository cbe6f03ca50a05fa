#include "exspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exspec {

SpectrumSummary spectrum_summary(const Graph& g, SpectrumMode mode, double cluster_tol) {
  SpectrumSummary s;
  s.mode = mode;
  s.order = g.order();
  if (mode == SpectrumMode::Exact) {
    IntPolynomial p = char_poly(g.adjacency_matrix());
    ExactSpectrum e = factor_spectrum(p);
    s.mult_two = e.mult_two;
    s.mult_minus_one = e.mult_minus_one;
    s.exceptional = std::move(e.residual_roots);
    s.residual = std::move(e.residual);
    s.char_poly = std::move(p);
    return s;
  }
  for (double v : eigenvalues_symmetric(g.adjacency_matrix())) {
    if (std::abs(v - 2.0) < cluster_tol)
      ++s.mult_two;
    else if (std::abs(v + 1.0) < cluster_tol)
      ++s.mult_minus_one;
    else
      s.exceptional.push_back({v, cluster_tol, 1});
  }
  std::reverse(s.exceptional.begin(), s.exceptional.end());
  return s;
}

std::size_t exceptional_count(const Graph& g) { return deflate_spectrum(char_poly(g.adjacency_matrix())).exceptional_count(); }

std::size_t eigenvalues_above(const Graph& g, long hi) { return count_roots_between(char_poly(g.adjacency_matrix()), hi, 0, false, true); }

std::size_t eigenvalues_below(const Graph& g, long lo) { return count_roots_between(char_poly(g.adjacency_matrix()), 0, lo, true, false); }

Partition Partition::from_sizes(std::span<const std::size_t> sizes) {
  Partition p;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<std::size_t> cell(s);
    for (auto& v : cell) v = next++;
    p.cells.push_back(std::move(cell));
  }
  return p;
}

Partition Partition::discrete(std::size_t n) {
  Partition p;
  for (std::size_t v = 0; v < n; ++v) p.cells.push_back({v});
  return p;
}

void Partition::validate(std::size_t n) const {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const auto& c : cells) {
    if (c.empty()) throw std::invalid_argument("Partition: empty cell");
    for (std::size_t v : c) {
      if (v >= n) throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " out of range");
      if (seen[v]++) throw std::invalid_argument("Partition: vertex " + std::to_string(v) + " in two cells");
      ++total;
    }
  }
  if (total != n) throw std::invalid_argument("Partition: cells do not cover every vertex");
}

QuotientResult quotient(const Graph& g, const Partition& p) {
  p.validate(g.order());
  const std::size_t m = p.cells.size();
  std::vector<int> cell_of(g.order());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t v : p.cells[i]) cell_of[v] = static_cast<int>(i);

  QuotientResult out;
  IntMatrix q(m);
  std::vector<std::int64_t> counts(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t idx = 0; idx < p.cells[i].size(); ++idx) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t w : g.neighbors(p.cells[i][idx])) ++counts[static_cast<std::size_t>(cell_of[w])];
      for (std::size_t j = 0; j < m; ++j) {
        if (idx == 0)
          q(i, j) = counts[j];
        else if (q(i, j) != counts[j])
          return out;
      }
    }
  }
  out.equitable = true;
  out.q = std::move(q);
  return out;
}

QuotientVerification verify_quotient_eigenvalues(const Graph& g, const Partition& p) {
  QuotientResult qr = quotient(g, p);
  if (!qr.equitable) throw std::invalid_argument("verify_quotient_eigenvalues: partition is not equitable");
  QuotientVerification v;
  v.graph_poly = char_poly(g.adjacency_matrix());
  v.quotient_poly = char_poly(qr.q);
  auto [quo, rem] = v.graph_poly.divmod_monic(v.quotient_poly);
  v.divides = rem.is_zero();
  v.cofactor = std::move(quo);
  return v;
}

InterlacingCheck interlacing_check(const Graph& g, std::span<const std::size_t> s, double eps) {
  if (s.size() < 2) throw std::invalid_argument("interlacing_check: need at least two vertices");
  const Graph h = induced_subgraph(g, s);
  const auto ev = eigenvalues_symmetric(h.adjacency_matrix());
  InterlacingCheck out;
  out.second_largest = ev[1];
  out.second_smallest = ev[ev.size() - 2];
  const bool near = std::abs(out.second_largest - 2.0) < 1e-6 || std::abs(out.second_smallest + 1.0) < 1e-6;
  if (near) {
    out.exact_fallback = true;
    const IntPolynomial p = char_poly(h.adjacency_matrix());
    out.forbidden = count_roots_between(p, 2, 0, false, true) >= 2 || count_roots_between(p, 0, -1, true, false) >= 2;
  } else {
    out.forbidden = out.second_largest > 2.0 + eps || out.second_smallest < -1.0 - eps;
  }
  return out;
}

bool interlacing_forbidden(const Graph& g, std::span<const std::size_t> s, double eps) { return interlacing_check(g, s, eps).forbidden; }

}  // namespace exspec

#include "exspec/classify.hpp"

#include <algorithm>

#include "exspec/canonical.hpp"
#include "exspec/spectral.hpp"

namespace exspec {

namespace {

bool is_triangle(const Graph& g) { return g.order() == 3 && is_complete(g); }

struct CoreComponent {
  std::vector<std::size_t> vertices;
  Graph graph;
  ExactSpectrum spectrum;
};

// Residual x^2 - T x + D with both roots outside [-1, 2]: g(2) < 0 and g(-1) < 0.
bool straddles(const IntPolynomial& residual) {
  return residual.degree() == 2 && residual.evaluate(mpz_class(2)) < 0 && residual.evaluate(mpz_class(-1)) < 0;
}

}  // namespace

std::string_view verdict_name(VerdictCase c) {
  switch (c) {
    case VerdictCase::AllTwoMinusOne: return "AllTwoMinusOne";
    case VerdictCase::OneExceptional: return "OneExceptional";
    case VerdictCase::UnionOfCompletes: return "UnionOfCompletes";
    case VerdictCase::MemberOfF: return "MemberOfF";
    case VerdictCase::CatalogGap: return "CatalogGap";
    case VerdictCase::NotInScope: return "NotInScope";
  }
  return "?";
}

std::string_view violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::LowDegree: return "low-degree";
    case ViolationKind::NeighborhoodGap: return "neighborhood-gap";
    case ViolationKind::NegativeDetS: return "negative-det-s";
  }
  return "?";
}

std::vector<FamilyDescriptor> catalog_lookup(std::size_t n, const ClaimedSpectrum& s) {
  std::vector<FamilyDescriptor> out;
  for (const auto& d : catalog_descriptors(n))
    if (order(d) == n && claimed_spectrum(d) == s) out.push_back(d);
  return out;
}

ClassificationVerdict classify(const Graph& g) {
  ClassificationVerdict v;
  v.order = g.order();

  std::vector<CoreComponent> cores;
  for (auto& comp : components(g)) {
    Graph h = induced_subgraph(g, comp);
    if (is_triangle(h)) {
      ++v.padding;
      continue;
    }
    ExactSpectrum e = deflate_spectrum(char_poly(h.adjacency_matrix()));
    v.exceptional += e.exceptional_count();
    cores.push_back({std::move(comp), std::move(h), std::move(e)});
  }
  for (const auto& c : cores) v.core_orders.push_back(c.vertices.size());
  std::sort(v.core_orders.begin(), v.core_orders.end());

  const bool all_complete = std::all_of(cores.begin(), cores.end(), [](const CoreComponent& c) { return is_complete(c.graph); });

  if (v.exceptional == 0) {
    v.verdict = cores.empty() ? VerdictCase::AllTwoMinusOne : VerdictCase::NotInScope;
    if (!cores.empty()) v.reason = "no exceptional eigenvalue but a component other than K3";
    return v;
  }
  if (v.exceptional == 1) {
    if (cores.size() == 1 && all_complete) {
      v.verdict = VerdictCase::OneExceptional;
    } else {
      v.verdict = VerdictCase::NotInScope;
      v.reason = "one exceptional eigenvalue but the core is not a single complete graph";
    }
    return v;
  }
  if (v.exceptional > 2) {
    v.verdict = VerdictCase::NotInScope;
    v.reason = std::to_string(v.exceptional) + " exceptional eigenvalues";
    return v;
  }

  // exactly two exceptional eigenvalues
  if (all_complete && cores.size() == 2) {
    v.verdict = VerdictCase::UnionOfCompletes;
    return v;
  }
  if (cores.size() != 1 || all_complete) {
    v.verdict = VerdictCase::NotInScope;
    v.reason = "two exceptional eigenvalues spread over an unexpected component structure";
    return v;
  }

  const CoreComponent& core = cores.front();
  const IntPolynomial& res = core.spectrum.residual;
  if (!straddles(res)) {
    v.verdict = VerdictCase::CatalogGap;
    v.reason = "connected non-complete core whose exceptional eigenvalues are not r > 2 > -1 > s";
    return v;
  }
  ClaimedSpectrum observed;
  observed.p = core.spectrum.mult_two;
  observed.q = core.spectrum.mult_minus_one;
  observed.trace = -res.coeff(1).get_si();
  observed.det = res.coeff(0).get_si();
  const auto matches = catalog_lookup(core.vertices.size(), observed);
  if (matches.empty()) {
    v.verdict = VerdictCase::CatalogGap;
    v.reason = "no catalog descriptor of order " + std::to_string(core.vertices.size()) + " has this spectrum";
    return v;
  }
  if (matches.size() > 1) {
    v.verdict = VerdictCase::CatalogGap;
    v.reason = "several catalog descriptors share this spectrum";
    return v;
  }
  v.descriptor = matches.front();
  if (core.graph.order() <= kDefaultCanonicalBound) {
    v.canonical_confirmed = are_isomorphic(core.graph, build_family(*v.descriptor));
    if (!*v.canonical_confirmed) {
      v.verdict = VerdictCase::CatalogGap;
      v.reason = "spectrum matches " + to_string(*v.descriptor) + " but the graphs are not isomorphic";
      return v;
    }
  }
  v.verdict = VerdictCase::MemberOfF;
  return v;
}

std::vector<Violation> degree_certificates(const Graph& g) {
  std::vector<Violation> out;
  for (const auto& comp : components(g)) {
    if (comp.size() == 3 && is_complete(induced_subgraph(g, comp))) continue;
    for (std::size_t u : comp)
      if (g.degree(u) < 3) out.push_back({ViolationKind::LowDegree, u, u, static_cast<long>(g.degree(u))});
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const std::size_t x = comp[i], y = comp[j];
        if (g.has_edge(x, y)) continue;
        const long dx = static_cast<long>(g.degree(x)), dy = static_cast<long>(g.degree(y));
        const long dxy = static_cast<long>(g.common_neighbors(x, y));
        if (g.neighborhood_contained(x, y) && dy - dx < 5) out.push_back({ViolationKind::NeighborhoodGap, x, y, dy - dx});
        if (g.neighborhood_contained(y, x) && dx - dy < 5) out.push_back({ViolationKind::NeighborhoodGap, y, x, dx - dy});
        const long det = (dx - 2) * (dy - 2) - dxy * dxy;
        if (det < 0) out.push_back({ViolationKind::NegativeDetS, x, y, det});
      }
  }
  return out;
}

PsdRank2Check psd_rank2_check(const Graph& g) {
  const IntMatrix a = g.adjacency_matrix();
  const IntMatrix m = a * a - a - 2 * IntMatrix::identity(g.order());
  const PsdCertificate c = psd_rank_certificate(m);
  return {c.is_psd && c.rank <= 2, c.is_psd, c.rank};
}

}  // namespace exspec

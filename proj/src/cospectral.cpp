#include "exspec/cospectral.hpp"

#include <algorithm>
#include <map>

#include "exspec/canonical.hpp"

namespace exspec {

namespace {

bool is_composite(long k) {
  for (long d = 2; d * d <= k; ++d)
    if (k % d == 0) return true;
  return false;
}

// Factorizations n = k l with k >= l >= 2.
std::vector<std::pair<int, int>> factor_pairs(long n) {
  std::vector<std::pair<int, int>> out;
  for (long l = 2; l * l <= n; ++l)
    if (n % l == 0) out.emplace_back(static_cast<int>(n / l), static_cast<int>(l));
  return out;
}

std::vector<std::size_t> sorted_component_orders(const Graph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : components(g)) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

// Canonical forms of all components, sorted; nullopt if a component exceeds the cap.
std::optional<std::vector<CanonicalForm>> component_forms(const Graph& g) {
  std::vector<CanonicalForm> out;
  for (const auto& c : components(g)) {
    if (c.size() > kDefaultCanonicalBound) return std::nullopt;
    out.push_back(canonical_form(induced_subgraph(g, c)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// char poly of a disjoint union is the product over components; a triangle
// contributes (x - 2)(x + 1)^2
IntPolynomial padded_char_poly(const PaddedDescriptor& p) {
  IntPolynomial out = char_poly(build_family(p.desc).adjacency_matrix());
  const IntPolynomial triangle = char_poly(Graph::complete(3).adjacency_matrix());
  for (std::size_t i = 0; i < p.beta; ++i) out = out * triangle;
  return out;
}

}  // namespace

Graph build_padded(const PaddedDescriptor& p) { return pad_with_triangles(build_family(p.desc), p.beta); }

std::string_view relation_name(MateRelation r) {
  switch (r) {
    case MateRelation::FiveEighths: return "I(5,k)~IV(k'): 5k=1+8k'";
    case MateRelation::ThreeProduct: return "I(3,k)~II(k',l'): k=k'l'";
    case MateRelation::Sporadic: return "I(1,81)~VIII(4,10)";
    case MateRelation::EqualProduct: return "II(k,l)~II(k',l'): kl=k'l'";
    case MateRelation::Unlisted: return "unlisted";
  }
  return "?";
}

std::string_view method_name(NonIsomorphismMethod m) {
  switch (m) {
    case NonIsomorphismMethod::CanonicalForm: return "canonical-form";
    case NonIsomorphismMethod::ComponentStructure: return "component-structure";
    case NonIsomorphismMethod::Undecided: return "undecided";
  }
  return "?";
}

std::optional<MateRelation> listed_relation(const FamilyDescriptor& x0, const FamilyDescriptor& y0) {
  FamilyDescriptor x = normalize(x0), y = normalize(y0);
  if (x == y) return std::nullopt;
  if (y.kind == FamilyKind::I && x.kind != FamilyKind::I) std::swap(x, y);
  using K = FamilyKind;
  if (x.kind == K::I && x.a == 5 && y.kind == K::IV && 5L * x.k == 1 + 8L * y.k) return MateRelation::FiveEighths;
  if (x.kind == K::I && x.a == 3 && y.kind == K::II && x.k == y.k * y.l) return MateRelation::ThreeProduct;
  if (x == FamilyDescriptor::type_I(1, 81) && y == FamilyDescriptor::type_VIII(4, 10)) return MateRelation::Sporadic;
  if (x.kind == K::II && y.kind == K::II && x.k * x.l == y.k * y.l) return MateRelation::EqualProduct;
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> equalizing_paddings(const FamilyDescriptor& x, const FamilyDescriptor& y) {
  const ClaimedSpectrum sx = claimed_spectrum(x), sy = claimed_spectrum(y);
  if (sx.trace != sy.trace || sx.det != sy.det) return std::nullopt;
  // each triangle adds one 2 and two -1
  const long dp = static_cast<long>(sx.p) - static_cast<long>(sy.p);
  const long dq = static_cast<long>(sx.q) - static_cast<long>(sy.q);
  if (dq != 2 * dp) return std::nullopt;
  const long bx = std::max(0L, -dp);
  return std::pair{static_cast<std::size_t>(bx), static_cast<std::size_t>(bx + dp)};
}

CospectralWitness certify_pair(const PaddedDescriptor& left, const PaddedDescriptor& right) {
  CospectralWitness w;
  w.left = left;
  w.right = right;
  w.relation = listed_relation(left.desc, right.desc).value_or(MateRelation::Unlisted);
  const Graph gl = build_padded(left), gr = build_padded(right);
  w.orders_equal = gl.order() == gr.order();
  w.shared_char_poly = padded_char_poly(left);
  w.char_poly_equal = w.orders_equal && w.shared_char_poly == padded_char_poly(right);

  if (gl.order() <= kDefaultCanonicalBound && gr.order() <= kDefaultCanonicalBound) {
    w.method = NonIsomorphismMethod::CanonicalForm;
    w.non_isomorphic = canonical_form(gl) != canonical_form(gr);
    return w;
  }
  if (sorted_component_orders(gl) != sorted_component_orders(gr)) {
    w.method = NonIsomorphismMethod::ComponentStructure;
    w.non_isomorphic = true;
    return w;
  }
  const auto fl = component_forms(gl), fr = component_forms(gr);
  if (fl && fr) {
    w.method = NonIsomorphismMethod::ComponentStructure;
    w.non_isomorphic = *fl != *fr;
  }
  return w;
}

std::vector<CospectralWitness> cospectral_mates(const FamilyDescriptor& d0, std::size_t factor) {
  const FamilyDescriptor d = normalize(d0);
  const std::size_t bound = factor * order(d);
  const ClaimedSpectrum s = claimed_spectrum(d);
  std::vector<CospectralWitness> out;
  for (const auto& e : catalog_descriptors(bound)) {
    if (e == d) continue;
    const ClaimedSpectrum se = claimed_spectrum(e);
    if (se.trace != s.trace || se.det != s.det) continue;
    if (auto pads = equalizing_paddings(d, e)) out.push_back(certify_pair({d, pads->first}, {e, pads->second}));
  }
  return out;
}

std::vector<FamilyDescriptor> equation_partners(const FamilyDescriptor& d0, std::size_t max_order) {
  const FamilyDescriptor d = normalize(d0);
  std::vector<FamilyDescriptor> out;
  using K = FamilyKind;
  if (d.kind == K::I && d.a == 5 && (5L * d.k - 1) % 8 == 0 && (5L * d.k - 1) / 8 >= 2)
    out.push_back(FamilyDescriptor::type_IV(static_cast<int>((5L * d.k - 1) / 8)));
  if (d.kind == K::IV && (8L * d.k + 1) % 5 == 0) out.push_back(FamilyDescriptor::type_I(5, static_cast<int>((8L * d.k + 1) / 5)));
  if (d.kind == K::I && d.a == 3)
    for (auto [k, l] : factor_pairs(d.k)) out.push_back(FamilyDescriptor::type_II(k, l));
  if (d.kind == K::II) {
    out.push_back(FamilyDescriptor::type_I(3, d.k * d.l));
    for (auto [k, l] : factor_pairs(static_cast<long>(d.k) * d.l))
      if (k != d.k || l != d.l) out.push_back(FamilyDescriptor::type_II(k, l));
  }
  if (d == FamilyDescriptor::type_I(1, 81)) out.push_back(FamilyDescriptor::type_VIII(4, 10));
  if (d == FamilyDescriptor::type_VIII(4, 10)) out.push_back(FamilyDescriptor::type_I(1, 81));
  std::erase_if(out, [&](const FamilyDescriptor& e) { return order(e) > max_order; });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MateRelation> ds_exception(const FamilyDescriptor& d0) {
  const FamilyDescriptor d = normalize(d0);
  if (d == FamilyDescriptor::type_I(1, 81)) return MateRelation::Sporadic;
  if (d.kind == FamilyKind::I && d.a == 3 && is_composite(d.k)) return MateRelation::ThreeProduct;
  if (d.kind == FamilyKind::I && d.a == 5 && d.k % 8 == 5) return MateRelation::FiveEighths;
  if (d.kind == FamilyKind::II) {
    const long n = static_cast<long>(d.k) * d.l;
    for (long q = d.l + 1; q < d.k; ++q)
      if (n % q == 0) return MateRelation::EqualProduct;
  }
  return std::nullopt;
}

DSVerdict is_determined_by_spectrum(const FamilyDescriptor& d0) {
  DSVerdict v;
  v.descriptor = normalize(d0);
  v.exception = ds_exception(v.descriptor);
  v.witnesses = cospectral_mates(v.descriptor);

  const bool certified = std::all_of(v.witnesses.begin(), v.witnesses.end(), [](const CospectralWitness& w) { return w.certified(); });
  v.is_ds = std::none_of(v.witnesses.begin(), v.witnesses.end(), [](const CospectralWitness& w) { return w.certified(); });
  const bool unlisted = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                                    [](const CospectralWitness& w) { return w.relation == MateRelation::Unlisted; });
  const bool partner_listed = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                                          [](const CospectralWitness& w) { return ds_exception(w.right.desc).has_value(); });

  if (v.exception) {
    v.consistent = !v.witnesses.empty() && certified && !unlisted;
    if (v.witnesses.empty()) v.note = "exception predicate fired but no partner was found within the order bound";
  } else if (!v.witnesses.empty()) {
    v.partner_side = true;
    v.consistent = certified && !unlisted && partner_listed;
    v.note = "not named by any exception predicate; it is the partner of a named exception and is not determined by its spectrum either";
  }
  if (!certified) v.note += (v.note.empty() ? "" : "; ") + std::string("a witness failed certification");
  if (unlisted) v.note += (v.note.empty() ? "" : "; ") + std::string("a partner is covered by no listed equation");
  return v;
}

DSVerdict friendship_ds_summary(int r, int k) { return friendship_ds_summary(FamilyDescriptor::friendship(r + 3, r, k)); }

DSVerdict friendship_ds_summary(const FamilyDescriptor& f) {
  validate(f);
  if (f.kind != FamilyKind::Friendship || f.t - f.r != 3 || !in_catalog(f))
    throw DescriptorError(to_string(f) + ": needs a friendship graph with t - r = 3, r >= 1, k >= 2");
  return is_determined_by_spectrum(normalize(f));
}

}  // namespace exspec

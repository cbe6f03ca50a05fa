#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exspec/families.hpp"

namespace exspec {

/// Catalog graph plus `beta` disjoint triangles.
struct PaddedDescriptor {
  FamilyDescriptor desc;
  std::size_t beta = 0;
  friend bool operator==(const PaddedDescriptor&, const PaddedDescriptor&) = default;
  friend auto operator<=>(const PaddedDescriptor&, const PaddedDescriptor&) = default;
};

Graph build_padded(const PaddedDescriptor& p);

/// How the two sides of a cospectral pair relate, named after the parameter
/// equation that links them.
enum class MateRelation {
  FiveEighths,      // I(5,k) with IV(k'), 5k = 1 + 8k'
  ThreeProduct,     // I(3,k) with II(k',l'), k = k'l'
  Sporadic,         // I(1,81) with VIII(4,10)
  EqualProduct,     // II(k,l) with II(k',l'), kl = k'l'
  Unlisted,         // found by search but covered by none of the above
};

std::string_view relation_name(MateRelation r);

/// Relation between two catalog descriptors, in either order; nullopt when no
/// listed equation links them.
std::optional<MateRelation> listed_relation(const FamilyDescriptor& x, const FamilyDescriptor& y);

enum class NonIsomorphismMethod { CanonicalForm, ComponentStructure, Undecided };

std::string_view method_name(NonIsomorphismMethod m);

struct CospectralWitness {
  PaddedDescriptor left, right;
  MateRelation relation = MateRelation::Unlisted;
  IntPolynomial shared_char_poly;  // of the left side
  bool orders_equal = false;
  bool char_poly_equal = false;
  bool non_isomorphic = false;
  NonIsomorphismMethod method = NonIsomorphismMethod::Undecided;
  bool certified() const { return orders_equal && char_poly_equal && non_isomorphic; }
};

/// Smallest paddings that make the two padded graphs share 2/-1 multiplicities
/// and order, or nullopt when the exceptional eigenvalues differ or no padding works.
std::optional<std::pair<std::size_t, std::size_t>> equalizing_paddings(const FamilyDescriptor& x, const FamilyDescriptor& y);

/// Builds both padded graphs and checks order, exact char poly equality and
/// non-isomorphism (canonical forms up to the canonical cap; component orders above it).
CospectralWitness certify_pair(const PaddedDescriptor& left, const PaddedDescriptor& right);

inline constexpr std::size_t kPartnerOrderFactor = 10;

/// Every other catalog descriptor of order <= factor * order(d) that becomes
/// cospectral with d after triangle padding, each certified.
std::vector<CospectralWitness> cospectral_mates(const FamilyDescriptor& d, std::size_t factor = kPartnerOrderFactor);

/// Partners predicted by the listed parameter equations, up to `max_order`.
std::vector<FamilyDescriptor> equation_partners(const FamilyDescriptor& d, std::size_t max_order);

/// Which exception predicate applies to d itself, if any.
std::optional<MateRelation> ds_exception(const FamilyDescriptor& d);

struct DSVerdict {
  FamilyDescriptor descriptor;
  bool is_ds = true;
  std::optional<MateRelation> exception;  // predicate on d itself
  bool partner_side = false;  // witnesses exist although no predicate on d fired
  std::vector<CospectralWitness> witnesses;
  bool consistent = true;     // witnesses exist exactly when d or its partner is listed, and all certify
  std::string note;
};

DSVerdict is_determined_by_spectrum(const FamilyDescriptor& d);

/// F(t, r, k) with t - r = 3, i.e. I(r, k). Throws DescriptorError otherwise.
DSVerdict friendship_ds_summary(int r, int k);
DSVerdict friendship_ds_summary(const FamilyDescriptor& friendship);

}  // namespace exspec

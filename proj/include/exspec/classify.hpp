#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exspec/families.hpp"
#include "exspec/graph.hpp"

namespace exspec {

enum class VerdictCase {
  AllTwoMinusOne,    // every eigenvalue is 2 or -1: a union of triangles
  OneExceptional,    // K_t plus triangles
  UnionOfCompletes,  // two complete components other than K_3, plus triangles
  MemberOfF,         // catalog graph plus triangles
  CatalogGap,        // two exceptional eigenvalues, connected non-complete core, no catalog entry
  NotInScope,        // three or more exceptional eigenvalues, or inconsistent structure
};

std::string_view verdict_name(VerdictCase c);

struct ClassificationVerdict {
  VerdictCase verdict = VerdictCase::NotInScope;
  std::size_t order = 0;
  std::size_t exceptional = 0;  // exceptional eigenvalues of the whole graph
  std::size_t padding = 0;      // number of K_3 components
  /// Orders of the components that are not K_3, ascending.
  std::vector<std::size_t> core_orders;
  std::optional<FamilyDescriptor> descriptor;
  /// Core isomorphic to the built catalog graph; unset when the core is above the canonical-form cap.
  std::optional<bool> canonical_confirmed;
  std::string reason;

  friend bool operator==(const ClassificationVerdict&, const ClassificationVerdict&) = default;
};

/// Catalog descriptors of the given order whose claimed spectrum equals
/// (p, q, x^2 - T x + D). At most one entry for a correct catalog.
std::vector<FamilyDescriptor> catalog_lookup(std::size_t order, const ClaimedSpectrum& s);

ClassificationVerdict classify(const Graph& g);

// Necessary conditions ------------------------------------------------------

enum class ViolationKind {
  LowDegree,         // vertex of degree < 3
  NeighborhoodGap,   // u !~ v, N(u) in N(v), d_v - d_u < 5
  NegativeDetS,      // u !~ v, (d_u - 2)(d_v - 2) - d_uv^2 < 0
};

std::string_view violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::size_t u = 0, v = 0;  // vertex indices in the input graph; v == u for LowDegree
  long value = 0;            // degree, degree gap, or determinant
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checked on every component other than K_3.
std::vector<Violation> degree_certificates(const Graph& g);

struct PsdRank2Check {
  bool holds = false;
  bool is_psd = false;
  std::size_t rank = 0;
};

/// A^2 - A - 2I is positive semidefinite of rank at most 2 (exact).
PsdRank2Check psd_rank2_check(const Graph& g);

}  // namespace exspec

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "exspec/graph.hpp"
#include "exspec/linalg.hpp"

namespace exspec {

enum class SpectrumMode { Exact, Numeric };

/// Multiplicities of 2 and -1 plus the remaining ("exceptional") eigenvalues.
/// Exact mode also carries the characteristic polynomial and residual factor.
struct SpectrumSummary {
  SpectrumMode mode = SpectrumMode::Exact;
  std::size_t order = 0;
  std::size_t mult_two = 0;
  std::size_t mult_minus_one = 0;
  std::vector<IsolatedRoot> exceptional;  // ascending
  std::optional<IntPolynomial> char_poly;
  std::optional<IntPolynomial> residual;
  std::size_t exceptional_count() const { return exceptional.size(); }
};

inline constexpr double kClusterTolerance = 1e-6;

/// Exact: char_poly + factor_spectrum. Numeric: Jacobi eigenvalues clustered
/// against 2 and -1 within `cluster_tol`.
SpectrumSummary spectrum_summary(const Graph& g, SpectrumMode mode = SpectrumMode::Exact, double cluster_tol = kClusterTolerance);

/// Number of eigenvalues different from 2 and -1, exactly.
std::size_t exceptional_count(const Graph& g);

/// Number of eigenvalues strictly above `hi` / strictly below `lo`, exactly.
std::size_t eigenvalues_above(const Graph& g, long hi);
std::size_t eigenvalues_below(const Graph& g, long lo);

// Equitable partitions --------------------------------------------------------

struct Partition {
  std::vector<std::vector<std::size_t>> cells;

  static Partition from_sizes(std::span<const std::size_t> sizes);
  static Partition discrete(std::size_t n);
  /// Throws std::invalid_argument unless the cells are nonempty, disjoint and cover 0..n-1.
  void validate(std::size_t n) const;
};

struct QuotientResult {
  bool equitable = false;
  IntMatrix q;  // only populated when equitable
};

QuotientResult quotient(const Graph& g, const Partition& p);

struct QuotientVerification {
  IntPolynomial graph_poly;
  IntPolynomial quotient_poly;
  IntPolynomial cofactor;  // graph_poly / quotient_poly
  bool divides = false;
};

/// char_poly(Q) | char_poly(A) by exact division. Throws std::invalid_argument
/// if the partition is not equitable.
QuotientVerification verify_quotient_eigenvalues(const Graph& g, const Partition& p);

// Interlacing -------------------------------------------------------------------

struct InterlacingCheck {
  bool forbidden = false;
  double second_largest = 0.0;
  double second_smallest = 0.0;
  bool exact_fallback = false;  // a margin was below 1e-6 and Sturm counts decided
};

inline constexpr double kInterlacingEpsilon = 1e-9;

/// The induced subgraph H on `s` has lambda_2(H) > 2 or lambda_{|S|-1}(H) < -1.
/// By interlacing the host graph then has two eigenvalues above 2 or two below -1.
InterlacingCheck interlacing_check(const Graph& g, std::span<const std::size_t> s, double eps = kInterlacingEpsilon);
bool interlacing_forbidden(const Graph& g, std::span<const std::size_t> s, double eps = kInterlacingEpsilon);

}  // namespace exspec

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "exspec/families.hpp"
#include "exspec/graph.hpp"

namespace exspec {

inline constexpr std::size_t kMaxEnumerationOrder = 10;
/// Orders above this need `allow_n10`.
inline constexpr std::size_t kUngatedEnumerationOrder = 9;

class EnumerationCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EnumerationOptions {
  std::size_t jobs = 1;
  bool allow_n10 = false;
  /// Called after each subtree finishes with (finished, total); may be called from worker threads, serialized.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Throws EnumerationCapError for orders above the cap or n = 10 without the flag.
void check_enumeration_order(std::size_t n, bool allow_n10);

/// Visits one representative of every isomorphism class of connected graphs on
/// n vertices, in a fixed order. A child (parent plus a vertex joined to a
/// subset) is kept only when the new vertex lies in the automorphism orbit of
/// the canonically chosen deletion vertex.
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit, bool allow_n10 = false);

std::vector<Graph> connected_graphs(std::size_t n, bool allow_n10 = false);

/// Subtree roots used to split the work: the accepted graphs at order max(1, n - 3).
std::vector<Graph> split_roots(std::size_t n);

/// Visits the graphs of order n below `root` (which must come from split_roots(n)).
void for_each_below(const Graph& root, std::size_t n, const std::function<void(const Graph&)>& visit);

std::size_t count_connected_graphs(std::size_t n, const EnumerationOptions& opt = {});

/// Independent count: labelled graphs whose degrees are nonincreasing in the
/// vertex order (every class has such a labelling), connected, deduplicated by
/// canonical form. n <= 8.
std::size_t brute_force_connected_count(std::size_t n);

struct SurveyReport {
  std::size_t n = 0;
  std::size_t connected = 0;
  std::size_t exceptional_zero = 0, exceptional_one = 0, exceptional_two = 0, exceptional_more = 0;
  std::size_t complete = 0;  // K_n itself
  std::map<FamilyDescriptor, std::size_t> matches;
  std::vector<std::string> members;    // graph6 of the catalog matches
  std::vector<std::string> gaps;       // graph6 and reason
  std::vector<std::string> anomalies;  // failed cross-checks on the 0/1 exceptional counts

  std::size_t match_count() const;
  bool passed() const { return gaps.empty() && anomalies.empty(); }
  void merge(const SurveyReport& o);
  /// Sorts the string lists so merged reports do not depend on job scheduling.
  void finalize();
};

/// Classifies every connected graph on n vertices.
SurveyReport survey(std::size_t n, const EnumerationOptions& opt = {});

}  // namespace exspec

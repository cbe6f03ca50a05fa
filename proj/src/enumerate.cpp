#include "exspec/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "exspec/canonical.hpp"
#include "exspec/classify.hpp"

namespace exspec {

namespace {

using Mask = std::uint32_t;

Mask image(Mask s, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (Mask x = s; x; x &= x - 1) out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(x))];
  return out;
}

// s is the least subset in its orbit under the group generated by gens.
bool least_in_orbit(Mask s, const std::vector<std::vector<std::size_t>>& gens) {
  if (gens.empty()) return true;
  std::vector<Mask> stack{s};
  std::unordered_set<Mask> seen{s};
  while (!stack.empty()) {
    const Mask x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const Mask y = image(x, g);
      if (y < s) return false;
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return true;
}

Graph extend(const Graph& p, Mask joins) {
  const std::size_t m = p.order();
  Graph g(m + 1);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (p.has_edge(u, v)) g.add_edge(u, v);
  for (Mask x = joins; x; x &= x - 1) g.add_edge(static_cast<std::size_t>(std::countr_zero(x)), m);
  return g;
}

// Deletion vertex: among non-cut vertices, least (degree, sum of neighbour
// degrees), ties broken by the largest canonical position. The last vertex
// was just added; accept iff it shares an orbit with the deletion vertex.
bool accept(const Graph& g) {
  const std::size_t n = g.order(), last = n - 1;
  const auto non_cut = non_cut_vertices(g);
  auto key = [&](std::size_t v) {
    std::size_t s = 0;
    for (std::size_t w : g.neighbors(v)) s += g.degree(w);
    return std::pair{g.degree(v), s};
  };
  std::pair best{std::numeric_limits<std::size_t>::max(), std::size_t{0}};
  for (std::size_t v = 0; v < n; ++v)
    if (non_cut[v]) best = std::min(best, key(v));
  if (key(last) != best) return false;
  std::vector<std::size_t> tied;
  for (std::size_t v = 0; v < n; ++v)
    if (non_cut[v] && key(v) == best) tied.push_back(v);
  if (tied.size() == 1) return true;

  const CanonicalLabeling lab = canonical_labeling(g);
  const std::size_t chosen = *std::max_element(tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) { return lab.position[a] < lab.position[b]; });
  return lab.orbit[chosen] == lab.orbit[last];
}

void grow(const Graph& g, std::size_t n, const std::function<void(const Graph&)>& visit) {
  if (g.order() == n) {
    visit(g);
    return;
  }
  const auto gens = canonical_labeling(g).generators;
  const Mask full = (Mask{1} << g.order()) - 1;
  for (Mask s = 1; s <= full; ++s) {
    if (!least_in_orbit(s, gens)) continue;
    Graph child = extend(g, s);
    if (accept(child)) grow(child, n, visit);
  }
}

std::size_t split_level(std::size_t n) { return n > 4 ? n - 3 : 1; }

}  // namespace

void check_enumeration_order(std::size_t n, bool allow_n10) {
  if (n == 0) throw EnumerationCapError("enumeration order must be at least 1");
  if (n > kMaxEnumerationOrder) throw EnumerationCapError("enumeration is capped at " + std::to_string(kMaxEnumerationOrder) + " vertices");
  if (n > kUngatedEnumerationOrder && !allow_n10)
    throw EnumerationCapError("order " + std::to_string(n) + " needs the explicit n = 10 flag");
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit, bool allow_n10) {
  check_enumeration_order(n, allow_n10);
  grow(Graph(1), n, visit);
}

std::vector<Graph> connected_graphs(std::size_t n, bool allow_n10) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); }, allow_n10);
  return out;
}

std::vector<Graph> split_roots(std::size_t n) {
  check_enumeration_order(n, true);
  std::vector<Graph> out;
  grow(Graph(1), split_level(n), [&](const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_below(const Graph& root, std::size_t n, const std::function<void(const Graph&)>& visit) { grow(root, n, visit); }

namespace {

// Runs `work(root, tally)` over the split roots on `jobs` threads; root i goes to job i mod jobs.
template <class Tally, class Work>
std::vector<Tally> run_split(std::size_t n, const EnumerationOptions& opt, Work work) {
  check_enumeration_order(n, opt.allow_n10);
  const auto roots = split_roots(n);
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, roots.size()));
  std::vector<Tally> tallies(jobs);
  std::mutex progress_mutex;
  std::size_t finished = 0;
  auto run = [&](std::size_t job) {
    for (std::size_t i = job; i < roots.size(); i += jobs) {
      work(roots[i], tallies[job]);
      if (opt.progress) {
        std::lock_guard lock(progress_mutex);
        opt.progress(++finished, roots.size());
      }
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(run, j);
  }
  return tallies;
}

}  // namespace

std::size_t count_connected_graphs(std::size_t n, const EnumerationOptions& opt) {
  const auto tallies = run_split<std::size_t>(n, opt, [n](const Graph& root, std::size_t& t) {
    for_each_below(root, n, [&](const Graph&) { ++t; });
  });
  std::size_t total = 0;
  for (auto t : tallies) total += t;
  return total;
}

std::size_t brute_force_connected_count(std::size_t n) {
  if (n == 0 || n > 8) throw EnumerationCapError("brute-force oracle runs for 1 <= n <= 8");
  std::set<std::string> seen;
  Graph g(n);
  std::vector<std::size_t> deg(n, 0);
  // decide the pairs (i, j), j > i, row by row; row i closes vertex i's degree
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (j == n) {
      if (i > 0 && deg[i] > deg[i - 1]) return;
      // later degrees only grow
      for (std::size_t w = i + 1; w < n; ++w)
        if (deg[w] > deg[i]) return;
      if (i + 1 == n) {
        if (is_connected(g)) seen.insert(canonical_form(g).graph6);
        return;
      }
      rec(i + 1, std::min(i + 2, n));
      return;
    }
    rec(i, j + 1);
    g.add_edge(i, j);
    ++deg[i];
    ++deg[j];
    if (i == 0 || deg[i] <= deg[i - 1]) rec(i, j + 1);
    --deg[i];
    --deg[j];
    g.remove_edge(i, j);
  };
  rec(0, 1);
  return seen.size();
}

// Survey --------------------------------------------------------------------

std::size_t SurveyReport::match_count() const {
  std::size_t s = 0;
  for (const auto& [d, c] : matches) s += c;
  return s;
}

void SurveyReport::merge(const SurveyReport& o) {
  connected += o.connected;
  exceptional_zero += o.exceptional_zero;
  exceptional_one += o.exceptional_one;
  exceptional_two += o.exceptional_two;
  exceptional_more += o.exceptional_more;
  complete += o.complete;
  for (const auto& [d, c] : o.matches) matches[d] += c;
  members.insert(members.end(), o.members.begin(), o.members.end());
  gaps.insert(gaps.end(), o.gaps.begin(), o.gaps.end());
  anomalies.insert(anomalies.end(), o.anomalies.begin(), o.anomalies.end());
}

void SurveyReport::finalize() {
  std::sort(members.begin(), members.end());
  std::sort(gaps.begin(), gaps.end());
  std::sort(anomalies.begin(), anomalies.end());
}

namespace {

void survey_one(const Graph& g, SurveyReport& r) {
  ++r.connected;
  const bool complete = is_complete(g);
  if (complete) ++r.complete;
  const ClassificationVerdict v = classify(g);
  const std::string code = to_graph6(g);
  switch (v.exceptional) {
    case 0:
      ++r.exceptional_zero;
      if (!(complete && g.order() == 3)) r.anomalies.push_back(code + ": no exceptional eigenvalue but not K3");
      break;
    case 1:
      ++r.exceptional_one;
      if (!complete) r.anomalies.push_back(code + ": one exceptional eigenvalue but not complete");
      break;
    case 2:
      ++r.exceptional_two;
      if (v.verdict == VerdictCase::MemberOfF) {
        ++r.matches[*v.descriptor];
        r.members.push_back(code);
      } else {
        r.gaps.push_back(code + ": " + std::string(verdict_name(v.verdict)) + (v.reason.empty() ? "" : " (" + v.reason + ")"));
      }
      break;
    default: ++r.exceptional_more;
  }
  if (complete && g.order() != 3 && v.exceptional != 1) r.anomalies.push_back(code + ": complete graph without exactly one exceptional eigenvalue");
}

}  // namespace

SurveyReport survey(std::size_t n, const EnumerationOptions& opt) {
  auto tallies = run_split<SurveyReport>(n, opt, [n](const Graph& root, SurveyReport& r) {
    for_each_below(root, n, [&](const Graph& g) { survey_one(g, r); });
  });
  SurveyReport out;
  out.n = n;
  for (const auto& t : tallies) out.merge(t);
  out.finalize();
  return out;
}

}  // namespace exspec

#include "exspec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "exspec/classify.hpp"
#include "exspec/cospectral.hpp"
#include "exspec/enumerate.hpp"
#include "exspec/families.hpp"
#include "exspec/quotient_cases.hpp"

namespace exspec {

namespace {

using Check = std::function<bool(std::string&)>;

bool catalog_certification(std::string& detail) {
  std::size_t n = 0, failed = 0;
  for (const auto& d : sweep_descriptors()) {
    ++n;
    const auto r = certify_family(d);
    if (!r.passed()) {
      if (failed++ < 3) detail += to_string(d) + ": " + r.message + "; ";
    }
  }
  detail += std::to_string(n - failed) + "/" + std::to_string(n) + " descriptors match (p, q, T, D) exactly";
  return failed == 0;
}

bool quotient_identities(std::string& detail) {
  const auto rep = verify_quotient_polynomials();
  std::size_t ok = 0, grid = 0, searched = 0;
  for (const auto& c : rep.cases) {
    ok += c.passed();
    grid += c.grid_points;
    searched += c.searched;
    if (!c.passed()) detail += c.name + ": " + c.detail + c.counterexample + "; ";
  }
  detail += std::to_string(ok) + "/" + std::to_string(rep.cases.size()) + " cases, " + std::to_string(grid) +
            " grid points, " + std::to_string(searched) + " parameter points searched";
  return rep.passed();
}

bool cospectral_certification(std::string& detail) {
  using D = FamilyDescriptor;
  const std::pair<D, D> pairs[] = {{D::type_I(3, 4), D::type_II(2, 2)},
                                   {D::type_I(5, 5), D::type_IV(3)},
                                   {D::type_I(1, 81), D::type_VIII(4, 10)},
                                   {D::type_II(6, 2), D::type_II(4, 3)}};
  bool all = true;
  for (const auto& [x, y] : pairs) {
    const auto pads = equalizing_paddings(x, y);
    bool ok = pads.has_value();
    std::string what = to_string(x) + "~" + to_string(y);
    if (ok) {
      const auto w = certify_pair({x, pads->first}, {y, pads->second});
      ok = w.certified();
      what = to_string(x) + "+" + std::to_string(pads->first) + "K3 ~ " + to_string(y) + "+" + std::to_string(pads->second) +
             "K3 [" + std::string(method_name(w.method)) + "]";
    }
    all = all && ok;
    detail += (ok ? "" : "FAILED ") + what + "; ";
  }
  return all;
}

bool spectra_distinct(std::string& detail) {
  std::map<std::size_t, std::vector<std::pair<FamilyDescriptor, IntPolynomial>>> by_order;
  std::size_t count = 0, pairs = 0;
  for (const auto& d : catalog_descriptors(60)) {
    by_order[order(d)].push_back({d, char_poly(build_family(d).adjacency_matrix())});
    ++count;
  }
  bool ok = true;
  for (const auto& [n, group] : by_order)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        ++pairs;
        if (group[i].second == group[j].second) {
          ok = false;
          detail += to_string(group[i].first) + " and " + to_string(group[j].first) + " share a char poly; ";
        }
      }
  detail += std::to_string(count) + " descriptors, " + std::to_string(pairs) + " equal-order pairs compared";
  return ok;
}

bool completeness_survey(std::size_t jobs, std::string& detail) {
  const std::map<std::size_t, std::map<FamilyDescriptor, std::size_t>> expected = {
      {7, {{FamilyDescriptor::type_I(1, 2), 1}}},
      {8, {{FamilyDescriptor::type_I(2, 2), 1}}},
      {9, {{FamilyDescriptor::type_I(3, 2), 1}, {FamilyDescriptor::type_III(3), 1}}}};
  bool ok = true;
  for (std::size_t n = 1; n <= kUngatedEnumerationOrder; ++n) {
    EnumerationOptions eo;
    eo.jobs = jobs;
    const auto r = survey(n, eo);
    auto it = expected.find(n);
    const auto want = it == expected.end() ? std::map<FamilyDescriptor, std::size_t>{} : it->second;
    const bool good = r.passed() && r.matches == want && r.match_count() == r.exceptional_two;
    ok = ok && good;
    if (!good || !r.matches.empty()) {
      detail += "n=" + std::to_string(n) + " {";
      for (const auto& [d, c] : r.matches) detail += (detail.ends_with("{") ? "" : " ") + to_string(d) + (c > 1 ? "x" + std::to_string(c) : "");
      detail += "} gaps " + std::to_string(r.gaps.size()) + (good ? "" : " MISMATCH") + "; ";
    }
  }
  return ok;
}

bool certificate_soundness(std::string& detail) {
  std::size_t n = 0, bad = 0;
  for (const auto& d : sweep_descriptors()) {
    ++n;
    const Graph g = build_family(d);
    const auto violations = degree_certificates(g);
    const auto psd = psd_rank2_check(g);
    if (!violations.empty() || !psd.holds || !psd.is_psd || psd.rank != 2) {
      if (bad++ < 3)
        detail += to_string(d) + ": " + std::to_string(violations.size()) + " violations, psd=" + (psd.is_psd ? "yes" : "no") +
                  " rank=" + std::to_string(psd.rank) + "; ";
    }
  }
  detail += std::to_string(n - bad) + "/" + std::to_string(n) + " clean with PSD rank exactly 2";
  return bad == 0;
}

bool numeric_agreement(std::string& detail) {
  std::size_t n = 0, bad = 0;
  double worst = 0.0;
  for (const auto& d : sweep_descriptors()) {
    ++n;
    const IntMatrix a = build_family(d).adjacency_matrix();
    const auto exact = factor_spectrum(char_poly(a)).eigenvalues();
    const auto numeric = eigenvalues_symmetric(a);
    double err = exact.size() == numeric.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(exact.size(), numeric.size()); ++i) err = std::max(err, std::abs(exact[i] - numeric[i]));
    worst = std::max(worst, err);
    if (!(err <= 1e-6) && bad++ < 3) detail += to_string(d) + " differs by " + std::to_string(err) + "; ";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", worst);
  detail += std::to_string(n - bad) + "/" + std::to_string(n) + " within 1e-6, worst deviation " + buf;
  return bad == 0;
}

bool enumeration_validation(std::string& detail) {
  bool ok = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t aug = count_connected_graphs(n), brute = brute_force_connected_count(n);
    ok = ok && aug == brute;
    detail += std::to_string(aug) + (aug == brute ? "" : "!=" + std::to_string(brute)) + (n < 8 ? " " : "");
  }
  detail = "counts n=1..8: " + detail;
  return ok;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<std::pair<std::string, Check>> criteria = {
      {"catalog certification", catalog_certification},
      {"quotient polynomial identities", quotient_identities},
      {"cospectral certification", cospectral_certification},
      {"distinct spectra at equal order <= 60", spectra_distinct},
      {"completeness survey n <= 9", [&](std::string& d) { return completeness_survey(opt.jobs, d); }},
      {"certificate soundness", certificate_soundness},
      {"numeric/exact agreement", numeric_agreement},
      {"enumeration validation", enumeration_validation},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    CriterionResult r;
    r.id = id;
    r.name = criteria[i].first;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.passed = criteria[i].second(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail += std::string("exception: ") + e.what();
    }
    while (r.detail.ends_with("; ") || r.detail.ends_with(" ")) r.detail.erase(r.detail.size() - (r.detail.ends_with("; ") ? 2 : 1));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  std::string s = std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
  if (!with_time) return s;
  char t[32];
  std::snprintf(t, sizeof t, " (%.1f s)", r.seconds);
  return s + t;
}

}  // namespace exspec

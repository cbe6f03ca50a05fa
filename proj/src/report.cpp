#include "exspec/report.hpp"

namespace exspec::report {

namespace {

json params(const std::map<char, long>& values) {
  json j = json::object();
  for (auto [k, v] : values) j[std::string(1, k)] = v;
  return j;
}

json padded(const PaddedDescriptor& p, bool with_graph6) {
  json j = {{"descriptor", to_string(p.desc)}, {"beta", p.beta}, {"order", order(p.desc) + 3 * p.beta}};
  if (with_graph6) j["graph6"] = to_graph6(build_padded(p));
  return j;
}

}  // namespace

json polynomial(const IntPolynomial& p) { return {{"text", p.to_string()}, {"coefficients", p.coeff_strings()}}; }

json spectrum(const SpectrumSummary& s) {
  json j = {{"mode", s.mode == SpectrumMode::Exact ? "exact" : "numeric"},
            {"order", s.order},
            {"p", s.mult_two},
            {"q", s.mult_minus_one},
            {"exceptional_count", s.exceptional_count()}};
  json ex = json::array();
  for (const auto& r : s.exceptional) ex.push_back({{"value", r.value}, {"error_bound", r.error_bound}, {"multiplicity", r.multiplicity}});
  j["exceptional"] = std::move(ex);
  if (s.residual) j["residual"] = polynomial(*s.residual);
  if (s.char_poly) j["char_poly"] = polynomial(*s.char_poly);
  return j;
}

json violation(const Violation& v) {
  return {{"kind", violation_name(v.kind)}, {"u", v.u}, {"v", v.v}, {"value", v.value}};
}

json classification(const ClassificationVerdict& v, const std::vector<Violation>& violations) {
  json j = {{"case", verdict_name(v.verdict)},
            {"order", v.order},
            {"exceptional_count", v.exceptional},
            {"beta", v.padding},
            {"core_orders", v.core_orders}};
  j["descriptor"] = v.descriptor ? json(to_string(*v.descriptor)) : json(nullptr);
  j["canonical_confirmed"] = v.canonical_confirmed ? json(*v.canonical_confirmed) : json(nullptr);
  if (!v.reason.empty()) j["reason"] = v.reason;
  json vs = json::array();
  for (const auto& x : violations) vs.push_back(violation(x));
  j["violations"] = std::move(vs);
  return j;
}

json certification(const CertificationReport& r) {
  json j = {{"descriptor", to_string(r.descriptor)},
            {"order", r.order},
            {"passed", r.passed()},
            {"claimed", {{"p", r.claimed.p}, {"q", r.claimed.q}, {"T", r.claimed.trace}, {"D", r.claimed.det}}},
            {"observed", {{"p", r.observed.mult_two}, {"q", r.observed.mult_minus_one}, {"residual", r.observed.residual.to_string()}}},
            {"connected", r.connected},
            {"sign_pattern", r.sign_pattern}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

json quotient_case(const QuotientCaseReport& r) {
  json found = json::array();
  for (const auto& f : r.found_two) found.push_back(params(f));
  json j = {{"name", r.name},
            {"passed", r.passed()},
            {"identity_checked", r.identity_checked},
            {"identity_holds", r.identity_holds},
            {"sign", r.sign},
            {"grid_points", r.grid_points},
            {"searched", r.searched},
            {"eigenvalue_two_at", std::move(found)},
            {"two_matches", r.two_matches},
            {"minus_one_matches", r.minus_one_matches},
            {"multiplicity_matches", r.multiplicity_matches}};
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json quotient_cases(const QuotientCasesReport& r) {
  json cs = json::array();
  for (const auto& c : r.cases) cs.push_back(quotient_case(c));
  return {{"passed", r.passed()}, {"cases", std::move(cs)}};
}

json witness(const CospectralWitness& w, bool with_graph6) {
  return {{"left", padded(w.left, with_graph6)},
          {"right", padded(w.right, with_graph6)},
          {"relation", relation_name(w.relation)},
          {"certified", w.certified()},
          {"orders_equal", w.orders_equal},
          {"char_poly_equal", w.char_poly_equal},
          {"non_isomorphic", w.non_isomorphic},
          {"non_isomorphism_method", method_name(w.method)},
          {"shared_char_poly", w.shared_char_poly.coeff_strings()}};
}

json ds(const DSVerdict& v) {
  json ws = json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness(w));
  json j = {{"descriptor", to_string(v.descriptor)}, {"is_ds", v.is_ds}};
  j["exception_case"] = v.exception ? json(relation_name(*v.exception)) : json(nullptr);
  j["partner_side"] = v.partner_side;
  j["consistent"] = v.consistent;
  if (!v.note.empty()) j["note"] = v.note;
  j["witnesses"] = std::move(ws);
  return j;
}

json survey(const SurveyReport& r) {
  json m = json::object();
  for (const auto& [d, c] : r.matches) m[to_string(d)] = c;
  return {{"n", r.n},
          {"connected", r.connected},
          {"exceptional_counts", {{"0", r.exceptional_zero}, {"1", r.exceptional_one}, {"2", r.exceptional_two}, {">2", r.exceptional_more}}},
          {"complete", r.complete},
          {"catalog_matches", std::move(m)},
          {"members", r.members},
          {"catalog_gaps", r.gaps},
          {"anomalies", r.anomalies},
          {"passed", r.passed()}};
}

}  // namespace exspec::report

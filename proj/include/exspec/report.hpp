#pragma once

#include <json.hpp>

#include "exspec/classify.hpp"
#include "exspec/cospectral.hpp"
#include "exspec/enumerate.hpp"
#include "exspec/families.hpp"
#include "exspec/quotient_cases.hpp"
#include "exspec/spectral.hpp"

// JSON views of the library results, shared by the command-line tool and the
// Python bindings.
namespace exspec::report {

using json = nlohmann::ordered_json;

/// {"text": "...", "coefficients": ["c0", "c1", ...]} with ascending decimal coefficients.
json polynomial(const IntPolynomial& p);
json spectrum(const SpectrumSummary& s);
json classification(const ClassificationVerdict& v, const std::vector<Violation>& violations);
json violation(const Violation& v);
json certification(const CertificationReport& r);
json quotient_case(const QuotientCaseReport& r);
json quotient_cases(const QuotientCasesReport& r);
json witness(const CospectralWitness& w, bool with_graph6 = true);
json ds(const DSVerdict& v);
json survey(const SurveyReport& r);

}  // namespace exspec::report

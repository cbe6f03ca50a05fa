#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "exspec/acceptance.hpp"
#include "exspec/report.hpp"

using namespace exspec;
using report::json;

namespace {

constexpr int kOk = 0, kVerificationFailed = 1, kUsageError = 2;

enum class Format { Json, Text, Tsv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6 inputs: literal strings, "-" for standard input, or lines of a file
std::vector<std::string> read_graph_lines(const std::vector<std::string>& args, const std::string& file) {
  std::vector<std::string> out;
  auto take = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      if (!line.empty()) out.push_back(line);
    }
  };
  for (const auto& a : args) {
    if (a == "-")
      take(std::cin);
    else
      out.push_back(a);
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    take(in);
  }
  if (out.empty()) throw UsageError("no graph6 input given");
  return out;
}

Graph decode(const std::string& line) {
  try {
    return from_graph6(line);
  } catch (const Graph6Error& e) {
    throw UsageError("bad graph6 '" + line + "': " + e.what());
  }
}

FamilyDescriptor descriptor_arg(const std::string& text) {
  try {
    return parse_descriptor(text);
  } catch (const DescriptorError& e) {
    throw UsageError(e.what());
  }
}

void emit(Format f, const json& j, const std::string& text, const std::string& tsv) {
  switch (f) {
    case Format::Json: std::cout << j.dump(2) << '\n'; break;
    case Format::Text: std::cout << text << '\n'; break;
    case Format::Tsv: std::cout << tsv << '\n'; break;
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

// "a<=20,k<=20,kII<=10,m<=30,kIV<=20" (also accepts the Unicode sign)
SweepBounds parse_sweep(const std::string& text) {
  SweepBounds b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = item.find("<=");
    std::size_t len = 2;
    if (pos == std::string::npos) {
      pos = item.find("≤");
      len = std::string("≤").size();
    }
    if (pos == std::string::npos) throw UsageError("sweep bound '" + item + "' needs the form key<=value");
    const std::string key = item.substr(0, pos);
    int value = 0;
    try {
      value = std::stoi(item.substr(pos + len));
    } catch (const std::exception&) {
      throw UsageError("sweep bound '" + item + "' has no integer value");
    }
    if (value < 1 || value > 200) throw UsageError("sweep bound '" + item + "' outside 1..200");
    if (key == "a")
      b.max_a = value;
    else if (key == "k" || key == "kI")
      b.max_k_I = value;
    else if (key == "kII")
      b.max_k_II = value;
    else if (key == "m")
      b.max_m_III = value;
    else if (key == "kIV")
      b.max_k_IV = value;
    else
      throw UsageError("unknown sweep key '" + key + "' (use a, k, kII, m, kIV)");
  }
  return b;
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, F f) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(work);
  }
  return out;
}

std::string classify_text(const ClassificationVerdict& v, const std::vector<Violation>& violations) {
  std::string s = std::string(verdict_name(v.verdict));
  if (v.descriptor) s += " " + to_string(*v.descriptor);
  s += " beta=" + std::to_string(v.padding) + " exceptional=" + std::to_string(v.exceptional);
  if (!v.reason.empty()) s += " (" + v.reason + ")";
  if (!violations.empty()) s += " certificate-violations=" + std::to_string(violations.size());
  return s;
}

std::string witness_text(const CospectralWitness& w) {
  return to_string(w.left.desc) + " + " + std::to_string(w.left.beta) + "K3  ~  " + to_string(w.right.desc) + " + " +
         std::to_string(w.right.beta) + "K3  [" + std::string(relation_name(w.relation)) + "; " +
         (w.certified() ? "certified by " + std::string(method_name(w.method)) : std::string("NOT certified")) + "]";
}

std::string witness_tsv(const CospectralWitness& w) {
  return to_string(w.left.desc) + "\t" + std::to_string(w.left.beta) + "\t" + to_string(w.right.desc) + "\t" +
         std::to_string(w.right.beta) + "\t" + (w.certified() ? "1" : "0") + "\t" + std::string(method_name(w.method));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral verification of the graphs with all but two eigenvalues equal to 2 and -1."};
  app.require_subcommand(1);
  app.fallthrough();
  Format format = Format::Text;
  app.add_option("-f,--format", format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}, {"tsv", Format::Tsv}}))
      ->capture_default_str();
  std::size_t jobs = 1;
  app.add_option("-j,--jobs", jobs, "worker threads (certify, survey, selfcheck)")->check(CLI::Range(1, 256));

  std::string descriptor_text, file;
  std::vector<std::string> graphs;
  bool numeric = false;
  double tolerance = kClusterTolerance;

  auto* build = app.add_subcommand("build", "print the graph6 line of a catalog graph");
  build->add_option("descriptor", descriptor_text, "e.g. I(a=1,k=2)")->required();

  auto add_graph_inputs = [&](CLI::App* sub) {
    sub->add_option("graphs", graphs, "graph6 strings, or - for standard input");
    sub->add_option("--file", file, "file with one graph6 per line");
  };
  auto* spectrum = app.add_subcommand("spectrum", "multiplicities of 2 and -1 and the remaining eigenvalues");
  add_graph_inputs(spectrum);
  spectrum->add_flag("--numeric", numeric, "Jacobi eigenvalues clustered against 2 and -1 instead of exact factorization");
  spectrum->add_option("--tol", tolerance, "clustering tolerance for --numeric")->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "place graphs in the trichotomy and identify catalog members");
  add_graph_inputs(classify_cmd);

  auto* certify = app.add_subcommand("certify", "exact spectrum check of the catalog sweep and every sporadic graph");
  std::string sweep_text;
  certify->add_option("--sweep", sweep_text, "bounds such as a<=20,k<=20,kII<=10,m<=30,kIV<=20");

  auto* quotient = app.add_subcommand("quotient-polys", "check the claimed quotient polynomials and their root claims");
  quotient->alias("section4");

  auto* cospectral = app.add_subcommand("cospectral", "certified cospectral mates of a catalog graph");
  cospectral->add_option("descriptor", descriptor_text)->required();
  auto* ds_cmd = app.add_subcommand("ds", "is a catalog graph determined by its spectrum");
  ds_cmd->add_option("descriptor", descriptor_text)->required();

  auto* survey_cmd = app.add_subcommand("survey", "classify every connected graph on n vertices");
  std::size_t n = 0;
  bool allow_n10 = false, members = false, progress = false;
  survey_cmd->add_option("-n,--n", n, "order")->required()->check(CLI::Range(1, 10));
  survey_cmd->add_flag("--allow-n10", allow_n10, "permit n = 10 (long run)");
  survey_cmd->add_flag("--members", members, "print the graph6 of every catalog member found");
  survey_cmd->add_flag("--progress", progress, "report finished subtrees on standard error");

  auto* selfcheck = app.add_subcommand("selfcheck", "run every acceptance criterion");
  bool timings = false;
  selfcheck->add_flag("--timings", timings, "append wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*build) {
      const auto d = descriptor_arg(descriptor_text);
      const std::string g6 = to_graph6(build_family(d));
      emit(format, {{"descriptor", to_string(d)}, {"order", order(d)}, {"graph6", g6}}, g6,
           to_string(d) + "\t" + std::to_string(order(d)) + "\t" + g6);
      return kOk;
    }

    if (*spectrum) {
      const auto mode = numeric ? SpectrumMode::Numeric : SpectrumMode::Exact;
      for (const auto& line : read_graph_lines(graphs, file)) {
        const auto s = spectrum_summary(decode(line), mode, tolerance);
        json j = report::spectrum(s);
        j["graph6"] = line;
        std::vector<std::string> ex;
        for (const auto& r : s.exceptional) {
          std::ostringstream o;
          o.precision(12);
          o << r.value;
          ex.push_back(o.str());
        }
        std::string text = "n=" + std::to_string(s.order) + " p=" + std::to_string(s.mult_two) + " q=" + std::to_string(s.mult_minus_one);
        if (s.residual) text += " residual=" + s.residual->to_string();
        text += " exceptional=[" + join(ex, ", ") + "]";
        emit(format, j, text,
             line + "\t" + std::to_string(s.order) + "\t" + std::to_string(s.mult_two) + "\t" + std::to_string(s.mult_minus_one) + "\t" +
                 (s.residual ? s.residual->to_string() : join(ex, ",")));
      }
      return kOk;
    }

    if (*classify_cmd) {
      int rc = kOk;
      for (const auto& line : read_graph_lines(graphs, file)) {
        const Graph g = decode(line);
        const auto v = classify(g);
        const auto violations = degree_certificates(g);
        json j = report::classification(v, violations);
        j["graph6"] = line;
        emit(format, j, classify_text(v, violations),
             line + "\t" + std::string(verdict_name(v.verdict)) + "\t" + (v.descriptor ? to_string(*v.descriptor) : "-") + "\t" +
                 std::to_string(v.padding));
        if (v.verdict == VerdictCase::CatalogGap) rc = kVerificationFailed;
      }
      return rc;
    }

    if (*certify) {
      const auto bounds = sweep_text.empty() ? SweepBounds{} : parse_sweep(sweep_text);
      const auto ds = sweep_descriptors(bounds);
      const auto reports = parallel_map<CertificationReport>(ds.size(), jobs, [&](std::size_t i) { return certify_family(ds[i]); });
      std::size_t failed = 0;
      json arr = json::array();
      std::string text, tsv = "descriptor\torder\tpassed\tp\tq\tT\tD";
      for (const auto& r : reports) {
        failed += !r.passed();
        arr.push_back(report::certification(r));
        if (!r.passed()) text += "MISMATCH " + to_string(r.descriptor) + ": " + r.message + "\n";
        tsv += "\n" + to_string(r.descriptor) + "\t" + std::to_string(r.order) + "\t" + (r.passed() ? "1" : "0") + "\t" +
               std::to_string(r.claimed.p) + "\t" + std::to_string(r.claimed.q) + "\t" + std::to_string(r.claimed.trace) + "\t" +
               std::to_string(r.claimed.det);
      }
      text += std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " descriptors certified";
      emit(format, {{"passed", failed == 0}, {"count", reports.size()}, {"failed", failed}, {"reports", std::move(arr)}}, text, tsv);
      return failed ? kVerificationFailed : kOk;
    }

    if (*quotient) {
      const auto rep = verify_quotient_polynomials();
      std::string text, tsv = "case\tpassed\tsign\teigenvalue_two_at";
      for (const auto& c : rep.cases) {
        std::vector<std::string> found;
        for (const auto& f : c.found_two) found.push_back(format_params(f));
        text += std::string(c.passed() ? "ok   " : "FAIL ") + c.name + (c.identity_checked ? " sign=" + std::to_string(c.sign) : "") +
                " eigenvalue 2 at {" + join(found, " ") + "}" + (c.passed() ? "" : " " + c.detail + c.counterexample) + "\n";
        tsv += "\n" + c.name + "\t" + (c.passed() ? "1" : "0") + "\t" + std::to_string(c.sign) + "\t" + join(found, " ");
      }
      text += rep.passed() ? "all cases reproduce" : "SOME CASES FAILED";
      emit(format, report::quotient_cases(rep), text, tsv);
      return rep.passed() ? kOk : kVerificationFailed;
    }

    if (*cospectral) {
      const auto d = descriptor_arg(descriptor_text);
      const auto ws = cospectral_mates(d);
      json arr = json::array();
      std::string text, tsv = "left\tbeta\tright\tbeta'\tcertified\tmethod";
      bool all = true;
      for (const auto& w : ws) {
        arr.push_back(report::witness(w));
        text += witness_text(w) + "\n";
        tsv += "\n" + witness_tsv(w);
        all = all && w.certified();
      }
      if (ws.empty()) text += "no cospectral mate within order " + std::to_string(kPartnerOrderFactor * order(d)) + "\n";
      if (!text.empty()) text.pop_back();
      emit(format, {{"descriptor", to_string(d)}, {"witnesses", std::move(arr)}}, text, tsv);
      return all ? kOk : kVerificationFailed;
    }

    if (*ds_cmd) {
      const auto v = is_determined_by_spectrum(descriptor_arg(descriptor_text));
      std::string text = to_string(v.descriptor) + (v.is_ds ? " is determined by its spectrum" : " is NOT determined by its spectrum");
      if (v.exception) text += "\nexception: " + std::string(relation_name(*v.exception));
      for (const auto& w : v.witnesses) text += "\nwitness: " + witness_text(w);
      if (!v.note.empty()) text += "\nnote: " + v.note;
      std::vector<std::string> partners;
      for (const auto& w : v.witnesses) partners.push_back(to_string(w.right.desc) + "+" + std::to_string(w.right.beta) + "K3");
      emit(format, report::ds(v), text,
           to_string(v.descriptor) + "\t" + (v.is_ds ? "1" : "0") + "\t" + (v.exception ? std::string(relation_name(*v.exception)) : "-") +
               "\t" + join(partners, ","));
      return v.consistent ? kOk : kVerificationFailed;
    }

    if (*survey_cmd) {
      EnumerationOptions opt;
      opt.jobs = jobs;
      opt.allow_n10 = allow_n10;
      if (progress) opt.progress = [](std::size_t done, std::size_t total) { std::cerr << "\rsubtrees " << done << "/" << total << std::flush; };
      SurveyReport r;
      try {
        r = survey(n, opt);
      } catch (const EnumerationCapError& e) {
        throw UsageError(e.what());
      }
      if (progress) std::cerr << '\n';
      std::string text = "n=" + std::to_string(r.n) + " connected=" + std::to_string(r.connected) + " exceptional 0/1/2/more=" +
                         std::to_string(r.exceptional_zero) + "/" + std::to_string(r.exceptional_one) + "/" +
                         std::to_string(r.exceptional_two) + "/" + std::to_string(r.exceptional_more);
      std::string tsv = "descriptor\tcount";
      for (const auto& [d, c] : r.matches) {
        text += "\nmatch " + to_string(d) + " x" + std::to_string(c);
        tsv += "\n" + to_string(d) + "\t" + std::to_string(c);
      }
      for (const auto& g : r.gaps) text += "\nGAP " + g;
      for (const auto& a : r.anomalies) text += "\nANOMALY " + a;
      if (members)
        for (const auto& m : r.members) text += "\n" + m;
      text += r.passed() ? "\nno catalog gaps" : "\nSURVEY FAILED";
      emit(format, report::survey(r), text, tsv);
      return r.passed() ? kOk : kVerificationFailed;
    }

    if (*selfcheck) {
      bool all = true;
      json arr = json::array();
      AcceptanceOptions opt;
      opt.jobs = jobs;
      run_acceptance(opt, [&](const CriterionResult& r) {
        all = all && r.passed;
        if (format == Format::Json) {
          json j = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
          if (timings) j["seconds"] = r.seconds;
          arr.push_back(std::move(j));
        } else if (format == Format::Tsv) {
          std::cout << r.id << '\t' << (r.passed ? "PASS" : "FAIL") << '\t' << r.name << std::endl;
        } else {
          std::cout << format_result(r, timings) << std::endl;
        }
      });
      if (format == Format::Json) std::cout << json{{"passed", all}, {"criteria", std::move(arr)}}.dump(2) << '\n';
      return all ? kOk : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

#include <CLI11.hpp>
#include <iostream>

#include "exspec/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Runs the acceptance criteria and prints one PASS/FAIL line per criterion."};
  exspec::AcceptanceOptions opt;
  app.add_option("-j,--jobs", opt.jobs, "worker threads for the survey")->check(CLI::Range(1, 256));
  app.add_option("--only", opt.only, "criterion ids to run, e.g. 3,5")->delimiter(',')->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  exspec::run_acceptance(opt, [&](const exspec::CriterionResult& r) {
    all = all && r.passed;
    std::cout << exspec::format_result(r) << std::endl;
  });
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}

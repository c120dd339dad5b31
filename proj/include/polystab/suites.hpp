#ifndef POLYSTAB_SUITES_HPP
#define POLYSTAB_SUITES_HPP

#include <string>
#include <vector>

#include "polystab/certificate.hpp"

namespace polystab {

struct SuiteOptions {
  std::string family;  // restrict to one family where it makes sense
  Params params;
  long n_max = -1;   // -1 picks the suite default
  long order = -1;
  long jobs = 1;
  std::string stat;     // oracle-compare: statistic id
  std::string kind;     // oracle-compare: enumeration kind
};

struct SuiteResult {
  std::vector<Certificate> certificates;
  bool all_pass = true;  // conjecture-grade failures do not clear this flag
};

std::vector<std::string> suite_names();

// Runs the named suite; certificates come back sorted by task key so the
// output is identical for any worker count.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt);

// Single oracle comparison: family table against an enumeration
// distribution over the shared index range.
SuiteResult run_oracle_compare(const std::string& kind, const std::string& stat,
                               const std::string& family_name, const Params& params,
                               long n_max, long jobs = 1);

}  // namespace polystab

#endif

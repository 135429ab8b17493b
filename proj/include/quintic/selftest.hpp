#pragma once

#include <optional>
#include <string>
#include <vector>

namespace quintic {

struct SelftestOptions {
  std::optional<std::string> suite;         // run one suite only
  std::optional<std::string> inject_fault;  // perturb the named suite's subject
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;
};

/// ring, primes, symbols, classifier, periods, capitulation
const std::vector<std::string>& selftest_suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteResult run_selftest_suite(const std::string& name, const SelftestOptions& options = {});

std::vector<SuiteResult> run_selftest(const SelftestOptions& options = {});

}  // namespace quintic

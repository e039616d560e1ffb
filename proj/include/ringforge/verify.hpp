/**
 * @file verify.hpp
 * @brief Reproduction suite: published counts against measured values.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ringforge {

enum class Scope { fast, full };
enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct Check {
  std::string name;
  std::string expected;
  std::string source;
  /// Runs only in the full scope.
  bool full_only = false;
  std::function<std::string()> measure;
};

struct CheckResult {
  std::string name;
  std::string expected;
  std::string measured;
  std::string source;
  CheckStatus status = CheckStatus::skipped;
  double runtime_s = 0;
};

struct VerifySuiteResult {
  std::vector<CheckResult> checks;
  int exit_code = 0;

  std::size_t count(CheckStatus status) const;
};

std::vector<Check> default_checks();

/// A check passes when its measured string equals the expected string; an
/// exception counts as a failure. exit_code is 0 iff no check failed.
VerifySuiteResult run_verify_suite(Scope scope, const std::vector<Check>& checks = default_checks());

}  // namespace ringforge

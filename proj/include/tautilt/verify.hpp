// Verification suites with deterministic text reports.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tautilt/taucmc.hpp"

namespace tautilt {

/// Quiver-with-relations text of the algebras used by the suites:
/// A2, A3, A3rad2, KxK, Kronecker, Lambda2, Ex48. Throws for other names.
std::string_view builtin_algebra(std::string_view name);
std::vector<std::string> builtin_names();

struct SuiteReport {
  SuiteReport(std::string name, std::string what) : suite(std::move(name)), statement(std::move(what)) {}
  std::string suite;
  std::string statement;
  int checked = 0;
  int failed = 0;
  std::vector<std::string> lines;
  bool ok() const { return failed == 0; }
  /// Adds "what: k/n [unit ]pass".
  void pass_fail(const std::string& what, int n, int bad, const std::string& unit = "");
  void note(std::string s) { lines.push_back(std::move(s)); }
  void require(bool cond, const std::string& what);
  std::string text() const;
};

struct SuiteConfig {
  int depth = 4;
  int dim_bound = 12;
  std::uint64_t seed = 0;
};

/// Every basic support τ-rigid pair found by exploring from both ends.
std::vector<ShiftedObject> rigid_pairs(ModuleCategory& c, int depth, bool* complete = nullptr);

SuiteReport suite_rank(ModuleCategory& c, const SuiteConfig& cfg);
SuiteReport suite_tauinv(ModuleCategory& c, const SuiteConfig& cfg);
SuiteReport suite_composition(ModuleCategory& c, const SuiteConfig& cfg);
SuiteReport suite_associativity(ModuleCategory& c, const SuiteConfig& cfg);
SuiteReport suite_conjecture_search(ModuleCategory& c, const SuiteConfig& cfg);
SuiteReport suite_injectivity(ModuleCategory& c, const SuiteConfig& cfg);
/// Built-in algebras only.
SuiteReport suite_kronecker_picture(const SuiteConfig& cfg);
SuiteReport suite_lambda2_fan(const SuiteConfig& cfg);
SuiteReport suite_figures(const SuiteConfig& cfg);
SuiteReport suite_example48(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
/// Dispatch by name; `c` is ignored by the suites on built-in algebras.
SuiteReport run_suite(std::string_view name, ModuleCategory& c, const SuiteConfig& cfg);

}  // namespace tautilt

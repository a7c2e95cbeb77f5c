// Named verification suites. Each suite cross-checks a closed-form statement
// about Cayley-Dickson doubles against direct computation over a sweep of
// finite instances.

#pragma once

#include "cdalg/algebra.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cdalg::cli {

struct SuiteOptions {
  std::vector<Residue> bases{2, 3, 4, 5, 6};
  int depth = 3;
  /// Extra depth allowed for base 2 (rank-16 towers stay enumerable).
  int z2_depth = 4;
  Residue n_min = 2;
  Residue n_max = 9;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

enum class Outcome { pass, fail, skipped };

std::string to_string(Outcome o);

struct InstanceResult {
  std::string instance;
  std::string check;
  Outcome outcome = Outcome::pass;
  /// Sizes, verdicts, and on failure a witness.
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<InstanceResult> results;
  double seconds = 0;

  bool passed() const;
  std::size_t count(Outcome o) const;
  /// Timing is excluded so repeated runs compare equal.
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

/// Units of Z/n in increasing order.
std::vector<Residue> units(Residue n);

struct Doubling {
  Residue modulus;
  std::vector<Residue> params;  // full parameter list, last one doubles `base`
  const FiniteAlgebra& base;
  Vector alpha;
  const FiniteAlgebra& doubled;
};

/// Visits every doubling (A, alpha) -> R in towers over each base with unit
/// scalar parameters and 1 <= length <= depth (z2_depth for base 2).
void for_each_doubling(const SuiteOptions& options, const std::function<void(const Doubling&)>& visit);

std::string tower_name(Residue n, const std::vector<Residue>& params);

}  // namespace cdalg::cli

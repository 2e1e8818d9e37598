#pragma once
// The acceptance pipeline, shared by `verify-all` and the acceptance test.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "genhecke/context.hpp"
#include "genhecke/tools/serialize.hpp"

namespace genhecke::tools {

/// Process-wide context per preset, built once.
const Context& preset_context(const std::string& name);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  json details = json::object();
  std::vector<std::string> failures;  // first few only
  double seconds = 0;                 // kept out of the JSON form
};

/// Criteria 1..8. Randomized parts draw from seed.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Which criteria a check group covers: weyl → 5, hecke → 3 4 7,
/// center → 1 2 8, toric → 6.
std::vector<int> criteria_for(const std::set<std::string>& groups);
const std::set<std::string>& check_groups();

struct VerifyAllResult {
  std::vector<CriterionResult> criteria;
  bool passed() const;
};

/// Runs the selected criteria; criterion 9 reruns them and compares the JSON.
VerifyAllResult verify_all(std::uint64_t seed, const std::set<std::string>& groups);

json to_json(const CriterionResult& r);
json to_json(const VerifyAllResult& r, std::uint64_t seed);

}  // namespace genhecke::tools

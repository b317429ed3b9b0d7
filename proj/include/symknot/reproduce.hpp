#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symknot/pipeline.hpp"

namespace symknot {

struct CriterionInfo {
  int number = 0;
  std::string id;
  std::string title;
};

const std::vector<CriterionInfo>& criteria();

struct CriterionResult {
  CriterionInfo info;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ReproduceOptions {
  // Criterion numbers or ids; empty runs all of them.
  std::vector<std::string> only;
  // Largest N for the connected-sum scaling check.
  int max_copies = 5;
  std::uint64_t seed = 20261015;
  BracketOptions bracket;
  std::function<void(const std::string&)> progress;
};

// Throws invalid-argument for an unknown entry of `only`.
std::vector<CriterionResult> reproduce(const DataSet& data, const ReproduceOptions& opts = {});

std::string results_table(const std::vector<CriterionResult>& results);
std::string results_json(const std::vector<CriterionResult>& results);

}  // namespace symknot

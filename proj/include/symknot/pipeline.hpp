#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "symknot/bounds.hpp"
#include "symknot/knot_data.hpp"

namespace symknot {

// Everything read from a data directory: knots.csv, known_bounds.csv and
// the presentations/ directory of .su files.
struct DataSet {
  std::filesystem::path dir;
  Registry registry;
  std::vector<LoadIssue> skipped;
  std::vector<PresentationRecord> presentations;
  std::vector<KnownBound> known_bounds;

  std::vector<const PresentationRecord*> presentations_of(const std::string& knot) const;
};

// knots.csv is required; the other two are optional. Presentations are
// fingerprint-checked while loading.
DataSet load_data(const std::filesystem::path& dir, const BracketOptions& opts = {});

struct BoundsRequest {
  std::string knot;
  // Used instead of the shipped presentations when non-empty.
  std::vector<PresentationRecord> presentations;
  // 0 for the knot itself, N >= 1 for the N-fold connected sum.
  int copies = 0;
  BracketOptions bracket;
};

BoundReport knot_bounds(const DataSet& data, const BoundsRequest& req);

}  // namespace symknot

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsdist/series.hpp"

namespace tsdist {

/// A labeled collection of time series. Labels are dense integer class ids
/// in [0, num_classes); `label_names` keeps the original label text per id.
struct LabeledDataset {
  std::string name;
  std::vector<TimeSeries> items;
  std::vector<int> labels;
  std::vector<std::string> label_names;

  std::size_t size() const { return items.size(); }
  std::size_t num_classes() const { return label_names.size(); }

  /// Per-class item counts, indexed by class id.
  std::vector<std::size_t> class_counts() const;

  std::size_t min_length() const;
  std::size_t max_length() const;
  bool equal_lengths() const { return min_length() == max_length(); }
};

/// Checks the cross-validation preconditions: at least two classes and at
/// least `min_per_class` items in every class. Throws std::invalid_argument
/// naming the offending class.
void validate_for_cv(const LabeledDataset& ds, std::size_t min_per_class = 3);

} // namespace tsdist

#include "tsdist/dataset.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsdist {

std::vector<std::size_t> LabeledDataset::class_counts() const {
  std::vector<std::size_t> counts(num_classes(), 0);
  for (int l : labels) counts[static_cast<std::size_t>(l)]++;
  return counts;
}

std::size_t LabeledDataset::min_length() const {
  std::size_t m = items.empty() ? 0 : items.front().length();
  for (const auto& s : items) m = std::min(m, s.length());
  return m;
}

std::size_t LabeledDataset::max_length() const {
  std::size_t m = 0;
  for (const auto& s : items) m = std::max(m, s.length());
  return m;
}

void validate_for_cv(const LabeledDataset& ds, std::size_t min_per_class) {
  if (ds.num_classes() < 2) {
    throw std::invalid_argument("dataset '" + ds.name + "' has fewer than 2 classes");
  }
  auto counts = ds.class_counts();
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < min_per_class) {
      throw std::invalid_argument("dataset '" + ds.name + "' class '" + ds.label_names[c] +
                                  "' has " + std::to_string(counts[c]) + " items, needs " +
                                  std::to_string(min_per_class));
    }
  }
}

} // namespace tsdist

#include "tsdist/folds.hpp"

#include <algorithm>
#include <limits>

namespace tsdist {

std::vector<std::size_t> FoldAssignment::indices_in_fold(int f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold.size(); ++i) {
    if (fold[i] == f) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::indices_not_in_fold(int f) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold.size(); ++i) {
    if (fold[i] >= 0 && fold[i] != f) out.push_back(i);
  }
  return out;
}

FoldAssignment balance_and_fold(const LabeledDataset& ds, std::size_t repetition,
                                std::uint64_t seed, std::size_t num_folds) {
  validate_for_cv(ds, num_folds);
  auto counts = ds.class_counts();
  std::size_t min_count = std::numeric_limits<std::size_t>::max();
  for (std::size_t c : counts) min_count = std::min(min_count, c);

  RandomStream rng(seed, {fnv1a(ds.name), repetition,
                          static_cast<std::uint64_t>(StreamPurpose::BalanceFold)});

  FoldAssignment out;
  out.repetition = repetition;
  out.num_folds = num_folds;
  out.fold.assign(ds.size(), -1);

  for (std::size_t c = 0; c < ds.num_classes(); ++c) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds.labels[i] == static_cast<int>(c)) members.push_back(i);
    }
    // Fisher-Yates, then keep the first min_count and deal them across folds.
    for (std::size_t i = members.size() - 1; i > 0; --i) {
      std::size_t j = rng.next_below(i + 1);
      std::swap(members[i], members[j]);
    }
    for (std::size_t t = 0; t < min_count; ++t) {
      out.fold[members[t]] = static_cast<int>(t % num_folds);
    }
  }
  return out;
}

} // namespace tsdist

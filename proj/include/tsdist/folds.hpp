#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsdist/dataset.hpp"
#include "tsdist/rng.hpp"

namespace tsdist {

/// Fold assignment for one repetition of balanced stratified k-fold CV.
/// fold[i] is the fold index of dataset item i, or -1 if the item was
/// dropped by class balancing.
struct FoldAssignment {
  std::vector<int> fold;
  std::size_t repetition = 0;
  std::size_t num_folds = 0;

  std::vector<std::size_t> indices_in_fold(int f) const;
  std::vector<std::size_t> indices_not_in_fold(int f) const;
};

/// Subsamples every class uniformly at random down to the minimum class
/// count, then deals each class's survivors across `num_folds` folds so that
/// per-class fold sizes differ by at most one. Deterministic under
/// (seed, dataset name, repetition).
FoldAssignment balance_and_fold(const LabeledDataset& ds, std::size_t repetition,
                                std::uint64_t seed, std::size_t num_folds = 3);

} // namespace tsdist

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tsdist {

/// Row-major query x reference distance grid.
class DistanceTable {
public:
  DistanceTable() = default;
  DistanceTable(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return {cells_.data() + r * cols_, cols_};
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> cells_;
};

/// 1NN error ratio: each query takes the label of its minimum-distance
/// reference, ties broken by lowest reference index. Throws on an empty
/// reference set or on table/label shape mismatch.
double classify_1nn(std::span<const int> query_labels, std::span<const int> reference_labels,
                    const DistanceTable& d);

/// Leave-one-out 1NN error over a square table: each item is classified
/// against all others with the diagonal masked (self-distance is never
/// consulted, so measures with nonzero self-distance are handled correctly).
double loo_error(std::span<const int> labels, const DistanceTable& d);

} // namespace tsdist

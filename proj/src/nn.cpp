#include "tsdist/nn.hpp"

#include <stdexcept>
#include <string>

namespace tsdist {

double classify_1nn(std::span<const int> query_labels, std::span<const int> reference_labels,
                    const DistanceTable& d) {
  if (reference_labels.empty()) throw std::invalid_argument("classify_1nn: empty reference set");
  if (d.rows() != query_labels.size() || d.cols() != reference_labels.size()) {
    throw std::invalid_argument("classify_1nn: table is " + std::to_string(d.rows()) + "x" +
                                std::to_string(d.cols()) + ", labels are " +
                                std::to_string(query_labels.size()) + "/" +
                                std::to_string(reference_labels.size()));
  }
  std::size_t wrong = 0;
  for (std::size_t q = 0; q < query_labels.size(); ++q) {
    auto row = d.row(q);
    std::size_t best = 0;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] < row[best]) best = j; // ties keep the lowest reference index
    }
    if (reference_labels[best] != query_labels[q]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(query_labels.size());
}

double loo_error(std::span<const int> labels, const DistanceTable& d) {
  if (d.rows() != d.cols() || d.rows() != labels.size()) {
    throw std::invalid_argument("loo_error: needs a square table matching the label count");
  }
  if (labels.size() < 2) throw std::invalid_argument("loo_error: needs at least 2 items");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto row = d.row(i);
    std::size_t best = (i == 0) ? 1 : 0; // diagonal masked, never a candidate
    for (std::size_t j = best + 1; j < row.size(); ++j) {
      if (j == i) continue;
      if (row[j] < row[best]) best = j;
    }
    if (labels[best] != labels[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(labels.size());
}

} // namespace tsdist

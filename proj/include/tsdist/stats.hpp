#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tsdist {

struct WilcoxonResult {
  enum class Outcome { PValue, NoDifference, InsufficientData };
  Outcome outcome = Outcome::PValue;
  double p = 1.0;              // two-sided; 1.0 for NoDifference
  std::size_t n_nonzero = 0;   // differences surviving zero removal
  double w_plus = 0.0;         // positive-rank sum statistic
};

/// Two-sided Wilcoxon signed-rank test on matched samples.
/// Zero differences are dropped; tied absolute differences get average
/// ranks. Exact (doubled-rank enumeration) null distribution for up to 25
/// nonzero differences, normal approximation with tie-corrected variance and
/// 0.5 continuity correction beyond. Fewer than 5 nonzero differences yields
/// InsufficientData (no p-value); all-zero differences yields NoDifference
/// with p = 1.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y);

/// Holm-Bonferroni step-down: sorts p-values ascending, rejects while
/// p_(i) <= alpha / (m - i), stops at the first failure. Flags are returned
/// in the original order.
std::vector<bool> holm_bonferroni(std::span<const double> p_values, double alpha);

/// Ascending-error ranks 1..K within one dataset; ties get average ranks.
std::vector<double> rank_within_dataset(std::span<const double> errors);

struct RankSummary {
  std::vector<std::vector<double>> per_dataset; // [dataset][measure] rank
  std::vector<double> average;                  // [measure] mean rank
};

/// Ranks measures within every dataset and averages across datasets.
/// errors[d][m] = mean error of measure m on dataset d; every row must be
/// complete and the same length.
RankSummary rank_measures(const std::vector<std::vector<double>>& errors);

struct BestMeasureVerdict {
  std::size_t best_index = 0;           // measure with the lowest mean error
  bool significantly_best = false;      // all Holm-adjusted comparisons reject
  std::vector<double> p_values;         // vs. every other measure, in measure order
  std::vector<bool> rejected;           // Holm flags aligned with p_values
  std::vector<std::size_t> compared;    // measure indices aligned with p_values
};

/// Tests whether the lowest-mean-error measure of one dataset beats every
/// other measure: pairwise Wilcoxon on the matched per-fold accuracies,
/// Holm-corrected across the K-1 comparisons. Comparisons without a p-value
/// (insufficient data / no difference) never reject.
BestMeasureVerdict best_measure_significance(
    const std::vector<std::vector<double>>& fold_accuracies, double alpha = 0.05);

} // namespace tsdist

#include "tsdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsdist {

namespace {

// Average ranks (1-based) over the given values; exact ties share the mean
// of their positions.
std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    i = j + 1;
  }
  return ranks;
}

double exact_two_sided_p(const std::vector<double>& ranks, double w_plus) {
  // Enumerate the null distribution of W+ over doubled ranks so every
  // achievable sum is an exact integer.
  std::vector<long long> doubled;
  long long total = 0;
  doubled.reserve(ranks.size());
  for (double r : ranks) {
    auto d = static_cast<long long>(std::llround(2.0 * r));
    doubled.push_back(d);
    total += d;
  }
  std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
  count[0] = 1.0;
  for (long long d : doubled) {
    for (long long s = total; s >= d; --s) {
      count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - d)];
    }
  }
  const double denom = std::pow(2.0, static_cast<double>(ranks.size()));
  const auto w2 = static_cast<long long>(std::llround(2.0 * w_plus));
  double below = 0.0, above = 0.0;
  for (long long s = 0; s <= total; ++s) {
    double c = count[static_cast<std::size_t>(s)];
    if (s <= w2) below += c;
    if (s >= w2) above += c;
  }
  double p = 2.0 * std::min(below, above) / denom;
  return std::min(1.0, p);
}

double approx_two_sided_p(const std::vector<double>& ranks, double w_plus) {
  const auto n = static_cast<double>(ranks.size());
  const double mu = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  // Tie correction: subtract (t^3 - t)/48 per tie group.
  std::vector<double> sorted(ranks);
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    auto t = static_cast<double>(j - i + 1);
    variance -= (t * t * t - t) / 48.0;
    i = j + 1;
  }
  if (variance <= 0.0) return 1.0;
  double delta = w_plus - mu;
  if (delta == 0.0) return 1.0;
  double z = (std::abs(delta) - 0.5) / std::sqrt(variance); // continuity toward the mean
  if (z < 0.0) z = 0.0;
  return std::erfc(z / std::sqrt(2.0));
}

} // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("wilcoxon_signed_rank: samples must be matched (equal length)");
  }
  std::vector<double> diffs;
  diffs.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = x[i] - y[i];
    if (d != 0.0) diffs.push_back(d);
  }

  WilcoxonResult res;
  res.n_nonzero = diffs.size();
  if (diffs.empty()) {
    res.outcome = WilcoxonResult::Outcome::NoDifference;
    res.p = 1.0;
    return res;
  }
  if (diffs.size() < 5) {
    res.outcome = WilcoxonResult::Outcome::InsufficientData;
    res.p = 1.0;
    return res;
  }

  std::vector<double> abs_diffs(diffs.size());
  for (std::size_t i = 0; i < diffs.size(); ++i) abs_diffs[i] = std::abs(diffs[i]);
  std::vector<double> ranks = average_ranks(abs_diffs);

  double w_plus = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] > 0.0) w_plus += ranks[i];
  }
  res.w_plus = w_plus;
  res.outcome = WilcoxonResult::Outcome::PValue;
  res.p = (diffs.size() <= 25) ? exact_two_sided_p(ranks, w_plus)
                               : approx_two_sided_p(ranks, w_plus);
  return res;
}

std::vector<bool> holm_bonferroni(std::span<const double> p_values, double alpha) {
  if (p_values.empty()) throw std::invalid_argument("holm_bonferroni: needs at least one p-value");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("holm_bonferroni: alpha must be in (0, 1)");
  }
  const std::size_t m = p_values.size();
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
  std::vector<bool> reject(m, false);
  for (std::size_t k = 0; k < m; ++k) {
    double threshold = alpha / static_cast<double>(m - k);
    if (p_values[idx[k]] <= threshold) {
      reject[idx[k]] = true;
    } else {
      break; // step-down stops at the first failure
    }
  }
  return reject;
}

std::vector<double> rank_within_dataset(std::span<const double> errors) {
  if (errors.empty()) throw std::invalid_argument("rank_within_dataset: empty error vector");
  return average_ranks(errors);
}

RankSummary rank_measures(const std::vector<std::vector<double>>& errors) {
  if (errors.empty()) throw std::invalid_argument("rank_measures: no datasets");
  const std::size_t k = errors.front().size();
  RankSummary out;
  out.average.assign(k, 0.0);
  for (const auto& row : errors) {
    if (row.size() != k) throw std::invalid_argument("rank_measures: incomplete error grid");
    out.per_dataset.push_back(rank_within_dataset(row));
    for (std::size_t m = 0; m < k; ++m) out.average[m] += out.per_dataset.back()[m];
  }
  for (double& v : out.average) v /= static_cast<double>(errors.size());
  return out;
}

BestMeasureVerdict best_measure_significance(
    const std::vector<std::vector<double>>& fold_accuracies, double alpha) {
  const std::size_t k = fold_accuracies.size();
  if (k < 2) throw std::invalid_argument("best_measure_significance: needs >= 2 measures");
  const std::size_t cells = fold_accuracies.front().size();
  for (const auto& v : fold_accuracies) {
    if (v.size() != cells || cells == 0) {
      throw std::invalid_argument("best_measure_significance: ragged accuracy matrix");
    }
  }

  BestMeasureVerdict verdict;
  double best_acc = -1.0;
  for (std::size_t m = 0; m < k; ++m) {
    double s = 0.0;
    for (double a : fold_accuracies[m]) s += a;
    double meanv = s / static_cast<double>(cells);
    if (meanv > best_acc) {
      best_acc = meanv;
      verdict.best_index = m;
    }
  }

  for (std::size_t m = 0; m < k; ++m) {
    if (m == verdict.best_index) continue;
    auto res = wilcoxon_signed_rank(fold_accuracies[verdict.best_index], fold_accuracies[m]);
    verdict.compared.push_back(m);
    verdict.p_values.push_back(res.outcome == WilcoxonResult::Outcome::PValue ? res.p : 1.0);
  }
  verdict.rejected = holm_bonferroni(verdict.p_values, alpha);
  verdict.significantly_best =
      std::all_of(verdict.rejected.begin(), verdict.rejected.end(), [](bool b) { return b; });
  return verdict;
}

} // namespace tsdist

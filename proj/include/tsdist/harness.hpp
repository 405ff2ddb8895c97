#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tsdist/dataset.hpp"
#include "tsdist/folds.hpp"
#include "tsdist/grids.hpp"
#include "tsdist/lockstep.hpp"
#include "tsdist/nn.hpp"
#include "tsdist/stats.hpp"

namespace tsdist {

/// Everything that determines a cross-validation run.
struct EvaluationPlan {
  std::vector<LabeledDataset> datasets; // raw, as ingested
  std::vector<MeasureId> measures;
  std::uint64_t seed = 1;
  std::size_t repetitions = 20;
  std::size_t folds = 3;
  GridOptions grid_options;
  std::size_t workers = 0; // 0 = hardware concurrency
};

struct CellResult {
  std::string dataset;
  MeasureId measure = MeasureId::Euclidean;
  std::size_t repetition = 0;
  int fold = 0;
  std::size_t param_index = 0;
  std::string param_label;
  double train_error = 0.0; // leave-one-out on the training folds
  double test_error = 0.0;  // out-of-sample on the held-out fold
};

struct MeasureReport {
  MeasureId measure = MeasureId::Euclidean;
  double mean_train_error = 0.0;
  double mean_test_error = 0.0;
  std::vector<CellResult> cells;                   // canonical (repetition, fold) order
  std::vector<std::string> grid_labels;            // full grid, for the manifest
  std::vector<std::size_t> param_histogram;        // chosen-parameter counts per grid point
};

struct DatasetReport {
  std::string name;
  std::size_t items = 0;
  std::size_t classes = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  std::size_t balanced_size = 0; // classes x min class count
  std::vector<std::string> label_names;
  std::vector<MeasureReport> measures;
  BestMeasureVerdict verdict; // lowest-error measure vs. the rest
};

struct PairwiseSignificance {
  std::size_t measure_a = 0; // indices into the plan's measure list
  std::size_t measure_b = 0;
  double p = 1.0;
  bool has_p = false; // false when the test had insufficient data
  bool reject = false;
};

struct RunReport {
  std::string version;
  std::string mode; // "cv" or "fixed"
  std::uint64_t seed = 0;
  std::size_t repetitions = 0;
  std::size_t folds = 0;
  double nu_min = 1e-4;
  std::vector<std::string> measure_names;
  std::vector<DatasetReport> datasets;
  RankSummary ranks;                                   // over mean test errors
  std::vector<PairwiseSignificance> global_significance; // Holm over all pairs

  /// errors[d][m] = mean test error (convenience accessor used by reports).
  std::vector<std::vector<double>> error_matrix() const;
};

/// (Re)computes everything derived from the per-cell results: mean errors,
/// chosen-parameter histograms, per-dataset best-measure verdicts, ranks,
/// and the global significance matrix. Deterministic given the cells.
void recompute_statistics(RunReport& report);

/// A dataset preprocessed for measurement: z-normalized series for the
/// elastic measures and (when lengths differ) a resampled-then-normalized
/// copy for the lock-step/feature ones, plus per-measure parameter grids and
/// eagerly built feature caches (DFT spectra, AR coefficients per order).
/// Immutable after construction; safe to share across workers.
class PreparedDataset {
public:
  PreparedDataset(const LabeledDataset& raw, const std::vector<MeasureId>& measures,
                  const GridOptions& opts, std::size_t min_per_class);

  const std::string& name() const { return name_; }
  const std::vector<int>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  const std::vector<TimeSeries>& elastic_view() const { return elastic_; }
  const std::vector<TimeSeries>& lockstep_view() const {
    return lockstep_.empty() ? elastic_ : lockstep_;
  }

  const ParameterGrid& grid(MeasureId m) const;
  const std::vector<FourierSpectrum>& spectra() const { return spectra_; }
  const std::vector<ARCoefficients>& ar_coeffs(std::size_t eta) const;

  std::size_t lockstep_length() const { return lockstep_length_; }
  std::size_t elastic_length() const { return elastic_length_; }

private:
  std::string name_;
  std::vector<int> labels_;
  std::vector<TimeSeries> elastic_;
  std::vector<TimeSeries> lockstep_; // empty when lengths already agree
  std::size_t lockstep_length_ = 0;
  std::size_t elastic_length_ = 0;
  std::map<MeasureId, ParameterGrid> grids_;
  std::vector<FourierSpectrum> spectra_;
  std::map<std::size_t, std::vector<ARCoefficients>> ar_;
};

/// Distance between two dataset items identified by their global indices.
using PairDistance = std::function<double(std::size_t, std::size_t)>;

/// Binds a measure + grid point to a prepared dataset. The random measure is
/// keyed by (seed, dataset, repetition, fold) and by the item pair, so its
/// tables do not depend on evaluation order.
PairDistance bind_measure(const PreparedDataset& prep, MeasureId m, const GridPoint& pt,
                          std::uint64_t seed, std::size_t repetition, int fold);

/// Grid search + out-of-sample evaluation for one (repetition, fold) cell:
/// leave-one-out error on the training folds for every grid point, earliest
/// argmin kept, chosen point evaluated on the held-out fold.
CellResult run_cell(const PreparedDataset& prep, MeasureId measure, const FoldAssignment& folds,
                    int fold, std::uint64_t seed);

/// The full protocol: balanced stratified folds per repetition (shared by
/// all measures, so fold accuracies are matched samples), every cell, then
/// aggregation, ranks, and significance. Output is byte-identical for a
/// fixed plan regardless of worker count.
RunReport run_plan(const EvaluationPlan& plan);

/// Single-cell evaluation on a provided train/test split (grid search by
/// leave-one-out on the training set, evaluation on the test set). Label ids
/// are aligned across the two datasets by label name.
CellResult run_fixed_split(const LabeledDataset& train, const LabeledDataset& test,
                           MeasureId measure, const GridOptions& opts = {},
                           std::uint64_t seed = 1);

/// run_fixed_split over a list of (train, test) pairs and measures, shaped
/// into the common RunReport structure (one cell per dataset x measure).
RunReport run_fixed_plan(const std::vector<std::pair<LabeledDataset, LabeledDataset>>& splits,
                         const std::vector<MeasureId>& measures, const GridOptions& opts = {},
                         std::uint64_t seed = 1);

} // namespace tsdist

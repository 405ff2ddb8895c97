#include "tsdist/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "tsdist/elastic.hpp"
#include "tsdist/version.hpp"

namespace tsdist {

namespace {

bool is_lockstep(MeasureId m) {
  return m == MeasureId::Euclidean || m == MeasureId::FC || m == MeasureId::AR;
}

} // namespace

PreparedDataset::PreparedDataset(const LabeledDataset& raw, const std::vector<MeasureId>& measures,
                                 const GridOptions& opts, std::size_t min_per_class) {
  validate_for_cv(raw, min_per_class);
  name_ = raw.name;
  labels_ = raw.labels;
  elastic_length_ = raw.max_length();

  elastic_.reserve(raw.size());
  for (const auto& s : raw.items) elastic_.push_back(znormalize(s));

  bool need_lockstep = std::any_of(measures.begin(), measures.end(), is_lockstep);
  if (raw.equal_lengths()) {
    lockstep_length_ = elastic_length_;
  } else if (need_lockstep) {
    // Unequal lengths: resample raw series to the longest, then normalize.
    lockstep_length_ = raw.max_length();
    lockstep_.reserve(raw.size());
    for (const auto& s : raw.items) lockstep_.push_back(znormalize(resample(s, lockstep_length_)));
  } else {
    lockstep_length_ = elastic_length_;
  }

  for (MeasureId m : measures) {
    std::size_t n = is_lockstep(m) ? lockstep_length_ : elastic_length_;
    grids_.emplace(m, build_grid(m, n, opts));
  }

  // Feature caches, built once up front so workers only ever read.
  if (grids_.count(MeasureId::FC)) {
    spectra_.reserve(size());
    for (const auto& s : lockstep_view()) spectra_.push_back(dft(s));
  }
  if (auto it = grids_.find(MeasureId::AR); it != grids_.end()) {
    for (const GridPoint& p : it->second.points) {
      auto eta = static_cast<std::size_t>(p.a);
      auto& coeffs = ar_[eta];
      coeffs.reserve(size());
      for (const auto& s : lockstep_view()) coeffs.push_back(yule_walker(s, eta));
    }
  }
}

const ParameterGrid& PreparedDataset::grid(MeasureId m) const {
  auto it = grids_.find(m);
  if (it == grids_.end()) {
    throw std::logic_error("no grid prepared for measure " + measure_name(m));
  }
  return it->second;
}

const std::vector<ARCoefficients>& PreparedDataset::ar_coeffs(std::size_t eta) const {
  auto it = ar_.find(eta);
  if (it == ar_.end()) {
    throw std::logic_error("no AR cache for order " + std::to_string(eta));
  }
  return it->second;
}

PairDistance bind_measure(const PreparedDataset& prep, MeasureId m, const GridPoint& pt,
                          std::uint64_t seed, std::size_t repetition, int fold) {
  switch (m) {
    case MeasureId::Random: {
      RandomStream stream(seed, {fnv1a(prep.name()), repetition, static_cast<std::uint64_t>(fold),
                                 static_cast<std::uint64_t>(StreamPurpose::RandomMeasure)});
      return [stream](std::size_t i, std::size_t j) { return stream.uniform_at(i, j); };
    }
    case MeasureId::Euclidean: {
      const auto& v = prep.lockstep_view();
      return [&v](std::size_t i, std::size_t j) {
        return euclidean_distance(v[i].samples(), v[j].samples());
      };
    }
    case MeasureId::FC: {
      const auto& sp = prep.spectra();
      auto theta = static_cast<std::size_t>(pt.a);
      return [&sp, theta](std::size_t i, std::size_t j) {
        return fc_distance(sp[i], sp[j], theta);
      };
    }
    case MeasureId::AR: {
      const auto& coeffs = prep.ar_coeffs(static_cast<std::size_t>(pt.a));
      return [&coeffs](std::size_t i, std::size_t j) {
        return ar_distance(coeffs[i], coeffs[j]);
      };
    }
    case MeasureId::DTW: {
      const auto& v = prep.elastic_view();
      auto omega = static_cast<std::size_t>(pt.a);
      return [&v, omega](std::size_t i, std::size_t j) {
        return dtw(v[i].samples(), v[j].samples(), omega);
      };
    }
    case MeasureId::EDR: {
      const auto& v = prep.elastic_view();
      double eps = pt.a;
      return [&v, eps](std::size_t i, std::size_t j) {
        return edr(v[i].samples(), v[j].samples(), eps);
      };
    }
    case MeasureId::TWED: {
      const auto& v = prep.elastic_view();
      double nu = pt.a, lambda = pt.b;
      return [&v, nu, lambda](std::size_t i, std::size_t j) {
        return twed(v[i].samples(), v[j].samples(), nu, lambda);
      };
    }
    case MeasureId::MJC: {
      const auto& v = prep.elastic_view();
      double beta = pt.a;
      return [&v, beta](std::size_t i, std::size_t j) {
        return mjc(v[i].samples(), v[j].samples(), beta);
      };
    }
  }
  throw std::logic_error("bind_measure: unhandled measure");
}

namespace {

void square_table_into(DistanceTable& t, const std::vector<std::size_t>& ids,
                       const PairDistance& d, bool symmetric) {
  const std::size_t n = ids.size();
  t = DistanceTable(n, n);
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double v = d(ids[i], ids[j]);
        t.at(i, j) = v;
        t.at(j, i) = v;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = d(ids[i], ids[j]);
    }
  }
}

void cross_table_into(DistanceTable& t, const std::vector<std::size_t>& queries,
                      const std::vector<std::size_t>& refs, const PairDistance& d) {
  t = DistanceTable(queries.size(), refs.size());
  for (std::size_t q = 0; q < queries.size(); ++q) {
    for (std::size_t r = 0; r < refs.size(); ++r) t.at(q, r) = d(queries[q], refs[r]);
  }
}

std::vector<int> sub_labels(const std::vector<int>& labels, const std::vector<std::size_t>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (std::size_t i : ids) out.push_back(labels[i]);
  return out;
}

// Shared by the CV cell and the fixed-split path: grid search on the
// training ids (LOO), then evaluation of the chosen point on the queries.
CellResult evaluate_split(const PreparedDataset& prep, MeasureId measure,
                          const std::vector<std::size_t>& train_ids,
                          const std::vector<std::size_t>& test_ids, std::uint64_t seed,
                          std::size_t repetition, int fold) {
  const ParameterGrid& grid = prep.grid(measure);
  auto train_labels = sub_labels(prep.labels(), train_ids);
  auto test_labels = sub_labels(prep.labels(), test_ids);

  DistanceTable table;
  std::size_t best_index = 0;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t gi = 0; gi < grid.points.size(); ++gi) {
    auto d = bind_measure(prep, measure, grid.points[gi], seed, repetition, fold);
    square_table_into(table, train_ids, d, measure != MeasureId::Random);
    double err = loo_error(train_labels, table);
    if (err < best_err) {
      best_err = err;
      best_index = gi;
    }
  }

  auto chosen = bind_measure(prep, measure, grid.points[best_index], seed, repetition, fold);
  cross_table_into(table, test_ids, train_ids, chosen);

  CellResult cell;
  cell.dataset = prep.name();
  cell.measure = measure;
  cell.repetition = repetition;
  cell.fold = fold;
  cell.param_index = best_index;
  cell.param_label = format_point(measure, grid.points[best_index]);
  cell.train_error = best_err;
  cell.test_error = classify_1nn(test_labels, train_labels, table);
  return cell;
}

} // namespace

CellResult run_cell(const PreparedDataset& prep, MeasureId measure, const FoldAssignment& folds,
                    int fold, std::uint64_t seed) {
  auto train_ids = folds.indices_not_in_fold(fold);
  auto test_ids = folds.indices_in_fold(fold);
  if (train_ids.empty() || test_ids.empty()) {
    throw std::invalid_argument("run_cell: empty train or test fold");
  }
  return evaluate_split(prep, measure, train_ids, test_ids, seed, folds.repetition, fold);
}

std::vector<std::vector<double>> RunReport::error_matrix() const {
  std::vector<std::vector<double>> out;
  out.reserve(datasets.size());
  for (const auto& ds : datasets) {
    std::vector<double> row;
    row.reserve(ds.measures.size());
    for (const auto& m : ds.measures) row.push_back(m.mean_test_error);
    out.push_back(std::move(row));
  }
  return out;
}

void recompute_statistics(RunReport& report) {
  const std::size_t n_measures = report.measure_names.size();

  for (auto& ds : report.datasets) {
    std::vector<std::vector<double>> fold_accuracies;
    for (auto& mr : ds.measures) {
      double train_sum = 0.0, test_sum = 0.0;
      std::vector<double> accs;
      accs.reserve(mr.cells.size());
      if (!mr.grid_labels.empty()) mr.param_histogram.assign(mr.grid_labels.size(), 0);
      for (const CellResult& c : mr.cells) {
        train_sum += c.train_error;
        test_sum += c.test_error;
        if (!mr.grid_labels.empty()) mr.param_histogram[c.param_index]++;
        accs.push_back(1.0 - c.test_error);
      }
      mr.mean_train_error = train_sum / static_cast<double>(mr.cells.size());
      mr.mean_test_error = test_sum / static_cast<double>(mr.cells.size());
      fold_accuracies.push_back(std::move(accs));
    }
    if (n_measures >= 2) ds.verdict = best_measure_significance(fold_accuracies);
  }

  report.ranks = rank_measures(report.error_matrix());

  // Global comparison on the per-dataset average accuracies, Holm-corrected
  // over all measure pairs.
  report.global_significance.clear();
  if (n_measures >= 2) {
    std::vector<std::vector<double>> mean_accs(n_measures);
    for (std::size_t m = 0; m < n_measures; ++m) {
      for (const auto& ds : report.datasets) {
        mean_accs[m].push_back(1.0 - ds.measures[m].mean_test_error);
      }
    }
    std::vector<double> ps;
    for (std::size_t a = 0; a < n_measures; ++a) {
      for (std::size_t b = a + 1; b < n_measures; ++b) {
        PairwiseSignificance sig;
        sig.measure_a = a;
        sig.measure_b = b;
        auto res = wilcoxon_signed_rank(mean_accs[a], mean_accs[b]);
        sig.has_p = res.outcome == WilcoxonResult::Outcome::PValue;
        sig.p = res.p;
        report.global_significance.push_back(sig);
        ps.push_back(sig.has_p ? sig.p : 1.0);
      }
    }
    auto flags = holm_bonferroni(ps, 0.05);
    for (std::size_t i = 0; i < flags.size(); ++i) report.global_significance[i].reject = flags[i];
  }
}

namespace {

// Aggregation shared by the CV and fixed-split drivers. `cells[d][m]` holds
// that dataset/measure pair's cells in canonical order.
RunReport assemble_report(const std::vector<const LabeledDataset*>& raw,
                          const std::vector<PreparedDataset>& prepared,
                          const std::vector<MeasureId>& measures,
                          std::vector<std::vector<std::vector<CellResult>>> cells,
                          std::string mode, std::uint64_t seed, std::size_t repetitions,
                          std::size_t folds, const GridOptions& opts) {
  RunReport report;
  report.version = TSDIST_VERSION;
  report.mode = std::move(mode);
  report.seed = seed;
  report.repetitions = repetitions;
  report.folds = folds;
  report.nu_min = opts.nu_min;
  for (MeasureId m : measures) report.measure_names.push_back(measure_name(m));

  for (std::size_t d = 0; d < prepared.size(); ++d) {
    const PreparedDataset& prep = prepared[d];
    DatasetReport ds;
    ds.name = prep.name();
    ds.items = raw[d]->size();
    ds.classes = raw[d]->num_classes();
    ds.min_length = raw[d]->min_length();
    ds.max_length = raw[d]->max_length();
    auto counts = raw[d]->class_counts();
    std::size_t min_count = *std::min_element(counts.begin(), counts.end());
    ds.balanced_size = min_count * counts.size();
    ds.label_names = raw[d]->label_names;

    for (std::size_t m = 0; m < measures.size(); ++m) {
      MeasureReport mr;
      mr.measure = measures[m];
      const ParameterGrid& grid = prep.grid(measures[m]);
      for (const GridPoint& p : grid.points) {
        mr.grid_labels.push_back(format_point(measures[m], p));
      }
      mr.cells = std::move(cells[d][m]);
      ds.measures.push_back(std::move(mr));
    }
    report.datasets.push_back(std::move(ds));
  }

  recompute_statistics(report);
  return report;
}

} // namespace

RunReport run_plan(const EvaluationPlan& plan) {
  if (plan.datasets.empty()) throw std::invalid_argument("run_plan: no datasets");
  if (plan.measures.empty()) throw std::invalid_argument("run_plan: no measures");
  if (plan.repetitions < 1) throw std::invalid_argument("run_plan: repetitions must be >= 1");
  if (plan.folds < 2) throw std::invalid_argument("run_plan: folds must be >= 2");

  std::vector<PreparedDataset> prepared;
  prepared.reserve(plan.datasets.size());
  for (const auto& ds : plan.datasets) {
    prepared.emplace_back(ds, plan.measures, plan.grid_options, plan.folds);
  }

  // Fold assignments per (dataset, repetition), shared across measures so
  // that per-fold accuracies are matched samples.
  std::vector<std::vector<FoldAssignment>> assignments(plan.datasets.size());
  for (std::size_t d = 0; d < plan.datasets.size(); ++d) {
    for (std::size_t r = 0; r < plan.repetitions; ++r) {
      assignments[d].push_back(balance_and_fold(plan.datasets[d], r, plan.seed, plan.folds));
    }
  }

  const std::size_t n_measures = plan.measures.size();
  const std::size_t cells_per_pair = plan.repetitions * plan.folds;
  const std::size_t total = plan.datasets.size() * n_measures * cells_per_pair;

  std::vector<CellResult> results(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= total) return;
      std::size_t f = t % plan.folds;
      std::size_t r = (t / plan.folds) % plan.repetitions;
      std::size_t m = (t / cells_per_pair) % n_measures;
      std::size_t d = t / (cells_per_pair * n_measures);
      try {
        results[t] = run_cell(prepared[d], plan.measures[m], assignments[d][r],
                              static_cast<int>(f), plan.seed);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };

  std::size_t n_workers = plan.workers ? plan.workers : std::thread::hardware_concurrency();
  if (n_workers < 1) n_workers = 1;
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t t = 0; t < total; ++t) {
    if (errors[t]) {
      std::size_t f = t % plan.folds;
      std::size_t r = (t / plan.folds) % plan.repetitions;
      std::size_t m = (t / cells_per_pair) % n_measures;
      std::size_t d = t / (cells_per_pair * n_measures);
      try {
        std::rethrow_exception(errors[t]);
      } catch (const std::exception& e) {
        throw std::runtime_error("cell failed (dataset " + plan.datasets[d].name + ", measure " +
                                 measure_name(plan.measures[m]) + ", repetition " +
                                 std::to_string(r) + ", fold " + std::to_string(f) +
                                 "): " + e.what());
      }
    }
  }

  std::vector<std::vector<std::vector<CellResult>>> grouped(plan.datasets.size());
  for (std::size_t d = 0; d < plan.datasets.size(); ++d) {
    grouped[d].resize(n_measures);
    for (std::size_t m = 0; m < n_measures; ++m) {
      auto& bucket = grouped[d][m];
      bucket.reserve(cells_per_pair);
      std::size_t base = (d * n_measures + m) * cells_per_pair;
      for (std::size_t c = 0; c < cells_per_pair; ++c) bucket.push_back(results[base + c]);
    }
  }

  std::vector<const LabeledDataset*> raw;
  for (const auto& ds : plan.datasets) raw.push_back(&ds);
  return assemble_report(raw, prepared, plan.measures, std::move(grouped), "cv", plan.seed,
                         plan.repetitions, plan.folds, plan.grid_options);
}

namespace {

// Aligns the test dataset's label ids to the training dataset's mapping,
// appending label names seen only in the test split.
LabeledDataset merge_split(const LabeledDataset& train, const LabeledDataset& test,
                           std::vector<std::size_t>& train_ids, std::vector<std::size_t>& test_ids) {
  LabeledDataset merged;
  merged.name = train.name;
  merged.label_names = train.label_names;
  auto id_for = [&merged](const std::string& name) {
    for (std::size_t i = 0; i < merged.label_names.size(); ++i) {
      if (merged.label_names[i] == name) return static_cast<int>(i);
    }
    merged.label_names.push_back(name);
    return static_cast<int>(merged.label_names.size() - 1);
  };
  for (std::size_t i = 0; i < train.size(); ++i) {
    train_ids.push_back(merged.items.size());
    merged.items.push_back(train.items[i]);
    merged.labels.push_back(train.labels[i]);
  }
  for (std::size_t i = 0; i < test.size(); ++i) {
    test_ids.push_back(merged.items.size());
    merged.items.push_back(test.items[i]);
    merged.labels.push_back(id_for(test.label_names[static_cast<std::size_t>(test.labels[i])]));
  }
  return merged;
}

} // namespace

CellResult run_fixed_split(const LabeledDataset& train, const LabeledDataset& test,
                           MeasureId measure, const GridOptions& opts, std::uint64_t seed) {
  if (train.size() == 0 || test.size() == 0) {
    throw std::invalid_argument("run_fixed_split: empty train or test split");
  }
  std::vector<std::size_t> train_ids, test_ids;
  LabeledDataset merged = merge_split(train, test, train_ids, test_ids);
  PreparedDataset prep(merged, {measure}, opts, /*min_per_class=*/1);
  return evaluate_split(prep, measure, train_ids, test_ids, seed, 0, 0);
}

RunReport run_fixed_plan(const std::vector<std::pair<LabeledDataset, LabeledDataset>>& splits,
                         const std::vector<MeasureId>& measures, const GridOptions& opts,
                         std::uint64_t seed) {
  if (splits.empty()) throw std::invalid_argument("run_fixed_plan: no splits");
  if (measures.empty()) throw std::invalid_argument("run_fixed_plan: no measures");

  std::vector<PreparedDataset> prepared;
  std::vector<const LabeledDataset*> raw;
  std::vector<std::vector<std::vector<CellResult>>> grouped(splits.size());
  std::vector<LabeledDataset> merged_store;
  merged_store.reserve(splits.size());

  for (std::size_t d = 0; d < splits.size(); ++d) {
    std::vector<std::size_t> train_ids, test_ids;
    merged_store.push_back(merge_split(splits[d].first, splits[d].second, train_ids, test_ids));
  }
  for (std::size_t d = 0; d < splits.size(); ++d) {
    prepared.emplace_back(merged_store[d], measures, opts, /*min_per_class=*/1);
    raw.push_back(&merged_store[d]);
    grouped[d].resize(measures.size());
    std::vector<std::size_t> train_ids, test_ids;
    for (std::size_t i = 0; i < splits[d].first.size(); ++i) train_ids.push_back(i);
    for (std::size_t i = 0; i < splits[d].second.size(); ++i) {
      test_ids.push_back(splits[d].first.size() + i);
    }
    for (std::size_t m = 0; m < measures.size(); ++m) {
      grouped[d][m].push_back(
          evaluate_split(prepared[d], measures[m], train_ids, test_ids, seed, 0, 0));
    }
  }
  return assemble_report(raw, prepared, measures, std::move(grouped), "fixed", seed, 1, 1, opts);
}

} // namespace tsdist

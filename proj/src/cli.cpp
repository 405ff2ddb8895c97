#include "tsdist/cli.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsdist/elastic.hpp"
#include "tsdist/harness.hpp"
#include "tsdist/lockstep.hpp"
#include "tsdist/report.hpp"
#include "tsdist/ucr.hpp"
#include "tsdist/version.hpp"

namespace tsdist {

namespace {

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct DistanceArgs {
  std::string measure;
  std::string file_a, file_b;
  bool znorm = false;
  int order = 2;          // lp
  std::size_t theta = 1;  // fc
  std::size_t eta = 1;    // ar
  long long omega = -1;   // dtw; -1 = unconstrained
  double epsilon = 0.1;   // edr
  double nu = 1e-4;       // twed
  double lambda = 0.0;    // twed
  double beta = 1.0;      // mjc
  std::uint64_t seed = 1; // random
};

int do_distance(const DistanceArgs& a, std::ostream& out) {
  TimeSeries x = load_series(a.file_a);
  TimeSeries y = load_series(a.file_b);
  if (a.znorm) {
    x = znormalize(x);
    y = znormalize(y);
  }
  double value = 0.0;
  if (a.measure == "lp") {
    value = lp_distance(x.samples(), y.samples(), a.order);
  } else {
    switch (parse_measure(a.measure)) {
      case MeasureId::Euclidean:
        value = euclidean_distance(x.samples(), y.samples());
        break;
      case MeasureId::FC:
        value = fc_distance(dft(x), dft(y), a.theta);
        break;
      case MeasureId::AR:
        value = ar_distance(yule_walker(x, a.eta), yule_walker(y, a.eta));
        break;
      case MeasureId::DTW:
        value = (a.omega < 0) ? dtw(x.samples(), y.samples())
                              : dtw(x.samples(), y.samples(), static_cast<std::size_t>(a.omega));
        break;
      case MeasureId::EDR:
        value = edr(x.samples(), y.samples(), a.epsilon);
        break;
      case MeasureId::TWED:
        value = twed(x.samples(), y.samples(), a.nu, a.lambda);
        break;
      case MeasureId::MJC:
        value = mjc(x.samples(), y.samples(), a.beta);
        break;
      case MeasureId::Random: {
        RandomStream stream(a.seed, {static_cast<std::uint64_t>(StreamPurpose::RandomMeasure)});
        value = random_measure(stream);
        break;
      }
    }
  }
  out << fmt17(value) << '\n';
  return 0;
}

struct GridsArgs {
  std::size_t n = 0;
  std::string measure; // empty = all
  double nu_min = 1e-4;
};

int do_grids(const GridsArgs& a, std::ostream& out) {
  GridOptions opts;
  opts.nu_min = a.nu_min;
  std::vector<MeasureId> which;
  if (a.measure.empty()) {
    which = all_measures();
  } else {
    which.push_back(parse_measure(a.measure));
  }
  for (MeasureId m : which) {
    ParameterGrid grid = build_grid(m, a.n, opts);
    out << measure_name(m) << " (" << grid.points.size() << " points)\n";
    for (const GridPoint& p : grid.points) out << "  " << format_point(m, p) << '\n';
  }
  return 0;
}

struct RunArgs {
  std::vector<std::string> data;
  std::vector<std::string> train;
  std::vector<std::string> test;
  std::string measures = "all";
  std::string mode = "cv";
  std::string out_dir = "report";
  std::uint64_t seed = 1;
  std::size_t repetitions = 20;
  std::size_t folds = 3;
  std::size_t workers = 0;
  double nu_min = 1e-4;
  std::vector<std::string> sharpshooter;
};

std::vector<MeasureId> parse_measure_list(const std::string& csv) {
  if (csv == "all") return all_measures();
  std::vector<MeasureId> out;
  std::string tok;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!tok.empty()) out.push_back(parse_measure(tok));
      tok.clear();
    } else {
      tok.push_back(c);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty measure list");
  return out;
}

ReportOptions report_options(const std::vector<std::string>& pairs) {
  ReportOptions opts;
  for (const std::string& spec : pairs) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("sharpshooter pair must be <primary>:<baseline>, got '" + spec +
                                  "'");
    }
    opts.sharpshooter_pairs.push_back({spec.substr(0, colon), spec.substr(colon + 1)});
  }
  return opts;
}

int do_run(const RunArgs& a, std::ostream& out) {
  GridOptions gopts;
  gopts.nu_min = a.nu_min;
  auto measures = parse_measure_list(a.measures);

  RunReport report;
  if (a.mode == "cv") {
    if (a.data.empty()) throw std::invalid_argument("cv mode needs at least one --data file");
    EvaluationPlan plan;
    plan.measures = measures;
    plan.seed = a.seed;
    plan.repetitions = a.repetitions;
    plan.folds = a.folds;
    plan.grid_options = gopts;
    plan.workers = a.workers;
    for (const auto& path : a.data) plan.datasets.push_back(load_ucr(path));
    report = run_plan(plan);
  } else if (a.mode == "fixed") {
    if (a.train.empty() || a.train.size() != a.test.size()) {
      throw std::invalid_argument("fixed mode needs matching --train/--test file pairs");
    }
    std::vector<std::pair<LabeledDataset, LabeledDataset>> splits;
    for (std::size_t i = 0; i < a.train.size(); ++i) {
      splits.push_back({load_ucr(a.train[i]), load_ucr(a.test[i])});
    }
    report = run_fixed_plan(splits, measures, gopts, a.seed);
  } else {
    throw std::invalid_argument("mode must be 'cv' or 'fixed', got '" + a.mode + "'");
  }

  emit_report(report, a.out_dir, report_options(a.sharpshooter));
  out << "report written to " << a.out_dir << '\n';
  return 0;
}

struct StatsArgs {
  std::string cells;
  std::string out_dir = "stats";
};

int do_stats(const StatsArgs& a, std::ostream& out) {
  RunReport report = report_from_cells(a.cells);
  emit_statistics(report, a.out_dir);
  out << "statistics written to " << a.out_dir << '\n';
  return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tsdist: time series dissimilarity measures and a 1NN benchmark harness"};
  app.set_version_flag("--version", TSDIST_VERSION);
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "execute the cross-validation or fixed-split protocol");
  run->add_option("--data", run_args.data, "UCR-format dataset file (repeatable; cv mode)");
  run->add_option("--train", run_args.train, "training split file (repeatable; fixed mode)");
  run->add_option("--test", run_args.test, "test split file (repeatable; fixed mode)");
  run->add_option("--measures", run_args.measures, "comma list of measures, or 'all'");
  run->add_option("--mode", run_args.mode, "cv | fixed")
      ->check(CLI::IsMember({"cv", "fixed"}));
  run->add_option("--out", run_args.out_dir, "report directory");
  run->add_option("--seed", run_args.seed, "RNG seed");
  run->add_option("--repetitions", run_args.repetitions, "cross-validation repetitions");
  run->add_option("--folds", run_args.folds, "number of folds");
  run->add_option("--workers", run_args.workers, "worker threads (0 = hardware)");
  run->add_option("--nu-min", run_args.nu_min, "smallest TWED stiffness in the grid")
      ->check(CLI::IsMember({"1e-4", "0.0001", "1e-5", "0.00001"}));
  run->add_option("--sharpshooter", run_args.sharpshooter,
                  "extra error-gain pair <primary>:<baseline> (repeatable)");

  DistanceArgs dist_args;
  auto* dist = app.add_subcommand("distance", "one dissimilarity value between two series files");
  dist->add_option("--measure", dist_args.measure,
                   "euclidean|lp|fc|ar|dtw|edr|twed|mjc|random")
      ->required();
  dist->add_option("file_a", dist_args.file_a, "first series file")->required();
  dist->add_option("file_b", dist_args.file_b, "second series file")->required();
  dist->add_flag("--znormalize", dist_args.znorm, "z-normalize both series first");
  dist->add_option("--n,--order", dist_args.order, "lp norm order");
  dist->add_option("--theta", dist_args.theta, "fc: number of coefficients");
  dist->add_option("--eta", dist_args.eta, "ar: model order");
  dist->add_option("--omega", dist_args.omega, "dtw: window (default unconstrained)");
  dist->add_option("--epsilon", dist_args.epsilon, "edr: match threshold");
  dist->add_option("--nu", dist_args.nu, "twed: stiffness");
  dist->add_option("--lambda", dist_args.lambda, "twed: mismatch penalty");
  dist->add_option("--beta", dist_args.beta, "mjc: time-advance factor");
  dist->add_option("--seed", dist_args.seed, "random measure seed");

  GridsArgs grids_args;
  auto* grids = app.add_subcommand("grids", "print the parameter grids for a series length");
  grids->add_option("--n", grids_args.n, "series length N")->required();
  grids->add_option("--measure", grids_args.measure, "single measure (default: all)");
  grids->add_option("--nu-min", grids_args.nu_min, "smallest TWED stiffness")
      ->check(CLI::IsMember({"1e-4", "0.0001", "1e-5", "0.00001"}));

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "recompute significance from a cell-detail file");
  stats->add_option("--cells", stats_args.cells, "cells.tsv from a previous run")->required();
  stats->add_option("--out", stats_args.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << TSDIST_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*run) return do_run(run_args, out);
    if (*dist) return do_distance(dist_args, out);
    if (*grids) return do_grids(grids_args, out);
    if (*stats) return do_stats(stats_args, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace tsdist

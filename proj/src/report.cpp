#include "tsdist/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tsdist {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary); // '\n' endings on every platform
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

void write_error_table(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "error_table.tsv");
  out << "dataset";
  for (const auto& m : r.measure_names) out << '\t' << m;
  out << '\n';
  for (const auto& ds : r.datasets) {
    out << ds.name;
    for (const auto& mr : ds.measures) out << '\t' << fmt("%.3f", mr.mean_test_error);
    out << '\n';
  }
}

void write_cells(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "cells.tsv");
  out << "dataset\tmeasure\trepetition\tfold\tparam_index\tparameter\ttrain_error\ttest_error\n";
  for (const auto& ds : r.datasets) {
    for (const auto& mr : ds.measures) {
      for (const auto& c : mr.cells) {
        out << ds.name << '\t' << measure_name(mr.measure) << '\t' << c.repetition << '\t'
            << c.fold << '\t' << c.param_index << '\t' << c.param_label << '\t'
            << fmt("%.17g", c.train_error) << '\t' << fmt("%.17g", c.test_error) << '\n';
      }
    }
  }
}

void write_ranks(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "ranks.tsv");
  out << "dataset";
  for (const auto& m : r.measure_names) out << '\t' << m;
  out << '\n';
  for (std::size_t d = 0; d < r.datasets.size(); ++d) {
    out << r.datasets[d].name;
    for (double rank : r.ranks.per_dataset[d]) out << '\t' << fmt("%.2f", rank);
    out << '\n';
  }
  out << "average_rank";
  for (double rank : r.ranks.average) out << '\t' << fmt("%.2f", rank);
  out << '\n';
}

void write_params(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "params.tsv");
  out << "dataset\tmeasure\tparameter\tcount\tfraction\n";
  for (const auto& ds : r.datasets) {
    for (const auto& mr : ds.measures) {
      if (mr.grid_labels.empty()) continue;
      const auto total = static_cast<double>(mr.cells.size());
      for (std::size_t g = 0; g < mr.grid_labels.size(); ++g) {
        out << ds.name << '\t' << measure_name(mr.measure) << '\t' << mr.grid_labels[g] << '\t'
            << mr.param_histogram[g] << '\t'
            << fmt("%.3f", static_cast<double>(mr.param_histogram[g]) / total) << '\n';
      }
    }
  }
}

void write_significance(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "significance.tsv");
  out << "scope\tmeasure_a\tmeasure_b\tp_value\treject\n";
  for (const auto& sig : r.global_significance) {
    out << "global\t" << r.measure_names[sig.measure_a] << '\t' << r.measure_names[sig.measure_b]
        << '\t' << fmt("%.4g", sig.p) << '\t' << (sig.reject ? "yes" : "no") << '\n';
  }
  if (r.measure_names.size() >= 2) {
    for (const auto& ds : r.datasets) {
      const auto& v = ds.verdict;
      for (std::size_t i = 0; i < v.compared.size(); ++i) {
        out << ds.name << '\t' << r.measure_names[v.best_index] << '\t'
            << r.measure_names[v.compared[i]] << '\t' << fmt("%.4g", v.p_values[i]) << '\t'
            << (v.rejected[i] ? "yes" : "no") << '\n';
      }
    }
  }
}

void write_sharpshooter(const RunReport& r, const fs::path& dir, const ReportOptions& opts) {
  auto index_of = [&r](const std::string& name) -> long {
    for (std::size_t i = 0; i < r.measure_names.size(); ++i) {
      if (r.measure_names[i] == name) return static_cast<long>(i);
    }
    return -1;
  };
  auto pairs = opts.sharpshooter_pairs;
  if (pairs.empty()) {
    if (index_of("twed") >= 0 && index_of("dtw") >= 0) pairs.push_back({"twed", "dtw"});
    if (index_of("twed") >= 0 && index_of("euclidean") >= 0) pairs.push_back({"twed", "euclidean"});
  }
  for (const auto& [primary, baseline] : pairs) {
    long a = index_of(primary), b = index_of(baseline);
    if (a < 0 || b < 0) {
      throw std::invalid_argument("sharpshooter pair references a measure not in the run: " +
                                  primary + " vs " + baseline);
    }
    auto out = open_out(dir / ("sharpshooter_" + primary + "_vs_" + baseline + ".tsv"));
    out << "dataset\ttrain_gain\ttest_gain\n";
    for (const auto& ds : r.datasets) {
      const auto& ma = ds.measures[static_cast<std::size_t>(a)];
      const auto& mb = ds.measures[static_cast<std::size_t>(b)];
      out << ds.name << '\t' << fmt("%.6f", mb.mean_train_error - ma.mean_train_error) << '\t'
          << fmt("%.6f", mb.mean_test_error - ma.mean_test_error) << '\n';
    }
  }
}

void write_manifest(const RunReport& r, const fs::path& dir) {
  auto out = open_out(dir / "manifest.txt");
  out << "tsdist_version: " << r.version << '\n';
  out << "mode: " << r.mode << '\n';
  out << "seed: " << r.seed << '\n';
  out << "repetitions: " << r.repetitions << '\n';
  out << "folds: " << r.folds << '\n';
  out << "nu_min: " << fmt("%g", r.nu_min) << '\n';
  out << "measures:";
  for (const auto& m : r.measure_names) out << ' ' << m;
  out << '\n';
  for (const auto& ds : r.datasets) {
    out << "dataset: " << ds.name << " items=" << ds.items << " classes=" << ds.classes
        << " min_length=" << ds.min_length << " max_length=" << ds.max_length
        << " balanced_size=" << ds.balanced_size << " labels=";
    for (std::size_t i = 0; i < ds.label_names.size(); ++i) {
      out << (i ? "," : "") << ds.label_names[i];
    }
    out << '\n';
  }
  for (const auto& ds : r.datasets) {
    for (const auto& mr : ds.measures) {
      out << "grid: " << ds.name << ' ' << measure_name(mr.measure);
      for (const auto& label : mr.grid_labels) out << ' ' << label;
      out << '\n';
    }
  }
}

void write_summary(const RunReport& r, const fs::path& dir) {
  json root;
  root["version"] = r.version;
  root["mode"] = r.mode;
  root["seed"] = r.seed;
  root["repetitions"] = r.repetitions;
  root["folds"] = r.folds;
  root["nu_min"] = r.nu_min;
  root["measures"] = r.measure_names;

  json datasets = json::array();
  for (std::size_t d = 0; d < r.datasets.size(); ++d) {
    const auto& ds = r.datasets[d];
    json jd;
    jd["name"] = ds.name;
    jd["items"] = ds.items;
    jd["classes"] = ds.classes;
    jd["min_length"] = ds.min_length;
    jd["max_length"] = ds.max_length;
    jd["balanced_size"] = ds.balanced_size;
    jd["label_names"] = ds.label_names;
    json results;
    for (const auto& mr : ds.measures) {
      json jm;
      jm["mean_train_error"] = mr.mean_train_error;
      jm["mean_test_error"] = mr.mean_test_error;
      json hist;
      for (std::size_t g = 0; g < mr.grid_labels.size(); ++g) {
        if (mr.param_histogram[g] > 0) hist[mr.grid_labels[g]] = mr.param_histogram[g];
      }
      jm["chosen_parameters"] = hist;
      json cells = json::array();
      for (const auto& c : mr.cells) {
        cells.push_back({{"repetition", c.repetition},
                         {"fold", c.fold},
                         {"parameter", c.param_label},
                         {"train_error", c.train_error},
                         {"test_error", c.test_error}});
      }
      jm["cells"] = cells;
      results[measure_name(mr.measure)] = jm;
    }
    jd["results"] = results;
    if (r.measure_names.size() >= 2) {
      jd["best_measure"] = r.measure_names[ds.verdict.best_index];
      jd["significantly_best"] = ds.verdict.significantly_best;
    }
    json ranks;
    for (std::size_t m = 0; m < r.measure_names.size(); ++m) {
      ranks[r.measure_names[m]] = r.ranks.per_dataset[d][m];
    }
    jd["ranks"] = ranks;
    datasets.push_back(jd);
  }
  root["datasets"] = datasets;

  json avg;
  for (std::size_t m = 0; m < r.measure_names.size(); ++m) {
    avg[r.measure_names[m]] = r.ranks.average[m];
  }
  root["average_ranks"] = avg;

  json sig = json::array();
  for (const auto& s : r.global_significance) {
    sig.push_back({{"measure_a", r.measure_names[s.measure_a]},
                   {"measure_b", r.measure_names[s.measure_b]},
                   {"p_value", s.p},
                   {"has_p_value", s.has_p},
                   {"reject", s.reject}});
  }
  root["global_significance"] = sig;

  auto out = open_out(dir / "summary.json");
  out << root.dump(2) << '\n';
}

} // namespace

void emit_report(const RunReport& report, const std::string& dir, const ReportOptions& opts) {
  fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (!fs::is_directory(root)) {
    throw std::runtime_error("cannot create report directory '" + dir + "'");
  }
  write_error_table(report, root);
  write_cells(report, root);
  write_ranks(report, root);
  write_params(report, root);
  write_significance(report, root);
  write_sharpshooter(report, root, opts);
  write_manifest(report, root);
  write_summary(report, root);
}

void emit_statistics(const RunReport& report, const std::string& dir) {
  fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (!fs::is_directory(root)) {
    throw std::runtime_error("cannot create report directory '" + dir + "'");
  }
  write_ranks(report, root);
  write_significance(report, root);
}

RunReport report_from_cells(const std::string& cells_path) {
  std::ifstream in(cells_path);
  if (!in) throw std::runtime_error("cannot open '" + cells_path + "'");

  RunReport report;
  report.mode = "stats";
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream ss(line);
    std::string dataset, measure, parameter, field;
    CellResult cell;
    std::getline(ss, dataset, '\t');
    std::getline(ss, measure, '\t');
    std::getline(ss, field, '\t');
    cell.repetition = std::stoul(field);
    std::getline(ss, field, '\t');
    cell.fold = std::stoi(field);
    std::getline(ss, field, '\t');
    cell.param_index = std::stoul(field);
    std::getline(ss, parameter, '\t');
    if (!std::getline(ss, field, '\t')) {
      throw std::runtime_error(cells_path + ": line " + std::to_string(line_no) +
                               ": expected 8 tab-separated fields");
    }
    cell.train_error = std::stod(field);
    if (!std::getline(ss, field, '\t')) {
      throw std::runtime_error(cells_path + ": line " + std::to_string(line_no) +
                               ": expected 8 tab-separated fields");
    }
    cell.test_error = std::stod(field);
    cell.dataset = dataset;
    cell.measure = parse_measure(measure);
    cell.param_label = parameter;

    DatasetReport* ds = nullptr;
    for (auto& existing : report.datasets) {
      if (existing.name == dataset) {
        ds = &existing;
        break;
      }
    }
    if (!ds) {
      report.datasets.emplace_back();
      ds = &report.datasets.back();
      ds->name = dataset;
    }
    MeasureReport* mr = nullptr;
    for (auto& existing : ds->measures) {
      if (existing.measure == cell.measure) {
        mr = &existing;
        break;
      }
    }
    if (!mr) {
      ds->measures.emplace_back();
      mr = &ds->measures.back();
      mr->measure = cell.measure;
    }
    mr->cells.push_back(std::move(cell));
  }
  if (report.datasets.empty()) throw std::runtime_error(cells_path + ": no cells found");

  for (const auto& mr : report.datasets.front().measures) {
    report.measure_names.push_back(measure_name(mr.measure));
  }
  for (const auto& ds : report.datasets) {
    if (ds.measures.size() != report.measure_names.size()) {
      throw std::runtime_error(cells_path + ": dataset '" + ds.name +
                               "' is missing cells for some measures");
    }
  }
  recompute_statistics(report);
  return report;
}

} // namespace tsdist

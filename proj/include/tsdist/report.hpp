#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsdist/harness.hpp"

namespace tsdist {

struct ReportOptions {
  /// Measure pairs (primary, baseline) for the train/test error-gain tables;
  /// gain = error(baseline) - error(primary), positive when the primary
  /// measure wins. Defaults (when present in the run): twed vs dtw and twed
  /// vs euclidean.
  std::vector<std::pair<std::string, std::string>> sharpshooter_pairs;
};

/// Writes the report file set into `dir` (created if missing):
///   error_table.tsv   mean test error per dataset x measure (3 decimals)
///   cells.tsv         per-cell detail, full precision
///   ranks.tsv         per-dataset rank vectors plus the average-rank row
///   sharpshooter_<a>_vs_<b>.tsv   per-dataset train/test error gains
///   params.tsv        chosen-parameter histogram per dataset x measure
///   significance.tsv  global pairwise matrix + per-dataset best-vs-rest rows
///   manifest.txt      seed, grids, dataset inventory, tool version
///   summary.json      the whole report as one structured document
/// Output bytes are a pure function of the RunReport.
void emit_report(const RunReport& report, const std::string& dir, const ReportOptions& opts = {});

/// Rebuilds the per-cell structure from a cells.tsv written by emit_report
/// and recomputes ranks, verdicts, and the significance matrix; used by the
/// `stats` subcommand. Dataset and measure order follow first appearance in
/// the file.
RunReport report_from_cells(const std::string& cells_path);

/// Writes only the statistics outputs (ranks.tsv, significance.tsv) — what
/// the `stats` subcommand regenerates from a cell-detail file.
void emit_statistics(const RunReport& report, const std::string& dir);

} // namespace tsdist

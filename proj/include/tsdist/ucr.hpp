#pragma once

#include <iosfwd>
#include <string>

#include "tsdist/dataset.hpp"

namespace tsdist {

/// Loads a UCR-format text file: one series per row, first field the class
/// label (integer-coercible), remaining fields the samples. The delimiter
/// (comma or whitespace) is detected from the first line. Labels become
/// dense integer ids in first-appearance order; the original label text is
/// kept in label_names. Series are NOT z-normalized here.
/// Parse problems throw std::runtime_error naming the line.
LabeledDataset load_ucr(const std::string& path);

/// Same, reading from a stream; `name` is used for the dataset and in error
/// messages.
LabeledDataset load_ucr(std::istream& in, const std::string& name);

/// Writes the dataset back in comma-delimited UCR format (full precision).
void save_ucr(const LabeledDataset& ds, const std::string& path);

/// Reads one series from a text file of whitespace/comma-separated reals.
TimeSeries load_series(const std::string& path);

} // namespace tsdist

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tsdist {

/// A finite, real-valued, uniformly sampled sequence.
///
/// `znormalized` is set by znormalize(); `constant` marks series whose
/// samples were all equal before normalization (such series normalize to
/// all zeros instead of dividing by a zero deviation).
struct TimeSeries {
  std::vector<double> values;
  bool znormalized = false;
  bool constant = false;

  std::size_t length() const { return values.size(); }
  std::span<const double> samples() const { return values; }
};

/// Builds a TimeSeries from raw samples, validating length and finiteness.
TimeSeries make_series(std::vector<double> values);

/// Population mean of a sample span.
double mean(std::span<const double> v);

/// Population (divide-by-M) standard deviation.
double population_stddev(std::span<const double> v);

/// Rescales to zero mean and unit population variance. Constant input yields
/// an all-zero series with the `constant` flag set.
TimeSeries znormalize(const TimeSeries& s);

/// Linear interpolation onto `target_length` uniformly spaced positions,
/// preserving both endpoints. target_length must be >= 2.
TimeSeries resample(const TimeSeries& s, std::size_t target_length);

} // namespace tsdist

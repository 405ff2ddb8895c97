#include "tsdist/series.hpp"

#include <cmath>
#include <stdexcept>

namespace tsdist {

TimeSeries make_series(std::vector<double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("time series needs at least 2 samples, got " +
                                std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("time series contains a non-finite sample");
  }
  TimeSeries s;
  s.values = std::move(values);
  return s;
}

double mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double population_stddev(std::span<const double> v) {
  double m = mean(v);
  double ss = 0.0;
  for (double x : v) {
    double d = x - m;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(v.size()));
}

TimeSeries znormalize(const TimeSeries& s) {
  if (s.length() < 2) throw std::invalid_argument("znormalize needs at least 2 samples");
  double m = mean(s.samples());
  double sigma = population_stddev(s.samples());

  TimeSeries out;
  out.values.resize(s.length());
  out.znormalized = true;
  if (sigma < 1e-12) {
    // Flat series: all samples map to zero instead of dividing by ~0.
    out.constant = true;
    return out;
  }
  for (std::size_t i = 0; i < s.length(); ++i) out.values[i] = (s.values[i] - m) / sigma;
  return out;
}

TimeSeries resample(const TimeSeries& s, std::size_t target_length) {
  if (target_length < 2) throw std::invalid_argument("resample target length must be >= 2");
  const std::size_t m = s.length();
  TimeSeries out;
  out.znormalized = false;
  out.constant = s.constant;
  out.values.resize(target_length);
  const double span = static_cast<double>(m - 1);
  const double denom = static_cast<double>(target_length - 1);
  for (std::size_t i = 0; i < target_length; ++i) {
    // i*(m-1) is exact; the single division keeps the endpoints exact too.
    double pos = static_cast<double>(i) * span / denom;
    std::size_t k = static_cast<std::size_t>(pos);
    if (k >= m - 1) k = m - 2;
    double frac = pos - static_cast<double>(k);
    out.values[i] = s.values[k] * (1.0 - frac) + s.values[k + 1] * frac;
  }
  return out;
}

} // namespace tsdist

#include "tsdist/lockstep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tsdist {

double lp_distance(std::span<const double> x, std::span<const double> y, int n) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("lp_distance: length mismatch (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (n < 1) throw std::invalid_argument("lp_distance: order must be a positive integer");
  if (n == 2) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      double d = x[i] - y[i];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += std::pow(std::abs(x[i] - y[i]), n);
  }
  return std::pow(sum, 1.0 / static_cast<double>(n));
}

double FourierSpectrum::total_energy() const {
  const std::size_t m = source_length;
  const std::size_t h = coeffs.size(); // floor(M/2) + 1
  double e = std::norm(coeffs[0]);
  bool even = (m % 2 == 0);
  for (std::size_t k = 1; k + 1 < h; ++k) e += 2.0 * std::norm(coeffs[k]);
  if (h >= 2) e += (even ? 1.0 : 2.0) * std::norm(coeffs[h - 1]);
  return e;
}

FourierSpectrum dft(std::span<const double> s) {
  const std::size_t m = s.size();
  FourierSpectrum out;
  out.source_length = m;
  out.coeffs.resize(m / 2 + 1);
  const double w = -2.0 * std::numbers::pi / static_cast<double>(m);
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
      double angle = w * static_cast<double>(k) * static_cast<double>(t);
      re += s[t] * std::cos(angle);
      im += s[t] * std::sin(angle);
    }
    out.coeffs[k] = {re, im};
  }
  return out;
}

double fc_distance(const FourierSpectrum& x, const FourierSpectrum& y, std::size_t theta) {
  if (x.source_length != y.source_length) {
    throw std::invalid_argument("fc_distance: spectra from different lengths (" +
                                std::to_string(x.source_length) + " vs " +
                                std::to_string(y.source_length) + ")");
  }
  const std::size_t max_theta = x.source_length / 2;
  if (theta < 1 || theta > max_theta) {
    throw std::invalid_argument("fc_distance: theta " + std::to_string(theta) +
                                " outside [1, " + std::to_string(max_theta) + "]");
  }
  double sum = 0.0;
  for (std::size_t i = 1; i <= theta; ++i) sum += std::norm(x.coeffs[i] - y.coeffs[i]);
  return std::sqrt(sum);
}

ARCoefficients yule_walker(const TimeSeries& s, std::size_t eta) {
  const std::size_t m = s.length();
  if (eta < 1) throw std::invalid_argument("yule_walker: order must be >= 1");
  if (eta >= m) {
    throw std::invalid_argument("yule_walker: order " + std::to_string(eta) +
                                " must be below series length " + std::to_string(m));
  }
  ARCoefficients out;
  out.coeffs.assign(eta, 0.0);
  if (s.constant) return out;

  // Biased autocovariance about the mean.
  double mu = mean(s.samples());
  std::vector<double> r(eta + 1, 0.0);
  for (std::size_t k = 0; k <= eta; ++k) {
    double sum = 0.0;
    for (std::size_t t = 0; t + k < m; ++t) sum += (s.values[t] - mu) * (s.values[t + k] - mu);
    r[k] = sum / static_cast<double>(m);
  }
  if (r[0] < 1e-12) return out; // numerically flat

  // Levinson-Durbin recursion on the Toeplitz system.
  std::vector<double> a(eta, 0.0), prev(eta, 0.0);
  double err = r[0];
  for (std::size_t k = 1; k <= eta; ++k) {
    double acc = r[k];
    for (std::size_t j = 1; j < k; ++j) acc -= a[j - 1] * r[k - j];
    if (err <= 1e-12 * r[0]) break; // perfectly predictable; keep what we have
    double kappa = acc / err;
    prev = a;
    a[k - 1] = kappa;
    for (std::size_t j = 1; j < k; ++j) a[j - 1] = prev[j - 1] - kappa * prev[k - 1 - j];
    err *= (1.0 - kappa * kappa);
  }
  out.coeffs = std::move(a);
  return out;
}

double ar_distance(const ARCoefficients& a, const ARCoefficients& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("ar_distance: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    double d = a.coeffs[i] - b.coeffs[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

} // namespace tsdist

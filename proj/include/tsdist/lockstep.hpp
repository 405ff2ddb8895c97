#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tsdist/series.hpp"

namespace tsdist {

/// Ln-norm distance between equal-length series: (sum |x_i - y_i|^n)^(1/n).
/// Throws std::invalid_argument on length mismatch (message names both
/// lengths) or n < 1.
double lp_distance(std::span<const double> x, std::span<const double> y, int n);

inline double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  return lp_distance(x, y, 2);
}

/// Half spectrum of an unnormalized forward DFT: bins 0..floor(M/2) of a
/// length-M transform, plus enough bookkeeping to reconstruct full-spectrum
/// energy for the Parseval identity.
struct FourierSpectrum {
  std::vector<std::complex<double>> coeffs; // index 0 = DC
  std::size_t source_length = 0;

  std::size_t num_bins() const { return coeffs.size(); }

  /// Sum of |X_k|^2 over the full M-bin spectrum, reconstructed from the
  /// stored half via conjugate symmetry of real input.
  double total_energy() const;
};

/// Direct-summation forward DFT retaining the half spectrum.
FourierSpectrum dft(std::span<const double> s);
inline FourierSpectrum dft(const TimeSeries& s) { return dft(s.samples()); }

/// Euclidean distance over the theta lowest-frequency non-DC coefficients.
/// Requires spectra from equal-length series and 1 <= theta <= floor(M/2).
double fc_distance(const FourierSpectrum& x, const FourierSpectrum& y, std::size_t theta);

/// Autoregressive coefficients a_1..a_eta (a_0 omitted).
struct ARCoefficients {
  std::vector<double> coeffs;
  std::size_t order() const { return coeffs.size(); }
};

/// Fits an AR(eta) model by solving the Yule-Walker equations with biased
/// (divide-by-M) autocovariance estimates via Levinson-Durbin. The series is
/// centered by its mean before estimation. Degenerate input (constant or
/// flagged series) yields all-zero coefficients. Requires eta < length.
ARCoefficients yule_walker(const TimeSeries& s, std::size_t eta);

/// Euclidean distance between coefficient vectors of equal order.
double ar_distance(const ARCoefficients& a, const ARCoefficients& b);

} // namespace tsdist

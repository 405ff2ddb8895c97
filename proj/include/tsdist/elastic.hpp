#pragma once

#include <cstddef>
#include <span>

#include "tsdist/rng.hpp"

namespace tsdist {

/// Dynamic time warping with a Sakoe-Chiba style window.
///
/// Accumulates squared sample differences over the optimal monotone
/// alignment; only cells with j in [i' - omega, i' + omega] around the
/// length-adjusted diagonal i' = round(i*N/M) are admissible. omega = N (or
/// anything >= N) is the unconstrained variant; omega = 0 with equal lengths
/// degenerates to the squared Euclidean distance. Returns the unnormalized
/// accumulated cost.
double dtw(std::span<const double> x, std::span<const double> y, std::size_t omega);

/// Unconstrained DTW.
double dtw(std::span<const double> x, std::span<const double> y);

/// Edit distance on real sequences: Levenshtein-style edit count where
/// samples match iff |x_i - y_j| <= epsilon. Result is integer-valued, in
/// [|M-N|, max(M, N)].
double edr(std::span<const double> x, std::span<const double> y, double epsilon);

/// Time-warped edit distance with stiffness nu (> 0) and mismatch penalty
/// lambda (>= 0), absolute-difference local cost, zero padding x_0 = y_0 = 0.
/// TWED is a metric.
double twed(std::span<const double> x, std::span<const double> y, double nu, double lambda);

/// Minimum jump costs dissimilarity. Greedy alternating jumps between the
/// two series; advancing delta steps in time costs (phi*delta)^2 with
/// phi = beta * sigma, plus the squared sample difference. sigma defaults to
/// 1, the value after z-normalization. Symmetric by construction
/// (min of both jump directions).
double mjc(std::span<const double> x, std::span<const double> y, double beta, double sigma = 1.0);

/// The random baseline: ignores its series arguments and draws one uniform
/// value in [0, 1) from the stream.
double random_measure(RandomStream& r);

} // namespace tsdist

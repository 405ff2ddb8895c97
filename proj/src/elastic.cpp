#include "tsdist/elastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tsdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Band {
  std::size_t lo, hi;
};

// Eq.-style window around the length-adjusted diagonal i' = round(i*N/M),
// with i' clamped into [1, N] so the diagonal cell is always admissible.
inline Band dtw_band(std::size_t i, std::size_t m, std::size_t n, std::size_t omega) {
  long long ip = std::llround(static_cast<double>(i) * static_cast<double>(n) /
                              static_cast<double>(m));
  if (ip < 1) ip = 1;
  if (ip > static_cast<long long>(n)) ip = static_cast<long long>(n);
  auto c = static_cast<std::size_t>(ip);
  std::size_t lo = (omega >= c) ? 1 : c - omega;
  std::size_t hi = std::min(n, c + omega);
  return {lo, hi};
}

} // namespace

double dtw(std::span<const double> x, std::span<const double> y, std::size_t omega) {
  const std::size_t m = x.size(), n = y.size();
  if (m < 2 || n < 2) throw std::invalid_argument("dtw: both series need at least 2 samples");
  omega = std::min(omega, n); // omega = N is already unconstrained

  // Two rolling rows over j = 0..N; cells outside the band read +inf.
  std::vector<double> prev(n + 1, kInf), cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    Band b = dtw_band(i, m, n, omega);
    // Reset only the stretch this row writes or the next row reads.
    std::size_t fill_hi = (i < m) ? std::max(b.hi, dtw_band(i + 1, m, n, omega).hi) : b.hi;
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(b.lo - 1),
              cur.begin() + static_cast<std::ptrdiff_t>(fill_hi + 1), kInf);
    const double xi = x[i - 1];
    for (std::size_t j = b.lo; j <= b.hi; ++j) {
      double best = prev[j - 1];
      if (prev[j] < best) best = prev[j];
      if (cur[j - 1] < best) best = cur[j - 1];
      double d = xi - y[j - 1];
      cur[j] = d * d + best;
    }
    std::swap(prev, cur);
  }
  double result = prev[n];
  if (!std::isfinite(result)) {
    // Unreachable for equal lengths or omega >= N; extreme length mismatches
    // with a tiny window can disconnect the band.
    throw std::logic_error("dtw: window leaves no admissible alignment path");
  }
  return result;
}

double dtw(std::span<const double> x, std::span<const double> y) {
  return dtw(x, y, y.size());
}

double edr(std::span<const double> x, std::span<const double> y, double epsilon) {
  const std::size_t m = x.size(), n = y.size();
  if (m < 1 || n < 1) throw std::invalid_argument("edr: both series need at least 1 sample");
  if (epsilon < 0.0) throw std::invalid_argument("edr: threshold must be nonnegative");

  std::vector<double> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<double>(i);
    const double xi = x[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      if (std::abs(xi - y[j - 1]) <= epsilon) {
        cur[j] = prev[j - 1];
      } else {
        double best = prev[j - 1];
        if (prev[j] < best) best = prev[j];
        if (cur[j - 1] < best) best = cur[j - 1];
        cur[j] = 1.0 + best;
      }
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

double twed(std::span<const double> x, std::span<const double> y, double nu, double lambda) {
  if (!(nu > 0.0)) throw std::invalid_argument("twed: stiffness nu must be positive");
  if (lambda < 0.0) throw std::invalid_argument("twed: penalty lambda must be nonnegative");
  const std::size_t m = x.size(), n = y.size();
  if (m < 1 || n < 1) throw std::invalid_argument("twed: both series need at least 1 sample");

  // Zero padding: x_0 = y_0 = 0 for the f(x_i, x_{i-1})-style terms.
  auto xat = [&](std::size_t i) { return i == 0 ? 0.0 : x[i - 1]; };
  auto yat = [&](std::size_t j) { return j == 0 ? 0.0 : y[j - 1]; };

  std::vector<double> prev(n + 1, kInf), cur(n + 1, kInf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = kInf;
    const double xi = xat(i), xp = xat(i - 1);
    const double del_x = std::abs(xi - xp) + nu + lambda;
    for (std::size_t j = 1; j <= n; ++j) {
      const double yj = yat(j), yp = yat(j - 1);
      double match = prev[j - 1] + std::abs(xi - yj) + std::abs(xp - yp) +
                     2.0 * nu * std::abs(static_cast<double>(i) - static_cast<double>(j));
      double dx = prev[j] + del_x;
      double dy = cur[j - 1] + std::abs(yj - yp) + nu + lambda;
      double best = match;
      if (dx < best) best = dx;
      if (dy < best) best = dy;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

namespace {

// One directional MJC pass starting at the first sample of `a`.
double mjc_directional(std::span<const double> a, std::span<const double> b, double phi) {
  const double phi2 = phi * phi;
  std::size_t ta = 0, tb = 0;
  double cost = 0.0;
  while (ta < a.size() && tb < b.size()) {
    const double av = a[ta];
    double best = kInf;
    std::size_t best_delta = 0;
    for (std::size_t delta = 0; tb + delta < b.size(); ++delta) {
      double advance = phi2 * static_cast<double>(delta) * static_cast<double>(delta);
      if (advance >= best) break; // time penalty alone already loses
      double d = av - b[tb + delta];
      double c = advance + d * d;
      if (c < best) {
        best = c;
        best_delta = delta;
      }
    }
    cost += best;
    ta += 1;
    tb += best_delta + 1;
    std::swap(ta, tb);
    std::swap(a, b);
  }
  return cost;
}

} // namespace

double mjc(std::span<const double> x, std::span<const double> y, double beta, double sigma) {
  if (x.size() < 2 || y.size() < 2) {
    throw std::invalid_argument("mjc: both series need at least 2 samples");
  }
  if (beta < 0.0) throw std::invalid_argument("mjc: beta must be nonnegative");
  const double phi = beta * sigma;
  return std::min(mjc_directional(x, y, phi), mjc_directional(y, x, phi));
}

double random_measure(RandomStream& r) { return r.next_uniform(); }

} // namespace tsdist

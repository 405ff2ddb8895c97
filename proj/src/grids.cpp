#include "tsdist/grids.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tsdist {

const std::vector<MeasureId>& all_measures() {
  static const std::vector<MeasureId> order = {
      MeasureId::Random, MeasureId::Euclidean, MeasureId::FC,   MeasureId::AR,
      MeasureId::DTW,    MeasureId::EDR,       MeasureId::TWED, MeasureId::MJC,
  };
  return order;
}

std::string measure_name(MeasureId m) {
  switch (m) {
    case MeasureId::Random: return "random";
    case MeasureId::Euclidean: return "euclidean";
    case MeasureId::FC: return "fc";
    case MeasureId::AR: return "ar";
    case MeasureId::DTW: return "dtw";
    case MeasureId::EDR: return "edr";
    case MeasureId::TWED: return "twed";
    case MeasureId::MJC: return "mjc";
  }
  return "?";
}

MeasureId parse_measure(const std::string& name) {
  for (MeasureId m : all_measures()) {
    if (measure_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown measure '" + name + "'");
}

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// Compact decimal form for report labels (no trailing zeros).
std::string num(double v) {
  if (v == static_cast<long long>(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  return fmt("%g", v);
}

std::vector<long long> linspace_integers(double lo, double hi, std::size_t count,
                                         long long clamp_lo, long long clamp_hi) {
  std::vector<long long> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    double pos = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
    auto v = static_cast<long long>(std::floor(pos + 0.5)); // round half up
    if (v < clamp_lo) v = clamp_lo;
    if (v > clamp_hi) v = clamp_hi;
    if (out.empty() || out.back() != v) out.push_back(v);
  }
  return out;
}

std::vector<double> linspace_reals(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return out;
}

} // namespace

std::string format_point(MeasureId m, const GridPoint& p) {
  switch (m) {
    case MeasureId::Random:
    case MeasureId::Euclidean: return "-";
    case MeasureId::FC: return "theta=" + num(p.a);
    case MeasureId::AR: return "eta=" + num(p.a);
    case MeasureId::DTW: return "omega=" + num(p.a);
    case MeasureId::EDR: return "epsilon=" + num(p.a);
    case MeasureId::TWED: return "nu=" + num(p.a) + ",lambda=" + num(p.b);
    case MeasureId::MJC: return "beta=" + num(p.a);
  }
  return "?";
}

ParameterGrid build_grid(MeasureId m, std::size_t n, const GridOptions& opts) {
  if (n < 8) {
    throw std::invalid_argument("build_grid: series length " + std::to_string(n) +
                                " is below the minimum of 8");
  }
  const auto nd = static_cast<double>(n);
  ParameterGrid grid;
  grid.measure = m;
  switch (m) {
    case MeasureId::Random:
    case MeasureId::Euclidean:
      grid.points.push_back({});
      break;
    case MeasureId::FC: {
      // theta may not exceed the non-DC half spectrum.
      auto hi = static_cast<long long>(n / 2);
      for (long long v : linspace_integers(2.0, nd / 2.0, 25, 2, hi)) {
        grid.points.push_back({static_cast<double>(v), 0.0});
      }
      break;
    }
    case MeasureId::AR: {
      auto hi = static_cast<long long>(n) - 1;
      for (long long v : linspace_integers(1.0, 0.25 * nd, 25, 1, hi)) {
        grid.points.push_back({static_cast<double>(v), 0.0});
      }
      break;
    }
    case MeasureId::DTW: {
      for (long long v : linspace_integers(0.0, 0.25 * nd, 24, 0, static_cast<long long>(n))) {
        grid.points.push_back({static_cast<double>(v), 0.0});
      }
      grid.points.push_back({nd, 0.0}); // unconstrained variant
      break;
    }
    case MeasureId::EDR: {
      for (double v : linspace_reals(0.02, 1.0, 25)) grid.points.push_back({v, 0.0});
      break;
    }
    case MeasureId::TWED: {
      std::vector<double> nus;
      if (opts.nu_min == 1e-4) {
        nus = {1e-4, 1e-3, 1e-2, 1e-1, 1.0};
      } else {
        double e0 = std::log10(opts.nu_min);
        for (std::size_t k = 0; k < 5; ++k) {
          nus.push_back(std::pow(10.0, e0 * (1.0 - static_cast<double>(k) / 4.0)));
        }
      }
      const double lambdas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
      for (double nu : nus) {
        for (double lambda : lambdas) grid.points.push_back({nu, lambda});
      }
      break;
    }
    case MeasureId::MJC: {
      for (double v : linspace_reals(0.0, 25.0, 24)) grid.points.push_back({v, 0.0});
      grid.points.push_back({1e10, 0.0}); // Euclidean configuration
      break;
    }
  }
  return grid;
}

} // namespace tsdist

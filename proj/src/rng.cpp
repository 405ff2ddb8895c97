#include "tsdist/rng.hpp"

#include <cmath>
#include <numbers>

namespace tsdist {

double RandomStream::next_gaussian() {
  // Box-Muller on two fresh uniforms; u1 is kept away from zero so the log
  // is finite.
  double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace tsdist

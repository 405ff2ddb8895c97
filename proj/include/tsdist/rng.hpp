#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace tsdist {

/// Purpose tags separating the RNG streams used by the evaluation harness.
enum class StreamPurpose : std::uint64_t {
  BalanceFold = 1,
  RandomMeasure = 2,
  Synthesis = 3,
};

namespace detail {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fold_key(std::uint64_t key, std::uint64_t component) {
  return mix64(key ^ mix64(component));
}

} // namespace detail

/// FNV-1a hash, used to key RNG streams by dataset name.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Counter-based random stream: a fixed key (seed plus stream-id components)
/// and a draw counter. Identical (seed, id) pairs produce identical draw
/// sequences regardless of how work is distributed across threads, and
/// stateless draws keyed by extra components (see `uniform_at`) do not even
/// need a shared counter.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) : key_(seed) {
    for (std::uint64_t id : ids) key_ = detail::fold_key(key_, id);
  }

  explicit RandomStream(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next_u64() { return detail::mix64(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

  /// Uniform draw in [0, 1) with 53 random mantissa bits.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny relative to 2^64.
    return next_u64() % n;
  }

  /// Standard normal via Box-Muller; consumes two uniforms per call.
  double next_gaussian();

  /// Stateless uniform in [0, 1) for the given sub-key, independent of the
  /// stream's counter. Used where the draw for a (query, reference) pair must
  /// not depend on evaluation order.
  double uniform_at(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t k = detail::fold_key(detail::fold_key(key_, a), b);
    return static_cast<double>(detail::mix64(k) >> 11) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace tsdist

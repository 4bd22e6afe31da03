#pragma once

#include <cstdint>
#include <initializer_list>

namespace matkern {

// splitmix64 output mix; the whole sampling pipeline is built on it so that
// results are bit-identical across platforms (std:: distributions are not).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Combines a seed with stream keys (round index, matroid index, trial index...)
// so that derived streams are independent and order-free.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> keys) {
  std::uint64_t s = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t k : keys) {
    s = mix64(s ^ mix64(k + 0x3c6ef372fe94f82bULL));
  }
  return s;
}

// Small deterministic generator (splitmix64 sequence).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0, bound); bound >= 1. Multiply-shift; bias is ~2^-64.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // true with probability ceil(2^64/denom)/2^64 >= 1/denom; denom >= 2.
  bool one_in(std::uint64_t denom) {
    const std::uint64_t threshold = ~0ULL / denom + 1;
    return next() < threshold;
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace matkern

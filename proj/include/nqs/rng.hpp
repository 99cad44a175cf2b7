#pragma once

#include <cstdint>
#include <limits>

namespace nqs {

// Counter-based generator: output i of stream s under key k is a fixed
// function of (k, s, i). Substreams derived with split() never overlap
// their parent, which keeps per-round randomness reproducible regardless
// of how many draws earlier rounds consumed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = key_ ^ (stream_ * 0xd1b54a32d192ed03ULL);
    z += (counter_++) * 0x9e3779b97f4a7c15ULL;
    return mix(mix(z) ^ key_);
  }

  /// Independent child stream; does not advance this generator.
  Rng split(std::uint64_t id) const {
    Rng child(0, id);
    child.key_ = mix(key_ + mix(stream_ + 0x243f6a8885a308d3ULL) + id);
    return child;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint8_t bit() { return static_cast<std::uint8_t>((*this)() >> 63); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, n), n > 0, without modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t v;
    do {
      v = (*this)();
    } while (v >= limit);
    return v % n;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace nqs

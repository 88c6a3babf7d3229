#pragma once

#include <cstdint>

#include "hvcode/bigint.hpp"
#include "hvcode/error.hpp"

namespace hvcode {

/// Counter-based 64-bit generator. The k-th output (k = 0, 1, ...) of the
/// stream with key s is
///
///   z = s + (k + 1) * 0x9E3779B97F4A7C15            (mod 2^64)
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   out = z ^ (z >> 31)
///
/// i.e. SplitMix64 seeded with s. The key of substream(seed, i) is
/// mix(seed ^ mix(i + 0xD1B54A32D192ED03)) where mix is the last three lines
/// above. Bounded integers use rejection on the full 64-bit output, so every
/// draw is exactly uniform and platform independent.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static RngStream substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(mix(seed ^ mix(index + 0xD1B54A32D192ED03ULL)));
  }

  std::uint64_t next() {
    ++counter_;
    return mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error(ErrorKind::DomainError, "empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0, bound) for arbitrary-precision bounds.
  BigInt below(const BigInt& bound) {
    if (bound <= 0) throw Error(ErrorKind::DomainError, "empty range");
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    while (true) {
      BigInt r = 0;
      unsigned have = 0;
      while (have < bits) {
        const unsigned take = bits - have < 64 ? bits - have : 64;
        std::uint64_t chunk = next();
        if (take < 64) chunk &= (std::uint64_t{1} << take) - 1;
        r |= BigInt(chunk) << have;
        have += take;
      }
      if (r < bound) return r;
    }
  }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hvcode

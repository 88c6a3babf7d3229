#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hvcode {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Exact binomial coefficient; zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline BigInt catalan(std::int64_t n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace hvcode

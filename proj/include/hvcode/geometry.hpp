#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "hvcode/permutation.hpp"

namespace hvcode {

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Record masks of an arbitrary point set; comparisons are strict, so points
/// sharing a line never dominate each other.
inline std::vector<RecordMask> point_records(std::span<const Point> pts) {
  const std::size_t k = pts.size();
  std::vector<RecordMask> masks(k);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });

  constexpr int kNone = std::numeric_limits<int>::min();
  constexpr int kNoneLo = std::numeric_limits<int>::max();
  int hi = kNone, lo = kNoneLo;
  for (std::size_t g = 0; g < k;) {
    std::size_t e = g;
    while (e < k && pts[order[e]].x == pts[order[g]].x) ++e;
    for (std::size_t t = g; t < e; ++t) {
      const Point p = pts[order[t]];
      masks[order[t]].ul = hi == kNone || hi <= p.y;
      masks[order[t]].bl = lo == kNoneLo || lo >= p.y;
    }
    for (std::size_t t = g; t < e; ++t) {
      hi = std::max(hi, pts[order[t]].y);
      lo = std::min(lo, pts[order[t]].y);
    }
    g = e;
  }
  hi = kNone;
  lo = kNoneLo;
  for (std::size_t g = k; g > 0;) {
    std::size_t b = g;
    while (b > 0 && pts[order[b - 1]].x == pts[order[g - 1]].x) --b;
    for (std::size_t t = b; t < g; ++t) {
      const Point p = pts[order[t]];
      masks[order[t]].ur = hi == kNone || hi <= p.y;
      masks[order[t]].br = lo == kNoneLo || lo >= p.y;
    }
    for (std::size_t t = b; t < g; ++t) {
      hi = std::max(hi, pts[order[t]].y);
      lo = std::min(lo, pts[order[t]].y);
    }
    g = b;
  }
  return masks;
}

}  // namespace hvcode

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "hvcode/bigint.hpp"
#include "hvcode/codec.hpp"
#include "hvcode/error.hpp"
#include "hvcode/geometry.hpp"
#include "hvcode/marked_word.hpp"
#include "hvcode/permutomino.hpp"
#include "hvcode/rng.hpp"
#include "hvcode/series.hpp"

namespace hvcode {

namespace detail {

// Interior letters are base-4 digits: bit 1 selects D over U, bit 0 R over L.
inline Letter letter_of_digit(unsigned d) {
  return {(d & 2u) ? HLetter::D : HLetter::U, (d & 1u) ? VLetter::R : VLetter::L};
}

inline unsigned digit_of_letter(Letter l) {
  return (l.u == HLetter::D ? 2u : 0u) | (l.v == VLetter::R ? 1u : 0u);
}

}  // namespace detail

/// Rank order on marked words of length n, 0 <= r < count(MarkedWords, n).
///
/// The first 2 * 4^(n-2) ranks mark an endpoint: r = e * 4^(n-2) + D with
/// e = 0 for mark 1 and e = 1 for mark n, and D the interior letters read as
/// base-4 digits, letter 2 most significant. The remaining ranks mark an
/// interior L: r - 2 * 4^(n-2) = p * 2 * 4^(n-3) + h * 4^(n-3) + D' with mark
/// p + 2, h the U/D bit of the marked letter, and D' the other n - 3 letters.
inline MarkedWord unrank_marked_word(int n, BigInt r) {
  if (n < 2) throw Error(ErrorKind::DomainError, "marked words have length >= 2");
  if (r < 0 || r >= count(CountFamily::MarkedWords, n)) throw Error(ErrorKind::DomainError, "rank out of range");
  std::vector<Letter> letters(static_cast<std::size_t>(n), kFrame);
  const BigInt block = BigInt(1) << (2 * (n - 2));
  auto fill = [&](BigInt digits, const std::vector<int>& positions) {
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      letters[static_cast<std::size_t>(*it - 1)] = detail::letter_of_digit(static_cast<unsigned>(digits & 3));
      digits >>= 2;
    }
  };
  if (r < 2 * block) {
    const int mark = r < block ? 1 : n;
    std::vector<int> pos;
    for (int i = 2; i < n; ++i) pos.push_back(i);
    fill(r % block, pos);
    return MarkedWord(std::move(letters), mark);
  }
  r -= 2 * block;
  const BigInt sub = BigInt(1) << (2 * (n - 3));
  const int mark = static_cast<int>(r / (2 * sub)) + 2;
  r %= 2 * sub;
  letters[static_cast<std::size_t>(mark - 1)] = {r >= sub ? HLetter::D : HLetter::U, VLetter::L};
  std::vector<int> pos;
  for (int i = 2; i < n; ++i)
    if (i != mark) pos.push_back(i);
  fill(r % sub, pos);
  return MarkedWord(std::move(letters), mark);
}

inline BigInt rank_marked_word(const MarkedWord& w) {
  const int n = w.size();
  const int m = w.mark();
  BigInt digits = 0;
  for (int i = 2; i < n; ++i) {
    if (i == m) continue;
    digits = (digits << 2) | detail::digit_of_letter(w[i]);
  }
  const BigInt block = BigInt(1) << (2 * (n - 2));
  if (m == 1) return digits;
  if (m == n) return block + digits;
  const BigInt sub = BigInt(1) << (2 * (n - 3));
  return 2 * block + BigInt(m - 2) * 2 * sub + (w.u(m) == HLetter::D ? sub : BigInt(0)) + digits;
}

/// Exactly uniform marked word of length n. Since
/// count(MarkedWords, n) = 2(n+2) * 4^(n-3), a uniform rank is a uniform
/// leading digit k in [0, 2(n+2)) followed by n - 3 uniform base-4 digits;
/// the word is built straight from those digits in the rank order of
/// unrank_marked_word, with no big-integer arithmetic.
inline MarkedWord sample_marked_word(int n, RngStream& rng) {
  if (n < 2) throw Error(ErrorKind::DomainError, "marked words have length >= 2");
  std::vector<Letter> letters(static_cast<std::size_t>(n), kFrame);
  if (n == 2) return MarkedWord(std::move(letters), rng.below(2) == 0 ? 1 : 2);

  const auto k = static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * (n + 2))));
  std::uint64_t pool = 0;
  int left = 0;
  auto digit = [&]() {
    if (left == 0) {
      pool = rng.next();
      left = 32;
    }
    const auto d = static_cast<unsigned>(pool & 3u);
    pool >>= 2;
    --left;
    return d;
  };
  int mark;
  int skip;  // position already fixed by the leading digit
  if (k < 8) {
    mark = k < 4 ? 1 : n;
    letters[1] = detail::letter_of_digit(static_cast<unsigned>(k & 3));
    skip = 2;
  } else {
    mark = (k - 8) / 2 + 2;
    letters[static_cast<std::size_t>(mark - 1)] = {((k - 8) & 1) ? HLetter::D : HLetter::U, VLetter::L};
    skip = mark;
  }
  for (int i = 2; i < n; ++i)
    if (i != skip) letters[static_cast<std::size_t>(i - 1)] = detail::letter_of_digit(digit());
  return MarkedWord(std::move(letters), mark);
}

enum class SampleFamily { Square, FullyIndec, ConvexPermutomino };

inline DecodeMode mode_for(SampleFamily f) {
  switch (f) {
    case SampleFamily::Square: return DecodeMode::Square;
    case SampleFamily::FullyIndec: return DecodeMode::FullyIndec;
    case SampleFamily::ConvexPermutomino: return DecodeMode::Permutomino;
  }
  return DecodeMode::Square;
}

inline CountFamily count_family(SampleFamily f) {
  switch (f) {
    case SampleFamily::Square: return CountFamily::Square;
    case SampleFamily::FullyIndec: return CountFamily::FullyIndec;
    case SampleFamily::ConvexPermutomino: return CountFamily::ConvexPermutomino;
  }
  return CountFamily::Square;
}

struct SampleStats {
  std::uint64_t attempts = 0;
  DecodeStats decode;
};

/// Rejection sampler: uniform marked words decoded until one succeeds. The
/// result is the colored permutation; for permutominoes apply phi_inverse.
inline ColoredPermutation sample_code(SampleFamily f, int n, RngStream& rng, SampleStats* stats = nullptr) {
  if (n < 1) throw Error(ErrorKind::DomainError, "size must be positive");
  if (n == 1) {
    if (f == SampleFamily::ConvexPermutomino) throw Error(ErrorKind::DomainError, "permutominoes have size >= 2");
    if (stats) ++stats->attempts;
    return ColoredPermutation(Permutation::identity(1));
  }
  if (f == SampleFamily::FullyIndec && n <= 3)
    throw Error(ErrorKind::DomainError, std::string(to_string(count_family(f))) + " is empty at n = " + std::to_string(n));
  const DecodeMode mode = mode_for(f);
  while (true) {
    if (stats) ++stats->attempts;
    const MarkedWord w = sample_marked_word(n, rng);
    auto out = decode(w, mode, stats ? &stats->decode : nullptr);
    if (auto* cp = std::get_if<ColoredPermutation>(&out)) return std::move(*cp);
    if (auto* ic = std::get_if<InternalContradiction>(&out)) throw Error(ErrorKind::InternalContradiction, ic->diagnostic);
  }
}

using SampledObject = std::variant<ColoredPermutation, Permutomino>;

inline SampledObject sample_object(SampleFamily f, int n, RngStream& rng, SampleStats* stats = nullptr) {
  ColoredPermutation cp = sample_code(f, n, rng, stats);
  if (f == SampleFamily::ConvexPermutomino) return phi_inverse(cp);
  return cp;
}

/// Item i is drawn from substream(seed, i), so the batch does not depend on
/// how it is split across threads.
inline std::vector<SampledObject> sample_batch(SampleFamily f, int n, std::size_t count, std::uint64_t seed,
                                               unsigned threads = 1) {
  std::vector<std::optional<SampledObject>> slots(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  auto work = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      RngStream rng = RngStream::substream(seed, i);
      slots[i] = sample_object(f, n, rng);
    }
  };
  if (threads == 1) {
    work(0, count);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t from = t * chunk, to = std::min(count, from + chunk);
      if (from < to) pool.emplace_back(work, from, to);
    }
  }
  std::vector<SampledObject> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Uniform k-subset of {0..m-1}, sorted (Floyd's algorithm).
inline std::vector<int> sample_subset(int m, int k, RngStream& rng) {
  if (k < 0 || k > m) throw Error(ErrorKind::DomainError, "subset size out of range");
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  std::vector<bool> in(static_cast<std::size_t>(m), false);
  for (int j = m - k; j < m; ++j) {
    const auto t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
    const int pick = in[static_cast<std::size_t>(t)] ? j : t;
    in[static_cast<std::size_t>(pick)] = true;
    chosen.push_back(pick);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// n points on the lattice {0..cols-1} x {0..rows-1}.
struct GridConfig {
  int cols = 0;
  int rows = 0;
  std::vector<Point> points;
};

struct GridPolygon {
  int cols = 0;
  int rows = 0;
  std::vector<Point> turnpoints;
};

inline void check_grid_args(int cols, int rows, int n, int min_n) {
  if (n < min_n || cols < 1 || rows < 1 || n > std::min(cols, rows))
    throw Error(ErrorKind::DomainError, "need " + std::to_string(min_n) + " <= n <= min(cols, rows)");
}

/// Number of generic configurations of n exterior points: the reduced shape
/// is a square permutation, plus a choice of n columns and n rows.
inline BigInt exact_generic_count(int cols, int rows, int n) {
  check_grid_args(cols, rows, n, 1);
  return count(CountFamily::Square, n) * binomial(cols, n) * binomial(rows, n);
}

inline BigInt exact_generic_polygon_count(int cols, int rows, int n) {
  check_grid_args(cols, rows, n, 2);
  return count(CountFamily::ConvexPermutomino, n) * binomial(cols, n) * binomial(rows, n);
}

inline GridConfig sample_exterior_config(int cols, int rows, int n, RngStream& rng) {
  check_grid_args(cols, rows, n, 1);
  const ColoredPermutation shape = sample_code(SampleFamily::Square, n, rng);
  const auto xs = sample_subset(cols, n, rng);
  const auto ys = sample_subset(rows, n, rng);
  GridConfig g{cols, rows, {}};
  for (int i = 1; i <= n; ++i)
    g.points.push_back({xs[static_cast<std::size_t>(i - 1)], ys[static_cast<std::size_t>(shape.perm()(i) - 1)]});
  return g;
}

inline GridPolygon sample_convex_polygon(int cols, int rows, int n, RngStream& rng) {
  check_grid_args(cols, rows, n, 2);
  const Permutomino shape = phi_inverse(sample_code(SampleFamily::ConvexPermutomino, n, rng));
  const auto xs = sample_subset(cols, n, rng);
  const auto ys = sample_subset(rows, n, rng);
  GridPolygon g{cols, rows, {}};
  for (const Point p : shape.turnpoints())
    g.turnpoints.push_back({xs[static_cast<std::size_t>(p.x)], ys[static_cast<std::size_t>(p.y)]});
  return g;
}

/// Generic (distinct columns and rows), inside the grid, no interior point.
inline bool is_valid_config(const GridConfig& g) {
  std::vector<int> xs, ys;
  for (const Point p : g.points) {
    if (p.x < 0 || p.x >= g.cols || p.y < 0 || p.y >= g.rows) return false;
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() || std::adjacent_find(ys.begin(), ys.end()) != ys.end())
    return false;
  const auto masks = point_records(g.points);
  return std::all_of(masks.begin(), masks.end(), [](const RecordMask& m) { return m.exterior(); });
}

/// Convex, generic (one side per line), inside the grid, with 2n turnpoints.
inline bool is_valid_polygon(const GridPolygon& g, int n) {
  if (g.turnpoints.size() != 2 * static_cast<std::size_t>(n)) return false;
  for (const Point p : g.turnpoints)
    if (p.x < 0 || p.x >= g.cols || p.y < 0 || p.y >= g.rows) return false;
  return check_polygon(g.turnpoints, false).ok();
}

}  // namespace hvcode

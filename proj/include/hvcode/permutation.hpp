#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hvcode/error.hpp"

namespace hvcode {

/// A permutation of {1..n} in one-line notation, identified with its
/// point set {(i, sigma(i))}. Positions and values are 1-based.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
        throw Error(ErrorKind::InvalidPermutation, "not a bijection on {1.." + std::to_string(n) + "}");
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  std::vector<int> inverse_values() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i + 1);
    return inv;
  }

  Permutation inverse() const { return Permutation(inverse_values()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Four-direction record flags of one point.
struct RecordMask {
  bool ul = false;
  bool ur = false;
  bool bl = false;
  bool br = false;

  bool upper() const noexcept { return ul || ur; }
  bool left() const noexcept { return ul || bl; }
  bool exterior() const noexcept { return ul || ur || bl || br; }

  friend bool operator==(const RecordMask&, const RecordMask&) = default;
};

/// Record masks of every point, by a prefix/suffix min-max sweep.
inline std::vector<RecordMask> classify_records(const Permutation& p) {
  const auto v = p.values();
  const std::size_t n = v.size();
  std::vector<RecordMask> masks(n);
  int lo = static_cast<int>(n) + 1, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    masks[i].ul = v[i] > hi;
    masks[i].bl = v[i] < lo;
    hi = std::max(hi, v[i]);
    lo = std::min(lo, v[i]);
  }
  lo = static_cast<int>(n) + 1;
  hi = 0;
  for (std::size_t k = n; k-- > 0;) {
    masks[k].ur = v[k] > hi;
    masks[k].br = v[k] < lo;
    hi = std::max(hi, v[k]);
    lo = std::min(lo, v[k]);
  }
  return masks;
}

/// Positions i with sigma(i) = i that are neither bottom-left nor upper-right records.
inline std::vector<int> free_fixed_points(const Permutation& p) {
  const auto masks = classify_records(p);
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i && !masks[i - 1].bl && !masks[i - 1].ur) out.push_back(i);
  return out;
}

/// A permutation with a subset of its free fixed points colored.
class ColoredPermutation {
 public:
  ColoredPermutation() = default;

  ColoredPermutation(Permutation perm, std::vector<int> colored = {})
      : perm_(std::move(perm)), colored_(std::move(colored)) {
    std::sort(colored_.begin(), colored_.end());
    if (std::adjacent_find(colored_.begin(), colored_.end()) != colored_.end())
      throw Error(ErrorKind::InvalidPermutation, "duplicate colored position");
    if (colored_.empty()) return;
    const auto free = free_fixed_points(perm_);
    for (int c : colored_)
      if (!std::binary_search(free.begin(), free.end(), c))
        throw Error(ErrorKind::InvalidPermutation, "colored position " + std::to_string(c) + " is not a free fixed point");
  }

  const Permutation& perm() const noexcept { return perm_; }
  std::span<const int> colored() const noexcept { return colored_; }
  bool is_colored(int i) const { return std::binary_search(colored_.begin(), colored_.end(), i); }
  int size() const noexcept { return perm_.size(); }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<int> colored_;
};

/// Triangular orientation, named by the corner holding the right angle.
/// The record path opposite that corner is empty: NE lacks bottom-left-only
/// points (the classic triangular class), SW lacks upper-right-only points,
/// NW lacks bottom-right-only points, SE lacks upper-left-only points.
enum class Corner { NE = 0, SE = 1, SW = 2, NW = 3 };

/// Rising: every point on the left-upper or right-lower path (321-avoiding).
/// Falling: every point on the right-upper or left-lower path (123-avoiding).
enum class Diagonal { Rising = 0, Falling = 1 };

inline bool in_triangle(const RecordMask& m, Corner c) {
  switch (c) {
    case Corner::NE: return m.ul || m.ur || m.br;
    case Corner::SE: return m.ur || m.br || m.bl;
    case Corner::SW: return m.ul || m.bl || m.br;
    case Corner::NW: return m.ul || m.ur || m.bl;
  }
  return false;
}

inline bool in_parallel(const RecordMask& m, Diagonal d) {
  return d == Diagonal::Rising ? (m.ul || m.br) : (m.ur || m.bl);
}

struct SubclassReport {
  bool square = false;
  std::array<bool, 4> triangular{};  // indexed by Corner
  std::array<bool, 2> parallel{};    // indexed by Diagonal
  bool decomposable = false;
  bool co_decomposable = false;
  int upper_count = 0;
  int left_count = 0;

  bool is_triangular(Corner c) const { return triangular[static_cast<std::size_t>(c)]; }
  bool is_parallel(Diagonal d) const { return parallel[static_cast<std::size_t>(d)]; }
  bool fully_indecomposable() const { return !decomposable && !co_decomposable; }
};

inline bool is_decomposable(const Permutation& p) {
  int hi = 0;
  for (int k = 1; k < p.size(); ++k) {
    hi = std::max(hi, p(k));
    if (hi == k) return true;
  }
  return false;
}

inline bool is_co_decomposable(const Permutation& p) {
  const int n = p.size();
  int lo = n + 1;
  for (int k = 1; k < n; ++k) {
    lo = std::min(lo, p(k));
    if (lo == n - k + 1) return true;
  }
  return false;
}

inline SubclassReport subclass_report(const ColoredPermutation& cp) {
  const auto masks = classify_records(cp.perm());
  SubclassReport r;
  r.square = std::all_of(masks.begin(), masks.end(), [](const RecordMask& m) { return m.exterior(); });
  for (Corner c : {Corner::NE, Corner::SE, Corner::SW, Corner::NW})
    r.triangular[static_cast<std::size_t>(c)] =
        std::all_of(masks.begin(), masks.end(), [c](const RecordMask& m) { return in_triangle(m, c); });
  for (Diagonal d : {Diagonal::Rising, Diagonal::Falling})
    r.parallel[static_cast<std::size_t>(d)] =
        std::all_of(masks.begin(), masks.end(), [d](const RecordMask& m) { return in_parallel(m, d); });
  r.decomposable = is_decomposable(cp.perm());
  r.co_decomposable = is_co_decomposable(cp.perm());
  for (int i = 1; i <= cp.size(); ++i) {
    if (cp.is_colored(i)) continue;
    r.upper_count += masks[i - 1].upper();
    r.left_count += masks[i - 1].left();
  }
  return r;
}

inline SubclassReport subclass_report(const Permutation& p) { return subclass_report(ColoredPermutation(p)); }

inline bool is_square(const Permutation& p) {
  const auto masks = classify_records(p);
  return std::all_of(masks.begin(), masks.end(), [](const RecordMask& m) { return m.exterior(); });
}

/// Order-isomorphic permutation of {1..k} for k distinct values.
inline Permutation standardize(std::span<const int> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(out));
}

namespace detail {

inline bool extend_pattern(std::span<const int> text, std::span<const int> pattern, std::size_t from,
                           std::vector<int>& chosen) {
  const std::size_t k = chosen.size();
  if (k == pattern.size()) return true;
  for (std::size_t i = from; i + (pattern.size() - k) <= text.size(); ++i) {
    const int v = text[i];
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = (chosen[a] < v) == (pattern[a] < pattern[k]);
    if (!ok) continue;
    chosen.push_back(v);
    if (extend_pattern(text, pattern, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Naive subsequence search; exponential, meant for small inputs.
inline bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return detail::extend_pattern(p.values(), pattern.values(), 0, chosen);
}

enum class Symmetry { Inverse, Reverse, Complement, Rot90, Rot180, Rot270, Antidiagonal };

/// Geometric image of the point set; Rot90 is a counterclockwise quarter turn.
inline Permutation transform(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) {
    const int y = p(x);
    int nx = x, ny = y;
    switch (s) {
      case Symmetry::Inverse: nx = y; ny = x; break;
      case Symmetry::Reverse: nx = n + 1 - x; break;
      case Symmetry::Complement: ny = n + 1 - y; break;
      case Symmetry::Rot90: nx = n + 1 - y; ny = x; break;
      case Symmetry::Rot180: nx = n + 1 - x; ny = n + 1 - y; break;
      case Symmetry::Rot270: nx = y; ny = n + 1 - x; break;
      case Symmetry::Antidiagonal: nx = n + 1 - y; ny = n + 1 - x; break;
    }
    out[static_cast<std::size_t>(nx - 1)] = ny;
  }
  return Permutation(std::move(out));
}

// Text format: "3,5,4,1,2"; colored entries carry a '*' suffix, "1,2*,3".

inline ColoredPermutation parse_colored_permutation(std::string_view text) {
  std::vector<int> values;
  std::vector<int> colored;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    bool star = false;
    if (!tok.empty() && tok.back() == '*') {
      star = true;
      tok.remove_suffix(1);
    }
    int v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
      throw Error(ErrorKind::SyntaxError, "bad permutation entry '" + std::string(tok) + "'");
    values.push_back(v);
    if (star) colored.push_back(static_cast<int>(values.size()));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ColoredPermutation(Permutation(std::move(values)), std::move(colored));
}

inline Permutation parse_permutation(std::string_view text) {
  auto cp = parse_colored_permutation(text);
  if (!cp.colored().empty()) throw Error(ErrorKind::SyntaxError, "unexpected colored entry");
  return cp.perm();
}

inline std::string format(const ColoredPermutation& cp) {
  std::string out;
  for (int i = 1; i <= cp.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(cp.perm()(i));
    if (cp.is_colored(i)) out += '*';
  }
  return out;
}

inline std::string format(const Permutation& p) { return format(ColoredPermutation(p)); }

}  // namespace hvcode

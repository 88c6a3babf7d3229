#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hvcode/error.hpp"
#include "hvcode/marked_word.hpp"
#include "hvcode/permutation.hpp"

namespace hvcode {

/// Horizontal/vertical code of a colored square permutation.
///
/// u_i = U iff (i, sigma(i)) is an uncolored upper point, v_j = L iff
/// (sigma^-1(j), j) is an uncolored left point; both ends are (X,Y) and the
/// mark is sigma(1).
inline MarkedWord encode(const ColoredPermutation& cp) {
  const Permutation& p = cp.perm();
  const int n = p.size();
  if (n < 2) throw Error(ErrorKind::DomainError, "encoding needs at least two points");
  const auto masks = classify_records(p);
  for (const auto& m : masks)
    if (!m.exterior()) throw Error(ErrorKind::NotSquare, format(cp) + " has an interior point");
  const auto inv = p.inverse_values();
  std::vector<Letter> letters(static_cast<std::size_t>(n), kFrame);
  for (int i = 2; i < n; ++i) {
    const bool col = cp.is_colored(i);
    letters[static_cast<std::size_t>(i - 1)].u = (masks[i - 1].upper() && !col) ? HLetter::U : HLetter::D;
    const int at = inv[static_cast<std::size_t>(i - 1)];
    const bool col_at = cp.is_colored(at);
    letters[static_cast<std::size_t>(i - 1)].v = (masks[at - 1].left() && !col_at) ? VLetter::L : VLetter::R;
  }
  return MarkedWord(std::move(letters), p(1));
}

inline MarkedWord encode(const Permutation& p) { return encode(ColoredPermutation(p)); }

enum class DecodeMode { Square, FullyIndec, Permutomino };

/// SW: the prefix is confined to the bottom-left corner; NW: to the top-left.
enum class FailureKind { SW, NW };

inline const char* to_string(DecodeMode m) {
  switch (m) {
    case DecodeMode::Square: return "square";
    case DecodeMode::FullyIndec: return "fully-indec";
    case DecodeMode::Permutomino: return "permutomino";
  }
  return "?";
}

inline const char* to_string(FailureKind k) { return k == FailureKind::SW ? "SW" : "NW"; }

/// Classified stop of the decoder. `prefix` is sigma(1..i-1) for SW and its
/// standardization for NW; `pair` is (u_i, v_i) for SW and (u_i, v_{n-i+1})
/// for NW. The suffixes are the letters the decoder did not consume.
struct DecodeFailure {
  int stop_index = 0;
  FailureKind kind = FailureKind::SW;
  Permutation prefix;
  Letter pair;
  std::string suffix_u;
  std::string suffix_v;
};

struct InternalContradiction {
  int step = 0;
  std::string diagnostic;
};

using DecodeOutcome = std::variant<ColoredPermutation, DecodeFailure, InternalContradiction>;

/// Work counters of one decode.
struct DecodeStats {
  std::uint64_t steps = 0;
  std::uint64_t pointer_advances = 0;
};

namespace detail {

class Decoder {
 public:
  Decoder(const MarkedWord& w, DecodeMode mode, DecodeStats* stats)
      : w_(w), mode_(mode), n_(w.size()), used_(static_cast<std::size_t>(n_) + 2, 0), stats_(stats) {
    sigma_.reserve(static_cast<std::size_t>(n_));
  }

  DecodeOutcome run() {
    const int m = w_.mark();
    place(m);
    lu_ = ll_ = m;
    if (m == n_) ru_ = n_;
    if (m == 1) rl_ = 1;

    for (int i = 2; i <= n_; ++i) {
      if (stats_) ++stats_->steps;
      const bool top_left = min_used_ == n_ - i + 2;
      const bool bottom_left = max_used_ == i - 1;
      const bool max_in = used_[static_cast<std::size_t>(n_)] != 0;
      const bool min_in = used_[1] != 0;

      if (i == n_) {
        const auto last = static_cast<int>(static_cast<std::int64_t>(n_) * (n_ + 1) / 2 - used_sum_);
        if (mode_ == DecodeMode::FullyIndec && bottom_left && last == n_) return fail(i, FailureKind::SW);
        if (mode_ != DecodeMode::Square && top_left && last == 1) return fail(i, FailureKind::NW);
        place(last);
        return success();
      }

      const HLetter u = w_.u(i);
      if (u == HLetter::U && !max_in) {
        // Left-upper path.
        if (mode_ == DecodeMode::FullyIndec && bottom_left) return fail(i, FailureKind::SW);
        int j = lu_ + 1;
        while (j <= n_ && (used(j) || w_.v(j) == VLetter::R)) advance(j, +1);
        if (j > n_) return contradiction(i, "no L/Y row above the left-upper path");
        place(j);
        lu_ = j;
        if (j == n_) ru_ = n_;
      } else if (u == HLetter::U) {
        // Right-upper path.
        if (mode_ != DecodeMode::Square && top_left) return fail(i, FailureKind::NW);
        if (top_left) {
          const int r = n_ - i + 1;
          if (w_.v(r) == VLetter::R) return fail(i, FailureKind::NW);
          place(r);
          ru_ = r;
          ll_ = r;
          if (r == 1) rl_ = 1;
        } else {
          int j = ru_ - 1;
          while (j >= 1 && (used(j) || w_.v(j) == VLetter::L)) advance(j, -1);
          if (j < 1) return contradiction(i, "no R/Y row below the right-upper path");
          place(j);
          ru_ = j;
          if (j == 1) rl_ = 1;
        }
      } else if (!min_in) {
        // Left-lower path.
        if (mode_ != DecodeMode::Square && top_left) return fail(i, FailureKind::NW);
        int j = ll_ - 1;
        while (j >= 1 && (used(j) || w_.v(j) == VLetter::R)) advance(j, -1);
        if (j < 1) return contradiction(i, "no L/Y row below the left-lower path");
        if (top_left && j == n_ - i + 1) return fail(i, FailureKind::NW);
        place(j);
        ll_ = j;
        if (j == 1) rl_ = 1;
      } else {
        // Right-lower path.
        int j = rl_ + 1;
        if (bottom_left && mode_ != DecodeMode::Permutomino) return fail(i, FailureKind::SW);
        while (j <= n_ && (used(j) || w_.v(j) == VLetter::L)) advance(j, +1);
        if (bottom_left) {
          if (j != i) return fail(i, FailureKind::SW);
          place(i);
          colored_.push_back(i);
          rl_ = i;
          continue;
        }
        if (j > n_) return contradiction(i, "no R/Y row above the right-lower path");
        place(j);
        rl_ = j;
        if (j == n_) ru_ = n_;
      }
    }
    return contradiction(n_, "decoder ran past the last letter");
  }

 private:
  bool used(int r) const { return used_[static_cast<std::size_t>(r)] != 0; }

  void advance(int& j, int dir) {
    j += dir;
    if (stats_) ++stats_->pointer_advances;
  }

  void place(int r) {
    used_[static_cast<std::size_t>(r)] = 1;
    used_sum_ += r;
    sigma_.push_back(r);
    if (r < min_used_) min_used_ = r;
    if (r > max_used_) max_used_ = r;
  }

  DecodeOutcome success() {
    return ColoredPermutation(Permutation(std::move(sigma_)), std::move(colored_));
  }

  DecodeOutcome fail(int i, FailureKind kind) {
    DecodeFailure f;
    f.stop_index = i;
    f.kind = kind;
    const int shift = kind == FailureKind::NW ? n_ - i + 1 : 0;
    std::vector<int> prefix(sigma_.begin(), sigma_.end());
    for (int& v : prefix) v -= shift;
    f.prefix = Permutation(std::move(prefix));
    f.pair = {w_.u(i), w_.v(kind == FailureKind::NW ? n_ - i + 1 : i)};
    for (int k = i + 1; k <= n_; ++k) f.suffix_u += static_cast<char>(w_.u(k));
    const int from = kind == FailureKind::NW ? 1 : i + 1;
    const int to = kind == FailureKind::NW ? n_ - i : n_;
    for (int k = from; k <= to; ++k) f.suffix_v += static_cast<char>(w_.v(k));
    return f;
  }

  DecodeOutcome contradiction(int i, std::string what) {
    return InternalContradiction{i, std::move(what) + " at step " + std::to_string(i) + " of " + format(w_)};
  }

  const MarkedWord& w_;
  DecodeMode mode_;
  int n_;
  std::vector<char> used_;
  std::vector<int> sigma_;
  std::vector<int> colored_;
  std::int64_t used_sum_ = 0;
  int min_used_ = 1 << 30;
  int max_used_ = 0;
  // Path cursors: left-upper, left-lower, right-upper, right-lower.
  int lu_ = 0, ll_ = 0, ru_ = 0, rl_ = 0;
  DecodeStats* stats_;
};

}  // namespace detail

/// Left-to-right reconstruction of a colored square permutation from its
/// code. Each of the four path searches scans rows monotonically, so a word
/// of length n costs O(n) pointer advances in total.
///
/// Square mode rejects exactly the non-coding words; FullyIndec additionally
/// stops as soon as the prefix is confined to a corner that would make the
/// result decomposable or co-decomposable; Permutomino mode stops on
/// co-decomposable prefixes and accepts a colored fixed point where square
/// mode would stop on a bottom-left confined prefix.
inline DecodeOutcome decode(const MarkedWord& w, DecodeMode mode, DecodeStats* stats = nullptr) {
  return detail::Decoder(w, mode, stats).run();
}

inline bool is_success(const DecodeOutcome& o) { return std::holds_alternative<ColoredPermutation>(o); }

}  // namespace hvcode

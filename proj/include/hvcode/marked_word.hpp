#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hvcode/error.hpp"

namespace hvcode {

enum class HLetter : char { X = 'X', U = 'U', D = 'D' };
enum class VLetter : char { Y = 'Y', L = 'L', R = 'R' };

struct Letter {
  HLetter u = HLetter::X;
  VLetter v = VLetter::Y;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr Letter kFrame{HLetter::X, VLetter::Y};

inline std::string to_string(Letter l) { return {static_cast<char>(l.u), static_cast<char>(l.v)}; }

/// A biword (X,Y) w (X,Y) with w over {U,D}x{L,R}, and a mark m with
/// v_m in {L,Y}. Indices are 1-based.
class MarkedWord {
 public:
  MarkedWord() = default;

  MarkedWord(std::vector<Letter> letters, int mark) : letters_(std::move(letters)), mark_(mark) {
    const int n = size();
    if (n < 2) throw Error(ErrorKind::BadFrame, "a marked word has at least two letters");
    if (letters_.front() != kFrame || letters_.back() != kFrame)
      throw Error(ErrorKind::BadFrame, "first and last letters must be XY");
    for (int i = 2; i < n; ++i) {
      const Letter l = letters_[static_cast<std::size_t>(i - 1)];
      if ((l.u != HLetter::U && l.u != HLetter::D) || (l.v != VLetter::L && l.v != VLetter::R))
        throw Error(ErrorKind::BadFrame, "interior letter " + std::to_string(i) + " outside {U,D}x{L,R}");
    }
    if (mark_ < 1 || mark_ > n) throw Error(ErrorKind::InvalidMark, "mark " + std::to_string(mark_) + " out of range");
    if (v(mark_) == VLetter::R)
      throw Error(ErrorKind::InvalidMark, "mark " + std::to_string(mark_) + " sits on an R letter");
  }

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int mark() const noexcept { return mark_; }
  Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  HLetter u(int i) const { return letters_[static_cast<std::size_t>(i - 1)].u; }
  VLetter v(int j) const { return letters_[static_cast<std::size_t>(j - 1)].v; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  friend bool operator==(const MarkedWord&, const MarkedWord&) = default;

 private:
  std::vector<Letter> letters_;
  int mark_ = 0;
};

inline Letter parse_letter(std::string_view tok) {
  if (tok == "XY") return kFrame;
  if (tok.size() == 2 && (tok[0] == 'U' || tok[0] == 'D') && (tok[1] == 'L' || tok[1] == 'R'))
    return {static_cast<HLetter>(tok[0]), static_cast<VLetter>(tok[1])};
  throw Error(ErrorKind::SyntaxError, "bad letter '" + std::string(tok) + "'");
}

/// word := pair (',' pair)* '@' INT ; pair := 'XY' | [UD][LR]
inline MarkedWord parse_marked_word(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "missing '@mark'");
  const std::string_view body = text.substr(0, at);
  const std::string_view mark_text = text.substr(at + 1);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    letters.push_back(parse_letter(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  int mark = 0;
  const auto [end, ec] = std::from_chars(mark_text.data(), mark_text.data() + mark_text.size(), mark);
  if (mark_text.empty() || ec != std::errc{} || end != mark_text.data() + mark_text.size())
    throw Error(ErrorKind::SyntaxError, "bad mark '" + std::string(mark_text) + "'");
  return MarkedWord(std::move(letters), mark);
}

inline std::string format(const MarkedWord& w) {
  std::string out;
  out.reserve(static_cast<std::size_t>(w.size()) * 3 + 8);
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += to_string(w[i]);
  }
  out += '@';
  out += std::to_string(w.mark());
  return out;
}

}  // namespace hvcode

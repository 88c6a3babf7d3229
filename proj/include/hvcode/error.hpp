#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hvcode {

enum class ErrorKind {
  InvalidPermutation,
  NotSquare,
  SyntaxError,
  InvalidMark,
  BadFrame,
  DomainError,
  BoundExceeded,
  InvalidPermutomino,
  NotCoIndecomposable,
  ReconstructionFailed,
  InternalContradiction,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidMark: return "InvalidMark";
    case ErrorKind::BadFrame: return "BadFrame";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidPermutomino: return "InvalidPermutomino";
    case ErrorKind::NotCoIndecomposable: return "NotCoIndecomposable";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::InternalContradiction: return "InternalContradiction";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hvcode

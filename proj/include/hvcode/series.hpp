#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hvcode/bigint.hpp"
#include "hvcode/error.hpp"

namespace hvcode {

/// Polynomial in x, y with exact integer coefficients; keys are (deg_x, deg_y).
class Polynomial {
 public:
  using Key = std::pair<int, int>;

  Polynomial() = default;
  Polynomial(BigInt c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_[{0, 0}] = std::move(c);
  }
  Polynomial(int c) : Polynomial(BigInt(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(int dx, int dy, BigInt c = 1) {
    Polynomial p;
    if (c != 0) p.terms_[{dx, dy}] = std::move(c);
    return p;
  }
  static Polynomial x() { return monomial(1, 0); }
  static Polynomial y() { return monomial(0, 1); }

  const std::map<Key, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coeff(int dx, int dy) const {
    const auto it = terms_.find({dx, dy});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(int dx, int dy, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({dx, dy}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Sum of coefficients, i.e. the value at x = y = 1.
  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  /// Monomial substitution x -> x^a y^b, y -> x^c y^d.
  Polynomial substitute(int a, int b, int c, int d) const {
    Polynomial r;
    for (const auto& [k, v] : terms_) r.add_term(a * k.first + c * k.second, b * k.first + d * k.second, v);
    return r;
  }

  /// x <-> y.
  Polynomial swapped() const { return substitute(0, 1, 1, 0); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Key, BigInt> terms_;
};

/// "2*x^3*y^3 + x^3*y^2 - y": terms by decreasing x degree, then y degree.
inline std::string format(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [dx, dy] = it->first;
    BigInt c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    auto var = [&mono](char v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e != 1) mono += '^' + std::to_string(e);
    };
    var('x', dx);
    var('y', dy);
    if (mono.empty()) out += c.str();
    else if (c == 1) out += mono;
    else out += c.str() + '*' + mono;
  }
  return out;
}

/// Power series in t truncated after t^order, with polynomial coefficients.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  /// c * t^k as a series of the given order.
  static BivariateSeries term(int order, int k, Polynomial c) {
    BivariateSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Polynomial& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

  BivariateSeries truncated(int order) const {
    BivariateSeries r(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n) r[n] = (*this)[n];
    return r;
  }

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
  }
  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
  }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order(); ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend BivariateSeries operator*(const Polynomial& c, const BivariateSeries& s) {
    BivariateSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r[n] = c * s[n];
    return r;
  }

  /// Multiplicative inverse; the constant term must be the polynomial 1.
  BivariateSeries inverse() const {
    if (coeffs_[0] != Polynomial(1)) throw Error(ErrorKind::DomainError, "series inverse needs constant term 1");
    BivariateSeries r(order());
    r[0] = Polynomial(1);
    for (int n = 1; n <= order(); ++n) {
      Polynomial acc;
      for (int k = 1; k <= n; ++k)
        if (!(*this)[k].is_zero()) acc += (*this)[k] * r[n - k];
      r[n] = -acc;
    }
    return r;
  }

  BivariateSeries substitute(int a, int b, int c, int d) const {
    BivariateSeries r(order());
    for (int n = 0; n <= order(); ++n) r[n] = (*this)[n].substitute(a, b, c, d);
    return r;
  }

  std::vector<BigInt> at_one() const {
    std::vector<BigInt> v;
    for (const auto& c : coeffs_) v.push_back(c.at_one());
    return v;
  }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// One line per non-zero t-power: "t^3: x^2 + 3*x*y + y^2".
inline std::string format(const BivariateSeries& s) {
  std::string out;
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    out += "t^" + std::to_string(n) + ": " + format(s[n]) + "\n";
  }
  return out;
}

enum class CountFamily {
  Square,
  Triangular,
  Parallel,
  FullyIndec,
  MarkedWords,
  ConvexPermutomino,
  DirectedPermutomino,
  ParallelogramPermutomino,
};

inline const char* to_string(CountFamily f) {
  switch (f) {
    case CountFamily::Square: return "square";
    case CountFamily::Triangular: return "triangular";
    case CountFamily::Parallel: return "parallel";
    case CountFamily::FullyIndec: return "fully-indec";
    case CountFamily::MarkedWords: return "marked-words";
    case CountFamily::ConvexPermutomino: return "convex-permutomino";
    case CountFamily::DirectedPermutomino: return "directed-permutomino";
    case CountFamily::ParallelogramPermutomino: return "parallelogram-permutomino";
  }
  return "?";
}

inline constexpr CountFamily kAllFamilies[] = {
    CountFamily::Square,      CountFamily::Triangular,        CountFamily::Parallel,
    CountFamily::FullyIndec,  CountFamily::MarkedWords,       CountFamily::ConvexPermutomino,
    CountFamily::DirectedPermutomino, CountFamily::ParallelogramPermutomino,
};

inline int min_size(CountFamily f) {
  switch (f) {
    case CountFamily::MarkedWords:
    case CountFamily::ConvexPermutomino:
    case CountFamily::DirectedPermutomino:
    case CountFamily::ParallelogramPermutomino:
      return 2;
    default:
      return 1;
  }
}

namespace detail {

/// c * 2^(2n-5), exact for n >= 2 whenever the result is an integer.
inline BigInt times_pow2_2n_minus_5(const BigInt& c, int n) {
  const BigInt num = c << (2 * n);
  if (num % 32 != 0) throw Error(ErrorKind::DomainError, "non-integral 2^(2n-5) term");
  return num / 32;
}

}  // namespace detail

/// Closed-form counts.
inline BigInt count(CountFamily f, int n) {
  if (n < min_size(f))
    throw Error(ErrorKind::DomainError, std::string(to_string(f)) + " needs n >= " + std::to_string(min_size(f)));
  using detail::times_pow2_2n_minus_5;
  switch (f) {
    case CountFamily::Square:
      if (n <= 2) return n;
      return times_pow2_2n_minus_5(n + 2, n) - BigInt(4 * (2 * n - 5)) * binomial(2 * n - 6, n - 3);
    case CountFamily::Triangular:
      return binomial(2 * n - 2, n - 1);
    case CountFamily::Parallel:
      return catalan(n);
    case CountFamily::FullyIndec:
      if (n == 1) return 1;
      return times_pow2_2n_minus_5(n, n) - BigInt(2 * n - 3) * binomial(2 * n - 4, n - 2);
    case CountFamily::MarkedWords:
      return times_pow2_2n_minus_5(n + 2, n);
    case CountFamily::ConvexPermutomino:
      return times_pow2_2n_minus_5(n + 2, n) - BigInt(2 * n - 3) * binomial(2 * n - 4, n - 2);
    case CountFamily::DirectedPermutomino:
      return binomial(2 * n - 2, n - 1) / 2;
    case CountFamily::ParallelogramPermutomino:
      return catalan(n - 1);
  }
  return 0;
}

/// Narayana series: the solution of N = t(1 + xN)(1 + yN), by fixed-point
/// iteration (each pass fixes one more power of t).
inline BivariateSeries narayana_series(int order) {
  if (order < 1) throw Error(ErrorKind::DomainError, "narayana_series needs order >= 1");
  const auto t = BivariateSeries::term(order, 1, 1);
  const auto one = BivariateSeries::term(order, 0, 1);
  BivariateSeries n(order);
  for (int it = 0; it < order; ++it)
    n = t * (one + Polynomial::x() * n) * (one + Polynomial::y() * n);
  return n;
}

/// W = 1 / (1 - (1+x)(1+y) t).
inline BivariateSeries w_series(int order) {
  BivariateSeries w(order);
  const Polynomial step = (Polynomial(1) + Polynomial::x()) * (Polynomial(1) + Polynomial::y());
  w[0] = 1;
  for (int n = 1; n <= order; ++n) w[n] = w[n - 1] * step;
  return w;
}

/// M = 2 (txy) W (txy) + (txy) W (t(1+x)y) W (txy): marked words by length,
/// number of U and X (x), number of L and Y (y).
inline BivariateSeries m_series(int order) {
  const auto w = w_series(order);
  const Polynomial xy = Polynomial::monomial(1, 1);
  const auto txy = BivariateSeries::term(order, 1, xy);
  const auto mid = BivariateSeries::term(order, 1, (Polynomial(1) + Polynomial::x()) * Polynomial::y());
  return Polynomial(2) * (txy * w * txy) + txy * w * mid * w * txy;
}

enum class BaseSeries { W, M };

inline BivariateSeries base_series(BaseSeries which, int order) {
  if (order < 2) throw Error(ErrorKind::DomainError, "base_series needs order >= 2");
  return which == BaseSeries::W ? w_series(order) : m_series(order);
}

enum class AuxSeries { TNorthWest, TSouthWestTilde };

/// Sign of the xy term in the T_NW denominator factor (1 + (x + y -/+ xy) N).
/// Minus is the correct one; Plus exists only as a negative control.
enum class NwDenominator { Minus, Plus };

/// T_NW = xyN / ((1 - xyN)(1 + (x+y-xy)N)) with N = N(t;x,y);
/// T~_SW = xyN' / ((1 - yN')(1 + N')) with N' = N(t;xy,1).
inline BivariateSeries aux_series(AuxSeries which, int order, NwDenominator sign = NwDenominator::Minus) {
  if (order < 1) throw Error(ErrorKind::DomainError, "aux_series needs order >= 1");
  const Polynomial x = Polynomial::x(), y = Polynomial::y(), xy = Polynomial::monomial(1, 1);
  const auto one = BivariateSeries::term(order, 0, 1);
  const auto n = narayana_series(order);
  if (which == AuxSeries::TNorthWest) {
    const Polynomial lin = sign == NwDenominator::Minus ? x + y - xy : x + y + xy;
    const auto den = (one - xy * n) * (one + lin * n);
    return (xy * n) * den.inverse();
  }
  const auto n1 = n.substitute(1, 1, 0, 0);  // x -> xy, y -> 1
  const auto den = (one - y * n1) * (one + n1);
  return (xy * n1) * den.inverse();
}

/// Sq(t;x,y) = M - T~_SW t(1+y) W txy - T_NW t(x+y) W txy: square
/// permutations by size, upper points (x) and left points (y).
inline BivariateSeries sq_refined_series(int order, NwDenominator sign = NwDenominator::Minus) {
  if (order < 2) throw Error(ErrorKind::DomainError, "sq_refined_series needs order >= 2");
  const Polynomial x = Polynomial::x(), y = Polynomial::y(), xy = Polynomial::monomial(1, 1);
  const auto w = w_series(order);
  const auto tail = w * BivariateSeries::term(order, 1, xy);
  const auto sw = aux_series(AuxSeries::TSouthWestTilde, order);
  const auto nw = aux_series(AuxSeries::TNorthWest, order, sign);
  // M starts at t^2; the single permutation of size 1 is added by hand.
  return BivariateSeries::term(order, 1, xy) + m_series(order) -
         sw * BivariateSeries::term(order, 1, Polynomial(1) + y) * tail - nw * BivariateSeries::term(order, 1, x + y) * tail;
}

/// Checks s(t x y; 1/y, 1/x) == x y s(t; x, y) coefficientwise, the
/// reciprocity satisfied by the Narayana series.
inline bool reciprocity_holds(const BivariateSeries& s) {
  for (int n = 0; n <= s.order(); ++n) {
    Polynomial lhs;
    for (const auto& [k, c] : s[n].terms()) {
      const int dx = n - k.second, dy = n - k.first;
      if (dx < 0 || dy < 0) return false;
      lhs.add_term(dx, dy, c);
    }
    if (lhs != Polynomial::monomial(1, 1) * s[n]) return false;
  }
  return true;
}

inline bool narayana_reciprocity_check(int order) { return reciprocity_holds(narayana_series(order)); }

}  // namespace hvcode

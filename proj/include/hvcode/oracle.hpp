#pragma once

// Brute-force ground truth. Nothing here calls the record sweep, the closed
// forms, or the series code: predicates are restated naively so that the
// tests comparing against them are meaningful.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "hvcode/bigint.hpp"
#include "hvcode/codec.hpp"
#include "hvcode/error.hpp"
#include "hvcode/geometry.hpp"
#include "hvcode/marked_word.hpp"
#include "hvcode/permutation.hpp"
#include "hvcode/permutomino.hpp"
#include "hvcode/series.hpp"

namespace hvcode::oracle {

inline constexpr int kMaxPermutationN = 9;
inline constexpr int kMaxCellN = 5;

struct NaiveRecord {
  bool ul = false, ur = false, bl = false, br = false;
  bool exterior() const { return ul || ur || bl || br; }
};

/// O(k^2) records of a point set, strict comparisons.
inline std::vector<NaiveRecord> naive_records(const std::vector<Point>& pts) {
  std::vector<NaiveRecord> out(pts.size(), {true, true, true, true});
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = 0; b < pts.size(); ++b) {
      const Point p = pts[a], q = pts[b];
      if (q.x < p.x && q.y > p.y) out[a].ul = false;
      if (q.x > p.x && q.y > p.y) out[a].ur = false;
      if (q.x < p.x && q.y < p.y) out[a].bl = false;
      if (q.x > p.x && q.y < p.y) out[a].br = false;
    }
  return out;
}

inline std::vector<NaiveRecord> naive_records(const std::vector<int>& sigma) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < sigma.size(); ++i) pts.push_back({static_cast<int>(i) + 1, sigma[i]});
  return naive_records(pts);
}

inline bool naive_square(const std::vector<int>& s) {
  const auto r = naive_records(s);
  return std::all_of(r.begin(), r.end(), [](const NaiveRecord& m) { return m.exterior(); });
}

/// Some proper prefix occupies the lowest values.
inline bool naive_decomposable(const std::vector<int>& s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::vector<int> pre(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(pre.begin(), pre.end());
    if (pre.back() == static_cast<int>(k)) return true;
  }
  return false;
}

/// Some proper prefix occupies the highest values.
inline bool naive_co_decomposable(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  for (int k = 1; k < n; ++k) {
    std::vector<int> pre(s.begin(), s.begin() + k);
    std::sort(pre.begin(), pre.end());
    if (pre.front() == n - k + 1) return true;
  }
  return false;
}

/// Triangular classes by right-angle corner; index order NE, SE, SW, NW.
inline bool naive_triangular(const std::vector<int>& s, int corner) {
  const auto r = naive_records(s);
  return std::all_of(r.begin(), r.end(), [corner](const NaiveRecord& m) {
    switch (corner) {
      case 0: return m.ul || m.ur || m.br;
      case 1: return m.ur || m.br || m.bl;
      case 2: return m.ul || m.bl || m.br;
      default: return m.ul || m.ur || m.bl;
    }
  });
}

inline std::vector<int> naive_free_fixed_points(const std::vector<int>& s) {
  const auto r = naive_records(s);
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == static_cast<int>(i) + 1 && !r[i].bl && !r[i].ur) out.push_back(static_cast<int>(i) + 1);
  return out;
}

/// All colorings of every square co-indecomposable permutation of size n.
inline std::vector<ColoredPermutation> colored_co_indecomposable(int n) {
  if (n < 2 || n > kMaxPermutationN) throw Error(ErrorKind::BoundExceeded, "colored route needs 2 <= n <= 9");
  std::vector<ColoredPermutation> out;
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    if (!naive_square(s) || naive_co_decomposable(s)) continue;
    const auto free = naive_free_fixed_points(s);
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
      std::vector<int> colored;
      for (std::size_t b = 0; b < free.size(); ++b)
        if (mask >> b & 1u) colored.push_back(free[b]);
      out.emplace_back(Permutation(s), std::move(colored));
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// A cell subset of the (n-1)x(n-1) box whose boundary is a convex
/// permutomino, traced clockwise from the top of its left edge.
struct CellPolygon {
  std::vector<Point> turnpoints;
  bool directed = false;
  bool parallelogram = false;
};

namespace detail {

inline std::optional<CellPolygon> trace_cells(const std::vector<std::vector<bool>>& in, int side) {
  auto has = [&](int x, int y) { return x >= 0 && y >= 0 && x < side && y < side && in[x][y]; };
  for (int x = 0; x < side; ++x) {
    int lo = side, hi = -1, cnt = 0;
    for (int y = 0; y < side; ++y)
      if (has(x, y)) lo = std::min(lo, y), hi = std::max(hi, y), ++cnt;
    if (cnt == 0 || hi - lo + 1 != cnt) return std::nullopt;
  }
  for (int y = 0; y < side; ++y) {
    int lo = side, hi = -1, cnt = 0;
    for (int x = 0; x < side; ++x)
      if (has(x, y)) lo = std::min(lo, x), hi = std::max(hi, x), ++cnt;
    if (cnt == 0 || hi - lo + 1 != cnt) return std::nullopt;
  }

  // Unit boundary edges with the cell on their right, i.e. clockwise.
  std::map<Point, std::vector<Point>> next;
  std::size_t edges = 0;
  auto add = [&](Point a, Point b) {
    next[a].push_back(b);
    ++edges;
  };
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) {
      if (!has(x, y)) continue;
      if (!has(x - 1, y)) add({x, y}, {x, y + 1});
      if (!has(x, y + 1)) add({x, y + 1}, {x + 1, y + 1});
      if (!has(x + 1, y)) add({x + 1, y + 1}, {x + 1, y});
      if (!has(x, y - 1)) add({x + 1, y}, {x, y});
    }
  for (const auto& [p, outs] : next)
    if (outs.size() != 1) return std::nullopt;  // pinch point

  int top = -1;
  for (int y = 0; y <= side; ++y)
    if (next.count({0, y}) && next.at({0, y})[0].x == 1) top = y;
  const Point start{0, top};
  std::vector<Point> walk{start};
  for (Point p = next.at(start)[0]; p != start; p = next.at(p)[0]) {
    walk.push_back(p);
    if (walk.size() > edges) return std::nullopt;
  }
  if (walk.size() != edges) return std::nullopt;  // hole or second component

  CellPolygon poly;
  const std::size_t k = walk.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = walk[(i + k - 1) % k], b = walk[i], c = walk[(i + 1) % k];
    if ((a.x == b.x) != (b.x == c.x)) poly.turnpoints.push_back(b);
  }
  std::map<int, int> on_x, on_y;
  for (const Point p : poly.turnpoints) ++on_x[p.x], ++on_y[p.y];
  if (static_cast<int>(on_x.size()) != side + 1 || static_cast<int>(on_y.size()) != side + 1) return std::nullopt;
  for (const auto& [line, c] : on_x)
    if (c != 2) return std::nullopt;
  for (const auto& [line, c] : on_y)
    if (c != 2) return std::nullopt;
  poly.directed = has(0, 0);
  poly.parallelogram = has(0, 0) && has(side - 1, side - 1);
  return poly;
}

}  // namespace detail

/// Convex permutominoes of size n by scanning every cell subset of the
/// (n-1)x(n-1) box; at most 2^16 subsets.
inline std::vector<CellPolygon> cell_permutominoes(int n) {
  if (n < 2 || n > kMaxCellN) throw Error(ErrorKind::BoundExceeded, "cell route needs 2 <= n <= 5");
  const int side = n - 1;
  const int cells = side * side;
  std::vector<CellPolygon> out;
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    std::vector<std::vector<bool>> in(static_cast<std::size_t>(side), std::vector<bool>(static_cast<std::size_t>(side)));
    for (int c = 0; c < cells; ++c) in[c / side][c % side] = (mask >> c & 1u) != 0;
    if (auto poly = detail::trace_cells(in, side)) out.push_back(std::move(*poly));
  }
  std::sort(out.begin(), out.end(),
            [](const CellPolygon& a, const CellPolygon& b) { return a.turnpoints < b.turnpoints; });
  return out;
}

struct Enumeration {
  BigInt count = 0;
  std::vector<ColoredPermutation> permutations;
  std::vector<CellPolygon> polygons;
  std::vector<MarkedWord> words;
};

inline std::vector<MarkedWord> all_marked_words(int n) {
  if (n < 2 || n > kMaxPermutationN) throw Error(ErrorKind::BoundExceeded, "marked words need 2 <= n <= 9");
  std::vector<MarkedWord> out;
  const int inner = n - 2;
  for (std::uint32_t code = 0; code < (1u << (2 * inner)); ++code) {
    std::vector<Letter> letters(static_cast<std::size_t>(n), kFrame);
    for (int i = 0; i < inner; ++i) {
      const unsigned d = code >> (2 * i) & 3u;
      letters[static_cast<std::size_t>(i + 1)] = {d & 1u ? HLetter::D : HLetter::U, d & 2u ? VLetter::R : VLetter::L};
    }
    for (int m = 1; m <= n; ++m)
      if (letters[static_cast<std::size_t>(m - 1)].v != VLetter::R) out.emplace_back(letters, m);
  }
  return out;
}

/// Ground-truth enumeration by definition chasing.
inline Enumeration brute_enumerate(CountFamily f, int n) {
  Enumeration e;
  if (n < 1) throw Error(ErrorKind::DomainError, "n must be positive");
  switch (f) {
    case CountFamily::ConvexPermutomino:
    case CountFamily::DirectedPermutomino:
    case CountFamily::ParallelogramPermutomino:
      for (auto& p : cell_permutominoes(n)) {
        if (f == CountFamily::DirectedPermutomino && !p.directed) continue;
        if (f == CountFamily::ParallelogramPermutomino && !p.parallelogram) continue;
        e.polygons.push_back(std::move(p));
      }
      e.count = e.polygons.size();
      return e;
    case CountFamily::MarkedWords:
      e.words = all_marked_words(n);
      e.count = e.words.size();
      return e;
    default:
      break;
  }
  if (n > kMaxPermutationN) throw Error(ErrorKind::BoundExceeded, "permutation scans stop at n = 9");
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    bool keep = naive_square(s);
    if (f == CountFamily::Triangular) keep = keep && naive_triangular(s, 0);
    if (f == CountFamily::Parallel) {
      const auto r = naive_records(s);
      keep = std::all_of(r.begin(), r.end(), [](const NaiveRecord& m) { return m.ul || m.br; });
    }
    if (f == CountFamily::FullyIndec) keep = keep && !naive_decomposable(s) && !naive_co_decomposable(s);
    if (keep) e.permutations.emplace_back(Permutation(s));
  } while (std::next_permutation(s.begin(), s.end()));
  e.count = e.permutations.size();
  return e;
}

/// x^upper * y^left of a colored permutation, colored points left out.
inline Polynomial naive_weight(const ColoredPermutation& cp) {
  std::vector<int> s(cp.perm().values().begin(), cp.perm().values().end());
  const auto r = naive_records(s);
  int up = 0, left = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (cp.is_colored(static_cast<int>(i) + 1)) continue;
    up += r[i].ul || r[i].ur;
    left += r[i].ul || r[i].bl;
  }
  return Polynomial::monomial(up, left);
}

/// Sum of x^upper * y^left over the family. Permutomino families use
/// side_profile on the cell enumeration; marked words weigh U and X by x,
/// L and Y by y.
inline Polynomial brute_refined_histogram(CountFamily f, int n) {
  const Enumeration e = brute_enumerate(f, n);
  Polynomial h;
  for (const auto& cp : e.permutations) h += naive_weight(cp);
  for (const auto& poly : e.polygons) {
    const SideProfile sp = side_profile(Permutomino(poly.turnpoints));
    h.add_term(sp.upper_sides, sp.left_sides, 1);
  }
  for (const auto& w : e.words) {
    int up = 0, left = 0;
    for (int i = 1; i <= n; ++i) {
      up += w.u(i) != HLetter::D;
      left += w.v(i) != VLetter::R;
    }
    h.add_term(up, left, 1);
  }
  return h;
}

/// Enumeration-backed refined series for families without a closed refined
/// form: fully indecomposable permutations by records, convex permutominoes
/// by phi_inverse and side_profile over colored permutations.
inline BivariateSeries refined_series_oracle(CountFamily f, int order) {
  if (f != CountFamily::FullyIndec && f != CountFamily::ConvexPermutomino)
    throw Error(ErrorKind::DomainError, "refined oracle covers fully-indec and convex-permutomino");
  if (order > kMaxPermutationN) throw Error(ErrorKind::BoundExceeded, "refined oracle stops at order 9");
  BivariateSeries s(order);
  for (int n = 1; n <= order; ++n) {
    if (f == CountFamily::FullyIndec) {
      s[n] = brute_refined_histogram(f, n);
      continue;
    }
    if (n < 2) continue;
    for (const auto& cp : colored_co_indecomposable(n)) {
      const SideProfile sp = side_profile(phi_inverse(cp));
      s[n].add_term(sp.upper_sides, sp.left_sides, 1);
    }
  }
  return s;
}

/// Full partition audit of the marked words of length n under one decoder mode.
struct AuditReport {
  using FailureKey = std::tuple<std::string, int, std::string>;  // kind, stop index, pair

  int n = 0;
  DecodeMode mode = DecodeMode::Square;
  std::uint64_t words = 0;
  std::uint64_t success_count = 0;
  std::uint64_t expected_success = 0;
  std::map<FailureKey, std::uint64_t> failures;
  std::map<std::pair<std::string, int>, std::uint64_t> census;  // kind, prefix length
  std::uint64_t internal_contradictions = 0;
  std::uint64_t roundtrip_failures = 0;
  std::uint64_t class_violations = 0;
  std::vector<std::string> violations;

  std::uint64_t failure_count(const std::string& kind) const {
    std::uint64_t t = 0;
    for (const auto& [key, c] : failures)
      if (std::get<0>(key) == kind) t += c;
    return t;
  }
  bool ok() const { return violations.empty(); }
};

inline std::uint64_t expected_census(int n, int k) {
  // 2 * C(2k-2, k-1) * 4^(n-k-2)
  std::uint64_t t = 1;
  for (int i = 1; i <= k - 1; ++i) t = t * static_cast<std::uint64_t>(k - 1 + i) / static_cast<std::uint64_t>(i);
  return 2 * t * (std::uint64_t{1} << (2 * (n - k - 2)));
}

inline AuditReport bijection_audit(DecodeMode mode, int n) {
  if (n < 2 || n > 8) throw Error(ErrorKind::BoundExceeded, "audits cover 2 <= n <= 8");
  AuditReport rep;
  rep.n = n;
  rep.mode = mode;
  const CountFamily fam = mode == DecodeMode::Square       ? CountFamily::Square
                          : mode == DecodeMode::FullyIndec ? CountFamily::FullyIndec
                                                           : CountFamily::ConvexPermutomino;
  if (mode == DecodeMode::Permutomino)
    rep.expected_success = colored_co_indecomposable(n).size();
  else
    rep.expected_success = static_cast<std::uint64_t>(brute_enumerate(fam, n).count);

  std::set<std::vector<int>> seen;
  for (const MarkedWord& w : all_marked_words(n)) {
    ++rep.words;
    const DecodeOutcome out = decode(w, mode);
    if (const auto* ic = std::get_if<InternalContradiction>(&out)) {
      ++rep.internal_contradictions;
      rep.violations.push_back("contradiction: " + ic->diagnostic);
      continue;
    }
    if (const auto* cp = std::get_if<ColoredPermutation>(&out)) {
      ++rep.success_count;
      std::vector<int> s(cp->perm().values().begin(), cp->perm().values().end());
      bool in_family = naive_square(s);
      if (mode == DecodeMode::FullyIndec) in_family = in_family && !naive_decomposable(s) && !naive_co_decomposable(s);
      if (mode == DecodeMode::Permutomino) in_family = in_family && !naive_co_decomposable(s);
      if (mode != DecodeMode::Permutomino && !cp->colored().empty()) in_family = false;
      if (!in_family) {
        ++rep.class_violations;
        rep.violations.push_back(format(w) + " decodes outside the family: " + format(*cp));
      }
      bool round = false;
      try {
        round = encode(*cp) == w;
      } catch (const Error&) {
      }
      if (!round) {
        ++rep.roundtrip_failures;
        rep.violations.push_back(format(w) + " does not round-trip through " + format(*cp));
      }
      std::vector<int> key = s;
      for (int c : cp->colored()) key.push_back(-c);
      if (!seen.insert(key).second) rep.violations.push_back(format(*cp) + " decoded twice");
      continue;
    }
    const auto& f = std::get<DecodeFailure>(out);
    const std::string kind = to_string(f.kind);
    ++rep.failures[{kind, f.stop_index, to_string(f.pair)}];
    ++rep.census[{kind, f.stop_index - 1}];
    if (mode == DecodeMode::Square) {
      std::vector<int> pre(f.prefix.values().begin(), f.prefix.values().end());
      const bool ok = f.kind == FailureKind::SW ? naive_triangular(pre, 2) : naive_triangular(pre, 3);
      if (!ok) {
        ++rep.class_violations;
        rep.violations.push_back(format(w) + ": " + kind + " prefix " + format(f.prefix) + " outside its class");
      }
    }
  }

  if (rep.success_count != rep.expected_success)
    rep.violations.push_back("success count " + std::to_string(rep.success_count) + " != " +
                             std::to_string(rep.expected_success));
  if (mode == DecodeMode::Square)
    for (const char* kind : {"SW", "NW"})
      for (int k = 1; k <= n - 2; ++k) {
        const auto it = rep.census.find({kind, k});
        const std::uint64_t got = it == rep.census.end() ? 0 : it->second;
        if (got != expected_census(n, k))
          rep.violations.push_back(std::string(kind) + " census at prefix length " + std::to_string(k) + ": " +
                                   std::to_string(got) + " != " + std::to_string(expected_census(n, k)));
      }
  return rep;
}

namespace detail {

struct Segment {
  Point a, b;
};

inline bool segments_touch(const Segment& s, const Segment& t) {
  const bool sh = s.a.y == s.b.y, th = t.a.y == t.b.y;
  auto lo = [](int u, int v) { return std::min(u, v); };
  auto hi = [](int u, int v) { return std::max(u, v); };
  if (sh == th) {
    if (sh ? s.a.y != t.a.y : s.a.x != t.a.x) return false;
    return sh ? hi(s.a.x, s.b.x) >= lo(t.a.x, t.b.x) && hi(t.a.x, t.b.x) >= lo(s.a.x, s.b.x)
              : hi(s.a.y, s.b.y) >= lo(t.a.y, t.b.y) && hi(t.a.y, t.b.y) >= lo(s.a.y, s.b.y);
  }
  const Segment& h = sh ? s : t;
  const Segment& v = sh ? t : s;
  return v.a.x >= lo(h.a.x, h.b.x) && v.a.x <= hi(h.a.x, h.b.x) && h.a.y >= lo(v.a.y, v.b.y) &&
         h.a.y <= hi(v.a.y, v.b.y);
}

/// Turnpoint set -> closed rectilinear polygon, if the row/column pairing
/// closes into one simple cycle that every axis-parallel line crosses at
/// most twice.
inline bool is_generic_convex_polygon(const std::vector<Point>& pts) {
  std::map<int, std::vector<std::size_t>> rows, cols;
  for (std::size_t i = 0; i < pts.size(); ++i) rows[pts[i].y].push_back(i), cols[pts[i].x].push_back(i);
  for (const auto& [y, v] : rows)
    if (v.size() != 2) return false;
  for (const auto& [x, v] : cols)
    if (v.size() != 2) return false;
  auto partner = [&](std::map<int, std::vector<std::size_t>>& m, int key, std::size_t i) {
    const auto& v = m.at(key);
    return v[0] == i ? v[1] : v[0];
  };
  std::vector<Segment> segs;
  std::size_t cur = 0, steps = 0;
  bool horizontal = true;
  do {
    const std::size_t nxt = horizontal ? partner(rows, pts[cur].y, cur) : partner(cols, pts[cur].x, cur);
    segs.push_back({pts[cur], pts[nxt]});
    cur = nxt;
    horizontal = !horizontal;
    ++steps;
  } while (cur != 0 || !horizontal);
  if (steps != pts.size()) return false;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 2; j < segs.size(); ++j) {
      if (i == 0 && j == segs.size() - 1) continue;
      if (segments_touch(segs[i], segs[j])) return false;
    }
  // Convexity: every horizontal and vertical line through the interior meets
  // the boundary exactly twice.
  const auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x; });
  const auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(), [](Point a, Point b) { return a.y < b.y; });
  for (int twice = 2 * ymin->y + 1; twice < 2 * ymax->y; twice += 2) {
    int hits = 0;
    for (const auto& s : segs)
      if (s.a.x == s.b.x && 2 * std::min(s.a.y, s.b.y) < twice && twice < 2 * std::max(s.a.y, s.b.y)) ++hits;
    if (hits != 2) return false;
  }
  for (int twice = 2 * xmin->x + 1; twice < 2 * xmax->x; twice += 2) {
    int hits = 0;
    for (const auto& s : segs)
      if (s.a.y == s.b.y && 2 * std::min(s.a.x, s.b.x) < twice && twice < 2 * std::max(s.a.x, s.b.x)) ++hits;
    if (hits != 2) return false;
  }
  return true;
}

}  // namespace detail

/// Direct census of generic exterior configurations (or generic convex
/// polygons with 2n turnpoints) on a cols x rows lattice.
inline BigInt brute_generic_grid_count(int cols, int rows, int n, bool polygon) {
  if (cols < 1 || rows < 1 || n < 1) throw Error(ErrorKind::DomainError, "bad grid");
  const int cells = cols * rows;
  const int k = polygon ? 2 * n : n;
  if (k > cells) return 0;
  if (binomial(cells, k) > 20'000'000) throw Error(ErrorKind::BoundExceeded, "grid census too large");
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  BigInt total = 0;
  std::vector<Point> pts(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) pts[static_cast<std::size_t>(i)] = {idx[i] % cols, idx[i] / cols};
    if (polygon) {
      if (detail::is_generic_convex_polygon(pts)) ++total;
    } else {
      std::set<int> xs, ys;
      for (const Point p : pts) xs.insert(p.x), ys.insert(p.y);
      if (static_cast<int>(xs.size()) == k && static_cast<int>(ys.size()) == k) {
        const auto r = naive_records(pts);
        if (std::all_of(r.begin(), r.end(), [](const NaiveRecord& m) { return m.exterior(); })) ++total;
      }
    }
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == cells - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return total;
}

}  // namespace hvcode::oracle

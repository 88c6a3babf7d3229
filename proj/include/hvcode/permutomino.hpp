#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hvcode/error.hpp"
#include "hvcode/geometry.hpp"
#include "hvcode/permutation.hpp"

namespace hvcode {

enum class IssueKind {
  NotClosed,
  NotAlternating,
  SelfIntersecting,
  DuplicateSideOnLine,
  MissingSideOnLine,
  NotConvex,
};

inline const char* to_string(IssueKind k) {
  switch (k) {
    case IssueKind::NotClosed: return "NotClosed";
    case IssueKind::NotAlternating: return "NotAlternating";
    case IssueKind::SelfIntersecting: return "SelfIntersecting";
    case IssueKind::DuplicateSideOnLine: return "DuplicateSideOnLine";
    case IssueKind::MissingSideOnLine: return "MissingSideOnLine";
    case IssueKind::NotConvex: return "NotConvex";
  }
  return "?";
}

struct Issue {
  IssueKind kind;
  char axis = 0;  // 'x' for vertical lines, 'y' for horizontal lines
  int line = 0;
  Point at{};

  std::string describe() const {
    std::string s = to_string(kind);
    if (kind == IssueKind::DuplicateSideOnLine || kind == IssueKind::MissingSideOnLine)
      s += "(" + std::string(1, axis) + "=" + std::to_string(line) + ")";
    else if (kind == IssueKind::NotConvex || kind == IssueKind::SelfIntersecting)
      s += "(" + std::to_string(at.x) + "," + std::to_string(at.y) + ")";
    return s;
  }

  friend bool operator==(const Issue&, const Issue&) = default;
};

struct PolygonCheck {
  std::vector<Point> canonical;  // clockwise, from the highest point of the leftmost line
  std::vector<Issue> issues;
  bool directed = false;
  bool parallelogram = false;

  bool ok() const { return issues.empty(); }
  int size() const { return static_cast<int>(canonical.size() / 2); }
};

namespace detail {

inline bool is_horizontal(Point a, Point b) { return a.y == b.y; }

/// Rotate/reverse a closed rectilinear cycle into clockwise order starting
/// at the highest point of the leftmost line.
inline std::vector<Point> canonical_cycle(std::vector<Point> pts) {
  std::int64_t twice_area = 0;
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = pts[i], b = pts[(i + 1) % k];
    twice_area += static_cast<std::int64_t>(a.x) * b.y - static_cast<std::int64_t>(b.x) * a.y;
  }
  if (twice_area > 0) std::reverse(pts.begin(), pts.end());
  const auto start = std::min_element(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x != b.x ? a.x < b.x : a.y > b.y;
  });
  std::rotate(pts.begin(), start, pts.end());
  return pts;
}

/// Any crossing or touching between a vertical and a horizontal side other
/// than the shared corner of consecutive sides. Plane sweep over x.
inline std::optional<Point> find_crossing(const std::vector<Point>& pts) {
  const std::size_t k = pts.size();
  struct Event {
    int x;
    int order;  // 0 insert horizontal, 1 query vertical, 2 erase horizontal
    std::size_t seg;
  };
  std::vector<Event> events;
  events.reserve(2 * k);
  for (std::size_t s = 0; s < k; ++s) {
    const Point a = pts[s], b = pts[(s + 1) % k];
    if (is_horizontal(a, b)) {
      events.push_back({std::min(a.x, b.x), 0, s});
      events.push_back({std::max(a.x, b.x), 2, s});
    } else {
      events.push_back({a.x, 1, s});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) {
    return l.x != r.x ? l.x < r.x : l.order < r.order;
  });
  std::set<std::pair<int, std::size_t>> active;
  for (const Event& e : events) {
    const Point a = pts[e.seg], b = pts[(e.seg + 1) % k];
    if (e.order == 0) {
      active.insert({a.y, e.seg});
    } else if (e.order == 2) {
      active.erase({a.y, e.seg});
    } else {
      const int y1 = std::min(a.y, b.y), y2 = std::max(a.y, b.y);
      const std::size_t prev = (e.seg + k - 1) % k, next = (e.seg + 1) % k;
      for (auto it = active.lower_bound({y1, 0}); it != active.end() && it->first <= y2; ++it) {
        if (it->second == prev || it->second == next) continue;
        return Point{e.x, it->first};
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks shared by permutominoes and generic grid polygons: closed,
/// alternating, self-avoiding, at most one side per line, convex. With
/// `require_every_line`, every line of the bounding box must carry a side.
inline PolygonCheck check_polygon(const std::vector<Point>& input, bool require_every_line) {
  PolygonCheck out;
  const std::size_t k = input.size();
  if (k < 4) {
    out.issues.push_back({IssueKind::NotClosed});
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = input[i], b = input[(i + 1) % k];
    const bool h = a.y == b.y, v = a.x == b.x;
    if (!h && !v) {
      out.issues.push_back({i + 1 == k ? IssueKind::NotClosed : IssueKind::NotAlternating, 0, 0, b});
      return out;
    }
    const Point c = input[(i + 2) % k];
    if (h == v || (h ? c.y == b.y : c.x == b.x)) {
      out.issues.push_back({IssueKind::NotAlternating, 0, 0, b});
      return out;
    }
  }
  if (k % 2 != 0) {
    out.issues.push_back({IssueKind::NotAlternating});
    return out;
  }

  out.canonical = detail::canonical_cycle(input);
  const auto& pts = out.canonical;

  std::map<int, int> vertical, horizontal;
  int minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = pts[i], b = pts[(i + 1) % k];
    if (a.x == b.x) ++vertical[a.x];
    else ++horizontal[a.y];
    minx = std::min(minx, a.x);
    maxx = std::max(maxx, a.x);
    miny = std::min(miny, a.y);
    maxy = std::max(maxy, a.y);
  }
  for (const auto& [line, c] : vertical)
    if (c > 1) out.issues.push_back({IssueKind::DuplicateSideOnLine, 'x', line});
  for (const auto& [line, c] : horizontal)
    if (c > 1) out.issues.push_back({IssueKind::DuplicateSideOnLine, 'y', line});
  if (require_every_line) {
    for (int x = minx; x <= maxx; ++x)
      if (!vertical.count(x)) out.issues.push_back({IssueKind::MissingSideOnLine, 'x', x});
    for (int y = miny; y <= maxy; ++y)
      if (!horizontal.count(y)) out.issues.push_back({IssueKind::MissingSideOnLine, 'y', y});
  }
  if (auto hit = detail::find_crossing(pts)) out.issues.push_back({IssueKind::SelfIntersecting, 0, 0, *hit});

  const auto masks = point_records(pts);
  bool directed = true, parallelogram = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!masks[i].exterior()) out.issues.push_back({IssueKind::NotConvex, 0, 0, pts[i]});
    directed = directed && (masks[i].ul || masks[i].ur || masks[i].br);
    parallelogram = parallelogram && (masks[i].ul || masks[i].br);
  }
  out.directed = directed && out.issues.empty();
  out.parallelogram = parallelogram && out.issues.empty();
  return out;
}

inline PolygonCheck validate_permutomino(const std::vector<Point>& turnpoints) {
  return check_polygon(turnpoints, true);
}

/// A convex permutomino, stored as its canonical clockwise turnpoint cycle
/// starting at the highest point of the leftmost line. Size is the number of
/// vertical lines met, i.e. half the number of turnpoints, so the unit square
/// has size 2.
class Permutomino {
 public:
  explicit Permutomino(const std::vector<Point>& turnpoints) {
    auto check = validate_permutomino(turnpoints);
    if (!check.ok()) {
      std::string msg;
      for (const auto& i : check.issues) msg += (msg.empty() ? "" : ", ") + i.describe();
      throw Error(ErrorKind::InvalidPermutomino, msg);
    }
    points_ = std::move(check.canonical);
    directed_ = check.directed;
    parallelogram_ = check.parallelogram;
  }

  int size() const noexcept { return static_cast<int>(points_.size() / 2); }
  const std::vector<Point>& turnpoints() const noexcept { return points_; }
  bool directed() const noexcept { return directed_; }
  bool parallelogram() const noexcept { return parallelogram_; }

  /// Index of the highest point of the rightmost line, where the upper walk ends.
  std::size_t upper_walk_end() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < points_.size(); ++i) {
      const Point p = points_[i], b = points_[best];
      if (p.x > b.x || (p.x == b.x && p.y > b.y)) best = i;
    }
    return best;
  }

  friend bool operator==(const Permutomino& a, const Permutomino& b) { return a.points_ == b.points_; }
  friend bool operator<(const Permutomino& a, const Permutomino& b) { return a.points_ < b.points_; }

 private:
  std::vector<Point> points_;
  bool directed_ = false;
  bool parallelogram_ = false;
};

/// Colored co-indecomposable square permutation of a convex permutomino.
///
/// Turnpoints are colored alternately clockwise starting with the bottom
/// turnpoint of the leftmost edge in black; the black points form the
/// permutation, and black free fixed points lying on the upper walk are the
/// colored ones.
inline ColoredPermutation phi(const Permutomino& pm) {
  const auto& pts = pm.turnpoints();
  const int n = pm.size();
  const int minx = pts[0].x;
  int miny = pts[0].y;
  for (const Point p : pts) miny = std::min(miny, p.y);
  // Canonical index 0 is the top of the left edge, so blacks sit at odd indices.
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < pts.size(); i += 2)
    sigma[static_cast<std::size_t>(pts[i].x - minx)] = pts[i].y - miny + 1;
  Permutation perm(std::move(sigma));
  const auto free = free_fixed_points(perm);
  const std::size_t end = pm.upper_walk_end();
  std::vector<int> colored;
  for (std::size_t i = 1; i <= end; i += 2) {
    const int pos = pts[i].x - minx + 1;
    if (perm(pos) == pos && std::binary_search(free.begin(), free.end(), pos)) colored.push_back(pos);
  }
  return ColoredPermutation(std::move(perm), std::move(colored));
}

/// Inverse of phi. Black points are cycled clockwise: sigma(1), then the
/// upper part left to right (uncolored upper points that are not free fixed
/// points, plus colored points), then the remaining points right to left.
/// The white corner between consecutive blacks a -> b is (x_a, y_b).
inline Permutomino phi_inverse(const ColoredPermutation& cp) {
  const Permutation& p = cp.perm();
  const int n = p.size();
  if (n < 2) throw Error(ErrorKind::DomainError, "permutominoes have size at least 2");
  const auto masks = classify_records(p);
  for (const auto& m : masks)
    if (!m.exterior()) throw Error(ErrorKind::NotSquare, format(cp) + " has an interior point");
  if (is_co_decomposable(p)) throw Error(ErrorKind::NotCoIndecomposable, format(cp));
  const auto free = free_fixed_points(p);

  std::vector<int> order{1}, lower;
  for (int i = 2; i <= n; ++i) {
    const bool upper = (masks[i - 1].upper() && !std::binary_search(free.begin(), free.end(), i)) || cp.is_colored(i);
    (upper ? order : lower).push_back(i);
  }
  order.insert(order.end(), lower.rbegin(), lower.rend());

  std::vector<Point> pts;
  pts.reserve(2 * static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < order.size(); ++a) {
    const int i = order[a], j = order[(a + 1) % order.size()];
    pts.push_back({i - 1, p(i) - 1});
    pts.push_back({i - 1, p(j) - 1});
  }
  try {
    Permutomino pm(pts);
    if (phi(pm) != cp) throw Error(ErrorKind::ReconstructionFailed, "phi does not return " + format(cp));
    return pm;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ReconstructionFailed) throw;
    throw Error(ErrorKind::ReconstructionFailed, format(cp) + ": " + e.what());
  }
}

struct SideProfile {
  int upper_sides = 0;
  int left_sides = 0;

  friend bool operator==(const SideProfile&, const SideProfile&) = default;
};

/// Horizontal sides on the upper walk (top of the left edge to the top of the
/// right edge) and vertical sides on the left walk (left end of the bottom
/// side to the left end of the top side).
inline SideProfile side_profile(const Permutomino& pm) {
  const auto& pts = pm.turnpoints();
  const std::size_t k = pts.size();
  SideProfile sp;
  const std::size_t end = pm.upper_walk_end();
  for (std::size_t i = 0; i < end; ++i)
    if (pts[i].y == pts[i + 1].y) ++sp.upper_sides;

  int miny = pts[0].y, maxy = pts[0].y;
  for (const Point p : pts) {
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  std::size_t from = 0, to = 0;
  bool have_from = false, have_to = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (pts[i].y == miny && (!have_from || pts[i].x < pts[from].x)) from = i, have_from = true;
    if (pts[i].y == maxy && (!have_to || pts[i].x < pts[to].x)) to = i, have_to = true;
  }
  for (std::size_t i = from; i != to; i = (i + 1) % k)
    if (pts[i].x == pts[(i + 1) % k].x) ++sp.left_sides;
  return sp;
}

// Text format: "x,y;x,y;..." in canonical order.

inline std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  auto parse_int = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
      throw Error(ErrorKind::SyntaxError, "bad coordinate '" + std::string(s) + "'");
    return v;
  };
  while (true) {
    const auto semi = text.find(';', pos);
    const std::string_view tok = text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    const auto comma = tok.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorKind::SyntaxError, "turnpoint needs 'x,y'");
    pts.push_back({parse_int(tok.substr(0, comma)), parse_int(tok.substr(comma + 1))});
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return pts;
}

inline Permutomino parse_permutomino(std::string_view text) { return Permutomino(parse_points(text)); }

inline std::string format(std::span<const Point> pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(pts[i].x) + "," + std::to_string(pts[i].y);
  }
  return out;
}

inline std::string format(const Permutomino& pm) { return format(std::span<const Point>(pm.turnpoints())); }

}  // namespace hvcode

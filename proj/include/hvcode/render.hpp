#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hvcode/geometry.hpp"
#include "hvcode/permutation.hpp"
#include "hvcode/permutomino.hpp"

namespace hvcode {

/// Text plot, top row = largest value. 'o' exterior, 'x' interior, '@' colored.
inline std::string render_ascii(const ColoredPermutation& cp) {
  const Permutation& p = cp.perm();
  const int n = p.size();
  const auto masks = classify_records(p);
  std::vector<std::string> rows(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(2 * n - 1), ' '));
  for (auto& r : rows)
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(2 * i)] = '.';
  for (int i = 1; i <= n; ++i) {
    char c = masks[i - 1].exterior() ? 'o' : 'x';
    if (cp.is_colored(i)) c = '@';
    rows[static_cast<std::size_t>(n - p(i))][static_cast<std::size_t>(2 * (i - 1))] = c;
  }
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

namespace detail {

inline bool cell_inside(const std::vector<Point>& poly, int cx, int cy) {
  // Ray to the right from the cell centre (cx + 1/2, cy + 1/2), doubled coordinates.
  bool in = false;
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % k];
    if (a.x != b.x) continue;
    const int lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
    if (2 * lo < 2 * cy + 1 && 2 * cy + 1 < 2 * hi && 2 * a.x > 2 * cx + 1) in = !in;
  }
  return in;
}

}  // namespace detail

/// Cells of the polygon as '#', top row first.
inline std::string render_ascii(const Permutomino& pm) {
  const auto& pts = pm.turnpoints();
  int minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point p : pts) {
    minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
  }
  std::string out;
  for (int y = maxy - 1; y >= miny; --y) {
    for (int x = minx; x < maxx; ++x) out += detail::cell_inside(pts, x, y) ? '#' : '.';
    out += '\n';
  }
  return out;
}

namespace detail {

inline constexpr int kScale = 40;
inline constexpr int kMargin = 20;

struct SvgCanvas {
  int width, height, maxy;
  std::string body;

  int sx(int x) const { return kMargin + x * kScale; }
  int sy(int y) const { return kMargin + (maxy - y) * kScale; }

  std::string finish() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
           "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n" + body + "</svg>\n";
  }
};

inline std::string svg_polyline(const SvgCanvas& c, const std::vector<Point>& pts, const char* color) {
  std::string s = "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s += (i ? " " : "") + std::to_string(c.sx(pts[i].x)) + "," + std::to_string(c.sy(pts[i].y));
  return s + "\"/>\n";
}

inline std::string svg_dot(const SvgCanvas& c, Point p, const char* fill) {
  return "<circle cx=\"" + std::to_string(c.sx(p.x)) + "\" cy=\"" + std::to_string(c.sy(p.y)) + "\" r=\"5\" fill=\"" +
         fill + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
}

}  // namespace detail

/// Points and the four record paths: left-upper blue, right-upper red,
/// left-lower green, right-lower purple. Colored points are drawn hollow.
inline std::string render_svg(const ColoredPermutation& cp) {
  const Permutation& p = cp.perm();
  const int n = p.size();
  detail::SvgCanvas c{2 * detail::kMargin + (n - 1) * detail::kScale, 2 * detail::kMargin + (n - 1) * detail::kScale,
                      n - 1, ""};
  const auto masks = classify_records(p);
  const struct {
    bool RecordMask::*flag;
    const char* color;
  } paths[] = {{&RecordMask::ul, "#1f77b4"}, {&RecordMask::ur, "#d62728"},
               {&RecordMask::bl, "#2ca02c"}, {&RecordMask::br, "#9467bd"}};
  for (const auto& path : paths) {
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i)
      if (masks[i - 1].*path.flag) pts.push_back({i - 1, p(i) - 1});
    c.body += detail::svg_polyline(c, pts, path.color);
  }
  for (int i = 1; i <= n; ++i) {
    const char* fill = cp.is_colored(i) ? "#ffffff" : masks[i - 1].exterior() ? "#000000" : "#ff7f0e";
    c.body += detail::svg_dot(c, {i - 1, p(i) - 1}, fill);
  }
  return c.finish();
}

/// Boundary filled grey, turnpoints alternately black and white clockwise
/// from the bottom of the left edge.
inline std::string render_svg(const Permutomino& pm) {
  const auto& pts = pm.turnpoints();
  int maxx = pts[0].x, maxy = pts[0].y;
  for (const Point p : pts) maxx = std::max(maxx, p.x), maxy = std::max(maxy, p.y);
  detail::SvgCanvas c{2 * detail::kMargin + maxx * detail::kScale, 2 * detail::kMargin + maxy * detail::kScale, maxy,
                      ""};
  c.body += "<polygon fill=\"#dddddd\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    c.body += (i ? " " : "") + std::to_string(c.sx(pts[i].x)) + "," + std::to_string(c.sy(pts[i].y));
  c.body += "\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) c.body += detail::svg_dot(c, pts[i], i % 2 ? "#000000" : "#ffffff");
  return c.finish();
}

}  // namespace hvcode

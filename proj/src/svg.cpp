#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trihex/hexlattice.hpp"
#include "trihex/svg.hpp"

namespace trihex {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::ostringstream make_stream() {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  return out;
}

struct Point {
  double x = 0;
  double y = 0;
};

}  // namespace

std::string map_svg(const CombinatorialMap& m) {
  int outer = 0;
  for (int f = 0; f < m.face_count; ++f) {
    if (m.face_size[static_cast<size_t>(f)] == 6) {
      outer = f;
      break;
    }
  }

  std::vector<int> ring;
  {
    const int first = m.face_dart[static_cast<size_t>(outer)];
    int d = first;
    do {
      ring.push_back(m.vertex_of[static_cast<size_t>(d)]);
      d = m.face_next(d);
    } while (d != first);
  }

  const double cx = 350;
  const double cy = 350;
  const double radius = 300;
  const int n = m.vertex_count;
  std::vector<Point> pos(static_cast<size_t>(n), Point{cx, cy});
  std::vector<char> pinned(static_cast<size_t>(n), 0);
  for (size_t k = 0; k < ring.size(); ++k) {
    const double angle =
        2 * kPi * static_cast<double>(k) / static_cast<double>(ring.size()) -
        kPi / 2;
    pos[static_cast<size_t>(ring[k])] = {cx + radius * std::cos(angle),
                                         cy + radius * std::sin(angle)};
    pinned[static_cast<size_t>(ring[k])] = 1;
  }

  std::vector<std::vector<int>> adjacency;
  adjacency.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adjacency.push_back(m.neighbors(v));

  // Barycentric relaxation: sweep vertices in a fixed order until settled.
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double moved = 0;
    for (int v = 0; v < n; ++v) {
      if (pinned[static_cast<size_t>(v)]) continue;
      Point next{0, 0};
      const std::vector<int>& nb = adjacency[static_cast<size_t>(v)];
      for (const int u : nb) {
        next.x += pos[static_cast<size_t>(u)].x;
        next.y += pos[static_cast<size_t>(u)].y;
      }
      next.x /= static_cast<double>(nb.size());
      next.y /= static_cast<double>(nb.size());
      moved = std::max({moved, std::abs(next.x - pos[static_cast<size_t>(v)].x),
                        std::abs(next.y - pos[static_cast<size_t>(v)].y)});
      pos[static_cast<size_t>(v)] = next;
    }
    if (moved < 1e-9) break;
  }

  std::ostringstream out = make_stream();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 700 700\">\n";
  out << "  <rect width=\"700\" height=\"700\" fill=\"#ffffff\"/>\n";
  for (int v = 0; v < n; ++v) {
    const int first = m.vertex_dart[static_cast<size_t>(v)];
    int d = first;
    do {
      const int u = m.vertex_of[static_cast<size_t>(
          m.opposite[static_cast<size_t>(d)])];
      if (v < u) {
        out << "  <line x1=\"" << pos[static_cast<size_t>(v)].x << "\" y1=\""
            << pos[static_cast<size_t>(v)].y << "\" x2=\""
            << pos[static_cast<size_t>(u)].x << "\" y2=\""
            << pos[static_cast<size_t>(u)].y
            << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
      }
      d = m.next_ccw[static_cast<size_t>(d)];
    } while (d != first);
  }
  for (int v = 0; v < n; ++v) {
    out << "  <circle cx=\"" << pos[static_cast<size_t>(v)].x << "\" cy=\""
        << pos[static_cast<size_t>(v)].y
        << "\" r=\"4\" fill=\"#1f6fb4\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

Int floor_div(Int a, Int b) { return (a - floor_mod(a, b)) / b; }

Point hex_center(HexCoord h, double scale) {
  const double root3 = std::sqrt(3.0);
  return {1.5 * static_cast<double>(h.q) * scale,
          (root3 * static_cast<double>(h.r) -
           root3 / 2 * static_cast<double>(h.q)) *
              scale};
}

void polygon(std::ostringstream& out, const std::vector<Point>& corners,
             const char* fill, const char* extra) {
  out << "  <polygon points=\"";
  for (size_t i = 0; i < corners.size(); ++i) {
    if (i > 0) out << " ";
    out << corners[i].x << "," << corners[i].y;
  }
  out << "\" fill=\"" << fill << "\"" << extra << "/>\n";
}

}  // namespace

std::string tiling_svg(const Signature& sig, int columns, int rows) {
  if (columns <= 0 || rows <= 0) {
    throw std::invalid_argument("window dimensions must be positive");
  }
  const RotocenterLattice lat(sig);
  const double scale = 24;

  std::vector<HexCoord> window;
  for (Int q = 0; q < columns; ++q) {
    const Int base = floor_div(q + 1, 2);  // keeps the window visually level
    for (Int r = base; r < base + rows; ++r) window.push_back(HexCoord{q, r});
  }

  double min_x = 1e300;
  double min_y = 1e300;
  double max_x = -1e300;
  double max_y = -1e300;
  for (const HexCoord& h : window) {
    const Point c = hex_center(h, scale);
    min_x = std::min(min_x, c.x - scale);
    max_x = std::max(max_x, c.x + scale);
    min_y = std::min(min_y, c.y - scale);
    max_y = std::max(max_y, c.y + scale);
  }
  const Point window_center{(min_x + max_x) / 2, (min_y + max_y) / 2};

  // Pick the rotation center nearest the window's middle; search one lattice
  // period beyond the window so small windows still find one.
  bool have_origin = false;
  HexCoord origin{0, 0};
  double best = 0;
  for (Int q = -(sig.b + 1); q < columns + sig.b + 1; ++q) {
    const Int base = floor_div(q + 1, 2);
    for (Int r = base - (sig.s + 1); r < base + rows + sig.s + 1; ++r) {
      const HexCoord h{q, r};
      if (!lat.is_rotocenter(h)) continue;
      const Point c = hex_center(h, scale);
      const double dx = c.x - window_center.x;
      const double dy = c.y - window_center.y;
      const double dist = dx * dx + dy * dy;
      if (!have_origin || dist < best ||
          (dist == best && h < origin)) {
        have_origin = true;
        best = dist;
        origin = h;
      }
    }
  }
  if (!have_origin) throw internal_error("no rotation center found");

  std::ostringstream out = make_stream();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << (min_x - scale / 2) << " " << (min_y - scale / 2) << " "
      << (max_x - min_x + scale) << " " << (max_y - min_y + scale) << "\">\n";

  for (const HexCoord& h : window) {
    const Point c = hex_center(h, scale);
    std::vector<Point> corners;
    corners.reserve(6);
    for (int k = 0; k < 6; ++k) {
      const double angle = kPi / 3 * k;
      corners.push_back(
          {c.x + scale * std::cos(angle), c.y + scale * std::sin(angle)});
    }
    polygon(out, corners, "#f4f1e8", " stroke=\"#999999\" stroke-width=\"1\"");
  }

  // Fundamental domain: two adjacent lattice parallelograms.
  const HexCoord u = lat.u();
  const HexCoord w = lat.w();
  const char* fills[2] = {"#4477aa", "#66aa55"};
  for (int half = 0; half < 2; ++half) {
    const HexCoord base =
        half == 0 ? origin : origin + u;
    std::vector<Point> corners{
        hex_center(base, scale), hex_center(base + w, scale),
        hex_center(base + w + u, scale), hex_center(base + u, scale)};
    polygon(out, corners, fills[half],
            " fill-opacity=\"0.35\" stroke=\"#333333\" stroke-width=\"1.5\"");
  }

  for (const HexCoord& h : window) {
    if (!lat.is_rotocenter(h)) continue;
    const Point c = hex_center(h, scale);
    out << "  <circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\""
        << scale * 0.18 << "\" fill=\"#cc3311\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace trihex

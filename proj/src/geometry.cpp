#include "gaf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaf {

namespace {

// Signed cross product of (q - p) with (s - p); > 0 when s is left of p->q.
inline double cross(Point p, Point q, Point s) {
  return (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x);
}

}  // namespace

double distance(Point p, Point q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double lens_area(double radius, double center_distance) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("lens_area: radius must be positive");
  }
  if (center_distance < 0.0) {
    throw std::invalid_argument("lens_area: center distance must be >= 0");
  }
  const double d = center_distance;
  if (d >= 2.0 * radius) return 0.0;
  return 2.0 * radius * radius * std::acos(d / (2.0 * radius)) -
         (d / 2.0) * std::sqrt(4.0 * radius * radius - d * d);
}

double chain_union_area_mc(int n, double spacing, double radius,
                           std::int64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("chain_union_area_mc: n must be >= 1");
  if (spacing < 0.0) {
    throw std::invalid_argument("chain_union_area_mc: spacing must be >= 0");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("chain_union_area_mc: radius must be positive");
  }
  if (samples < 1) {
    throw std::invalid_argument("chain_union_area_mc: samples must be >= 1");
  }

  const double x_min = -radius;
  const double x_max = static_cast<double>(n - 1) * spacing + radius;
  const double y_min = -radius;
  const double y_max = radius;
  const double box = (x_max - x_min) * (y_max - y_min);
  const double r2 = radius * radius;

  std::mt19937_64 eng(seed);
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    const double px = x_min + uniform01(eng) * (x_max - x_min);
    const double py = y_min + uniform01(eng) * (y_max - y_min);
    for (int i = 0; i < n; ++i) {
      const double dx = px - static_cast<double>(i) * spacing;
      if (dx * dx + py * py <= r2) {
        ++hits;
        break;
      }
    }
  }
  return box * static_cast<double>(hits) / static_cast<double>(samples);
}

double chain_union_area_mc_stderr(int n, double spacing, double radius,
                                  std::int64_t samples, double estimate) {
  const double box = (static_cast<double>(n - 1) * spacing + 2.0 * radius) *
                     (2.0 * radius);
  const double p = std::clamp(estimate / box, 0.0, 1.0);
  return box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

double triangle_height(const Triangle& t) {
  return t.base * std::sqrt(3.0) / 2.0;
}

Polygon shape_vertices(const CellShape& shape) {
  if (const auto* r = std::get_if<Rect>(&shape)) {
    const double x0 = r->origin.x, y0 = r->origin.y;
    return {{x0, y0},
            {x0 + r->width, y0},
            {x0 + r->width, y0 + r->height},
            {x0, y0 + r->height}};
  }
  const auto& t = std::get<Triangle>(shape);
  const double h = triangle_height(t);
  const Point a = t.anchor;
  if (t.up) {
    return {a, {a.x + t.base, a.y}, {a.x + t.base / 2.0, a.y + h}};
  }
  // counter-clockwise: top-left, apex, top-right
  return {a, {a.x + t.base / 2.0, a.y - h}, {a.x + t.base, a.y}};
}

double shape_area(const CellShape& shape) {
  if (const auto* r = std::get_if<Rect>(&shape)) return r->width * r->height;
  const auto& t = std::get<Triangle>(shape);
  return t.base * triangle_height(t) / 2.0;
}

Point shape_centroid(const CellShape& shape) {
  if (const auto* r = std::get_if<Rect>(&shape)) {
    return {r->origin.x + r->width / 2.0, r->origin.y + r->height / 2.0};
  }
  const Polygon v = shape_vertices(shape);
  return {(v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0};
}

bool point_in_shape(const CellShape& shape, Point p) {
  if (const auto* r = std::get_if<Rect>(&shape)) {
    return p.x >= r->origin.x && p.x < r->origin.x + r->width &&
           p.y >= r->origin.y && p.y < r->origin.y + r->height;
  }
  const auto& t = std::get<Triangle>(shape);
  const double h = triangle_height(t);
  const Point a = t.anchor;
  if (t.up) {
    const Point b{a.x + t.base, a.y};
    const Point c{a.x + t.base / 2.0, a.y + h};
    // bottom and left edges inclusive, right edge owned by the neighbor
    return cross(a, b, p) >= 0.0 && cross(a, c, p) <= 0.0 &&
           cross(b, c, p) > 0.0;
  }
  const Point d = a;
  const Point e{a.x + t.base, a.y};
  const Point f{a.x + t.base / 2.0, a.y - h};
  // left edge inclusive, right edge and top edge owned by the neighbors
  return cross(d, f, p) >= 0.0 && cross(f, e, p) > 0.0 && cross(d, e, p) < 0.0;
}

bool point_in_shape_closed(const CellShape& shape, Point p, double eps) {
  if (const auto* r = std::get_if<Rect>(&shape)) {
    return p.x >= r->origin.x - eps && p.x <= r->origin.x + r->width + eps &&
           p.y >= r->origin.y - eps && p.y <= r->origin.y + r->height + eps;
  }
  return point_in_convex_polygon(shape_vertices(shape), p, eps);
}

Polygon clip_to_rect(const Polygon& poly, const Rect& rect) {
  // rect boundaries as half-plane tests, evaluated exactly
  const double x0 = rect.origin.x, x1 = rect.origin.x + rect.width;
  const double y0 = rect.origin.y, y1 = rect.origin.y + rect.height;

  auto clip_pass = [](const Polygon& in, auto inside, auto intersect) {
    Polygon out;
    const std::size_t n = in.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point cur = in[i];
      const Point nxt = in[(i + 1) % n];
      const bool cin = inside(cur);
      const bool nin = inside(nxt);
      if (cin) out.push_back(cur);
      if (cin != nin) out.push_back(intersect(cur, nxt));
    }
    return out;
  };

  auto at_x = [](Point p, Point q, double x) {
    const double t = (x - p.x) / (q.x - p.x);
    return Point{x, p.y + t * (q.y - p.y)};
  };
  auto at_y = [](Point p, Point q, double y) {
    const double t = (y - p.y) / (q.y - p.y);
    return Point{p.x + t * (q.x - p.x), y};
  };

  Polygon out = poly;
  out = clip_pass(out, [&](Point p) { return p.x >= x0; },
                  [&](Point p, Point q) { return at_x(p, q, x0); });
  if (out.empty()) return out;
  out = clip_pass(out, [&](Point p) { return p.x <= x1; },
                  [&](Point p, Point q) { return at_x(p, q, x1); });
  if (out.empty()) return out;
  out = clip_pass(out, [&](Point p) { return p.y >= y0; },
                  [&](Point p, Point q) { return at_y(p, q, y0); });
  if (out.empty()) return out;
  out = clip_pass(out, [&](Point p) { return p.y <= y1; },
                  [&](Point p, Point q) { return at_y(p, q, y1); });
  return out;
}

double polygon_area(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return std::abs(a) / 2.0;
}

Point polygon_centroid(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n == 0) return {0.0, 0.0};
  double a2 = 0.0;  // twice the signed area
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  if (std::abs(a2) < 1e-300) {
    double sx = 0.0, sy = 0.0;
    for (const Point& p : poly) {
      sx += p.x;
      sy += p.y;
    }
    return {sx / static_cast<double>(n), sy / static_cast<double>(n)};
  }
  return {cx / (3.0 * a2), cy / (3.0 * a2)};
}

bool point_in_convex_polygon(const Polygon& poly, Point p, double eps) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  // counter-clockwise convex polygon: inside iff never strictly right of an edge
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % n];
    const double len = distance(a, b);
    if (cross(a, b, p) < -eps * std::max(len, 1.0)) return false;
  }
  return true;
}

Polygon boundary_samples(const Polygon& poly, double pitch) {
  if (!(pitch > 0.0)) {
    throw std::invalid_argument("boundary_samples: pitch must be positive");
  }
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % n];
    const double len = distance(a, b);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / pitch)));
    for (int k = 0; k < steps; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(steps);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

}  // namespace gaf

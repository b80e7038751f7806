#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace gaf {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Disc {
  Point center;
  double radius = 0.0;
};

// Axis-aligned rectangle; origin is the lower-left corner.
struct Rect {
  Point origin;
  double width = 0.0;
  double height = 0.0;
};

// Equilateral triangle with a horizontal edge. `anchor` is the left end of
// that edge (the bottom edge for upward triangles, the top edge for downward
// ones); the apex sits base*sqrt(3)/2 above resp. below the edge.
struct Triangle {
  Point anchor;
  double base = 0.0;
  bool up = true;
};

using CellShape = std::variant<Rect, Triangle>;
using Polygon = std::vector<Point>;

double distance(Point p, Point q);

// Intersection area of two discs of equal `radius` whose centers are
// `center_distance` apart; zero once the discs are disjoint or tangent.
double lens_area(double radius, double center_distance);

// Monte Carlo estimate of the union area of n discs centered at
// (i*spacing, 0), i = 0..n-1. Deterministic for a fixed seed.
double chain_union_area_mc(int n, double spacing, double radius,
                           std::int64_t samples, std::uint64_t seed);

// Standard error of the above estimate (binomial error of the hit fraction).
double chain_union_area_mc_stderr(int n, double spacing, double radius,
                                  std::int64_t samples, double estimate);

double triangle_height(const Triangle& t);
Polygon shape_vertices(const CellShape& shape);
double shape_area(const CellShape& shape);
Point shape_centroid(const CellShape& shape);

// Half-open membership: rectangles include their left/bottom edges, and a
// triangle includes the edges adjacent to its bottom-left lattice vertex, so
// that tilings built from these shapes assign every plane point to exactly
// one cell.
bool point_in_shape(const CellShape& shape, Point p);

// Closed membership with slack `eps`, boundary included.
bool point_in_shape_closed(const CellShape& shape, Point p, double eps = 0.0);

// Convex polygon clipped against an axis-aligned rectangle
// (Sutherland-Hodgman). Result may be empty.
Polygon clip_to_rect(const Polygon& poly, const Rect& rect);

double polygon_area(const Polygon& poly);
Point polygon_centroid(const Polygon& poly);
bool point_in_convex_polygon(const Polygon& poly, Point p, double eps = 0.0);

// Points along the polygon boundary at pitch <= `pitch`; every vertex is
// included exactly once.
Polygon boundary_samples(const Polygon& poly, double pitch);

// Uniform double in [0, 1) from the raw 64-bit stream; avoids the
// implementation-defined std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace gaf

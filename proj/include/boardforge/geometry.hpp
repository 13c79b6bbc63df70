#pragma once

#include <span>
#include <vector>

#include "boardforge/types.hpp"

namespace boardforge {

/// Simple counter-clockwise polygon. Construction validates and reorients.
class Polygon {
 public:
  Polygon() = default;
  /// Throws InvalidPolygon if fewer than 3 distinct points or self-intersecting.
  explicit Polygon(std::vector<Point2> points);

  const std::vector<Point2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point2> points_;
};

double signed_area(std::span<const Point2> ring);
Point2 vertex_average(std::span<const Point2> ring);

enum class Containment { Outside, Boundary, Inside };

/// Ray casting; points within kMergeEps of the boundary report Boundary.
Containment locate(Point2 p, std::span<const Point2> ring);

/// Inside-or-boundary test used by shape restriction.
inline bool contains(std::span<const Point2> ring, Point2 p) { return locate(p, ring) != Containment::Outside; }
inline bool contains(const Polygon& poly, Point2 p) { return contains(std::span<const Point2>(poly.points()), p); }

/// A point strictly inside a simple polygon (vertex average when it qualifies).
Point2 interior_point(std::span<const Point2> ring);

double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// True when segments cross at a single point interior to both.
bool segments_cross(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// True when p lies on segment ab away from both endpoints.
bool on_segment_interior(Point2 p, Point2 a, Point2 b);

/// Vertices of a regular polygon with unit sides, first vertex at `first_angle` (radians).
std::vector<Point2> regular_polygon(Point2 center, int sides, double first_angle, double side = 1.0);

/// Circumradius of a regular n-gon with the given side.
double circumradius(int sides, double side = 1.0);
/// Apothem of a regular n-gon with the given side.
double apothem(int sides, double side = 1.0);

}  // namespace boardforge

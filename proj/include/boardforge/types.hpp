#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace boardforge {

/// Coincidence radius for vertices, in unit-edge coordinates.
inline constexpr double kMergeEps = 1e-6;
/// Tolerance for "maximally opposed" and heading ties, in radians.
inline constexpr double kAngleTol = 1e-6;
/// Polyline segments per arc side of a concentric cell.
inline constexpr int kArcSegs = 8;

inline constexpr double kPi = 3.14159265358979323846;

// Ordering matters: canonical serialization lists Vertex, Edge, Cell.
enum class SiteType : std::uint8_t { Vertex = 0, Edge = 1, Cell = 2 };

inline constexpr SiteType kAllSiteTypes[] = {SiteType::Vertex, SiteType::Edge, SiteType::Cell};

std::string_view to_string(SiteType t);
std::optional<SiteType> parse_site_type(std::string_view s);

struct ElementId {
  SiteType type = SiteType::Cell;
  int index = 0;

  auto operator<=>(const ElementId&) const = default;
};

/// Playable-site address. Level is carried for addressing only.
struct Site {
  SiteType type = SiteType::Cell;
  int index = 0;
  int level = 0;

  ElementId element() const { return {type, index}; }
  auto operator<=>(const Site&) const = default;
};

/// Parses "Cell:12" or "Vertex:3:1" (with level).
std::optional<Site> parse_site(std::string_view s);
std::string to_string(ElementId id);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator/(double s) const { return {x / s, y / s}; }
  Point2& operator+=(Point2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  bool operator==(const Point2&) const = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool coincident(Point2 a, Point2 b) { return distance(a, b) < kMergeEps; }

/// Angle of a vector in radians, in (-pi, pi].
inline double heading_of(Point2 d) { return std::atan2(d.y, d.x); }

/// Wraps an angle into [0, 2pi).
double wrap_positive(double a);
/// Absolute angular difference in [0, pi].
double angle_between(double a, double b);

}  // namespace boardforge

#include "boardforge/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "boardforge/error.hpp"

namespace boardforge {

std::string_view to_string(SiteType t) {
  switch (t) {
    case SiteType::Vertex: return "Vertex";
    case SiteType::Edge: return "Edge";
    case SiteType::Cell: return "Cell";
  }
  return "?";
}

std::optional<SiteType> parse_site_type(std::string_view s) {
  if (s == "Vertex") return SiteType::Vertex;
  if (s == "Edge") return SiteType::Edge;
  if (s == "Cell") return SiteType::Cell;
  return std::nullopt;
}

namespace {

std::optional<int> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

std::optional<Site> parse_site(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto type = parse_site_type(s.substr(0, colon));
  if (!type) return std::nullopt;
  auto rest = s.substr(colon + 1);
  auto colon2 = rest.find(':');
  auto index = parse_index(rest.substr(0, colon2));
  if (!index) return std::nullopt;
  Site site{*type, *index, 0};
  if (colon2 != std::string_view::npos) {
    auto level = parse_index(rest.substr(colon2 + 1));
    if (!level) return std::nullopt;
    site.level = *level;
  }
  return site;
}

std::string to_string(ElementId id) {
  return std::string(to_string(id.type)) + ":" + std::to_string(id.index);
}

double wrap_positive(double a) {
  double r = std::fmod(a, 2.0 * kPi);
  if (r < 0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r -= 2.0 * kPi;
  return r;
}

double angle_between(double a, double b) {
  double d = wrap_positive(a - b);
  return d > kPi ? 2.0 * kPi - d : d;
}

double signed_area(std::span<const Point2> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

Point2 vertex_average(std::span<const Point2> ring) {
  Point2 sum;
  for (auto p : ring) sum += p;
  return ring.empty() ? sum : sum / static_cast<double>(ring.size());
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  Point2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

Containment locate(Point2 p, std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, ring[i], ring[(i + 1) % n]) < kMergeEps) return Containment::Boundary;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = ring[i];
    const Point2 b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

Point2 interior_point(std::span<const Point2> ring) {
  Point2 avg = vertex_average(ring);
  if (locate(avg, ring) == Containment::Inside) return avg;
  // Scanline through the middle of the bounding box; take the widest interior run.
  double lo = ring[0].y, hi = ring[0].y;
  for (auto p : ring) {
    lo = std::min(lo, p.y);
    hi = std::max(hi, p.y);
  }
  for (double frac : {0.5, 0.37, 0.63, 0.21, 0.79}) {
    double y = lo + (hi - lo) * frac;
    std::vector<double> xs;
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
      const Point2 a = ring[i];
      const Point2 b = ring[j];
      if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    double best = 0.0;
    Point2 pick;
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      if (xs[k + 1] - xs[k] > best) {
        best = xs[k + 1] - xs[k];
        pick = {0.5 * (xs[k] + xs[k + 1]), y};
      }
    }
    if (best > 0.0 && locate(pick, ring) == Containment::Inside) return pick;
  }
  return avg;
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
  double v = cross(b - a, c - a);
  double scale = std::max(norm(b - a), 1.0) * kMergeEps;
  if (v > scale) return 1;
  if (v < -scale) return -1;
  return 0;
}

}  // namespace

bool segments_cross(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  int o1 = orientation(a0, a1, b0);
  int o2 = orientation(a0, a1, b1);
  int o3 = orientation(b0, b1, a0);
  int o4 = orientation(b0, b1, a1);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool on_segment_interior(Point2 p, Point2 a, Point2 b) {
  if (coincident(p, a) || coincident(p, b)) return false;
  return point_segment_distance(p, a, b) < kMergeEps;
}

double circumradius(int sides, double side) { return side / (2.0 * std::sin(kPi / sides)); }
double apothem(int sides, double side) { return side / (2.0 * std::tan(kPi / sides)); }

std::vector<Point2> regular_polygon(Point2 center, int sides, double first_angle, double side) {
  std::vector<Point2> pts;
  pts.reserve(sides);
  const double r = circumradius(sides, side);
  for (int k = 0; k < sides; ++k) {
    double a = first_angle + 2.0 * kPi * k / sides;
    pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return pts;
}

Polygon::Polygon(std::vector<Point2> points) {
  std::vector<Point2> cleaned;
  for (auto p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::InvalidPolygon, "polygon point is not finite");
    if (cleaned.empty() || !coincident(cleaned.back(), p)) cleaned.push_back(p);
  }
  if (cleaned.size() > 1 && coincident(cleaned.front(), cleaned.back())) cleaned.pop_back();
  if (cleaned.size() < 3) fail(ErrorCode::InvalidPolygon, "polygon needs at least 3 distinct points");
  const std::size_t n = cleaned.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coincident(cleaned[i], cleaned[j])) fail(ErrorCode::InvalidPolygon, "polygon repeats a point");
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross(cleaned[i], cleaned[(i + 1) % n], cleaned[j], cleaned[(j + 1) % n])) {
        fail(ErrorCode::InvalidPolygon, "polygon is self-intersecting");
      }
    }
  }
  double area = signed_area(cleaned);
  if (std::abs(area) < kMergeEps) fail(ErrorCode::InvalidPolygon, "polygon has zero area");
  if (area < 0) std::reverse(cleaned.begin(), cleaned.end());
  points_ = std::move(cleaned);
}

}  // namespace boardforge

#include "boardforge/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "boardforge/error.hpp"

namespace boardforge {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt2 = std::sqrt(2.0);

struct KindName {
  TilingKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {TilingKind::Square, "square"}, {TilingKind::Hex, "hex"},       {TilingKind::Tri, "tri"},
    {TilingKind::T488, "T488"},     {TilingKind::T4612, "T4612"},   {TilingKind::T3464, "T3464"},
    {TilingKind::T3636, "T3636"},   {TilingKind::T31212, "T31212"}, {TilingKind::T33336, "T33336"},
    {TilingKind::T33344, "T33344"}, {TilingKind::T33434, "T33434"}, {TilingKind::Concentric, "concentric"},
    {TilingKind::Brick, "brick"},
};

void require_positive(int n, std::string_view what) {
  if (n < 1) fail(ErrorCode::InvalidDimension, std::string(what) + " must be at least 1, got " + std::to_string(n));
}

// Square grid with (cols + 1) x (rows + 1) lattice points; degenerate sizes give paths or a point.
BoardGraph lattice_grid(int rows, int cols) {
  GraphParts parts;
  auto id = [&](int x, int y) { return y * (cols + 1) + x; };
  for (int y = 0; y <= rows; ++y) {
    for (int x = 0; x <= cols; ++x) parts.points.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  for (int y = 0; y <= rows; ++y) {
    for (int x = 0; x <= cols; ++x) {
      if (x < cols) parts.edges.push_back({id(x, y), id(x + 1, y)});
      if (y < rows) parts.edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) parts.cells.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1), id(x, y + 1)});
  }
  BuildOptions options;
  options.faces = FaceMode::Given;
  return assemble(std::move(parts), options);
}

// Inverse-lattice bounds covering the box, padded by `pad`.
void lattice_range(Point2 a, Point2 b, double x0, double x1, double y0, double y1, double pad, int& i0, int& i1, int& j0,
                   int& j1) {
  const double det = cross(a, b);
  i0 = j0 = 1 << 30;
  i1 = j1 = -(1 << 30);
  for (double x : {x0 - pad, x1 + pad}) {
    for (double y : {y0 - pad, y1 + pad}) {
      double fi = cross({x, y}, b) / det;
      double fj = cross(a, {x, y}) / det;
      i0 = std::min(i0, static_cast<int>(std::floor(fi)) - 1);
      i1 = std::max(i1, static_cast<int>(std::ceil(fi)) + 1);
      j0 = std::min(j0, static_cast<int>(std::floor(fj)) - 1);
      j1 = std::max(j1, static_cast<int>(std::ceil(fj)) + 1);
    }
  }
}

struct MotifTile {
  Point2 offset;
  int sides;
  double first_angle;  // radians
};

struct Motif {
  Point2 a, b;
  std::vector<MotifTile> tiles;
};

Point2 polar(double r, double deg) { return {r * std::cos(deg * kPi / 180.0), r * std::sin(deg * kPi / 180.0)}; }
double rad(double deg) { return deg * kPi / 180.0; }

std::optional<Motif> lattice_motif(TilingKind kind) {
  Motif m;
  switch (kind) {
    case TilingKind::T488: {
      const double l = 1.0 + kSqrt2;
      m.a = {l, 0};
      m.b = {0, l};
      m.tiles = {{{0, 0}, 8, rad(22.5)}, {{l / 2, l / 2}, 4, 0.0}};
      return m;
    }
    case TilingKind::T4612: {
      const double s = 3.0 + kSqrt3;
      m.a = {s, 0};
      m.b = polar(s, 60);
      m.tiles = {{{0, 0}, 12, rad(15)}};
      for (double d : {0.0, 60.0, 120.0}) m.tiles.push_back({polar(s / 2, d), 4, rad(d + 45)});
      for (double d : {30.0, 90.0}) m.tiles.push_back({polar(s / kSqrt3, d), 6, 0.0});
      return m;
    }
    case TilingKind::T3464: {
      const double s = 1.0 + kSqrt3;
      m.a = {s, 0};
      m.b = polar(s, 60);
      m.tiles = {{{0, 0}, 6, rad(30)}};
      for (double d : {0.0, 60.0, 120.0}) m.tiles.push_back({polar(s / 2, d), 4, rad(d + 45)});
      // Triangles touch the hexagon corner with a vertex pointing back at its centre.
      for (double d : {30.0, 90.0}) m.tiles.push_back({polar(s / kSqrt3, d), 3, rad(d + 180)});
      return m;
    }
    case TilingKind::T3636: {
      const double s = 2.0;
      m.a = {s, 0};
      m.b = polar(s, 60);
      m.tiles = {{{0, 0}, 6, 0.0}};
      for (double d : {30.0, 90.0}) m.tiles.push_back({polar(s / kSqrt3, d), 3, rad(d)});
      return m;
    }
    case TilingKind::T31212: {
      const double s = 2.0 + kSqrt3;
      m.a = {s, 0};
      m.b = polar(s, 60);
      m.tiles = {{{0, 0}, 12, rad(15)}};
      for (double d : {30.0, 90.0}) m.tiles.push_back({polar(s / kSqrt3, d), 3, rad(d)});
      return m;
    }
    default: return std::nullopt;
  }
}

using Tiles = std::vector<std::vector<Point2>>;

bool in_box(Point2 p, double x0, double x1, double y0, double y1) {
  return p.x >= x0 - kMergeEps && p.x <= x1 + kMergeEps && p.y >= y0 - kMergeEps && p.y <= y1 + kMergeEps;
}

void keep_tile(Tiles& out, std::vector<Point2> tile, double x0, double x1, double y0, double y1) {
  if (in_box(vertex_average(tile), x0, x1, y0, y1)) out.push_back(std::move(tile));
}

Tiles motif_patch(const Motif& m, double x0, double x1, double y0, double y1) {
  int i0, i1, j0, j1;
  lattice_range(m.a, m.b, x0, x1, y0, y1, 4.0, i0, i1, j0, j1);
  Tiles out;
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      Point2 base = m.a * i + m.b * j;
      for (const auto& t : m.tiles) keep_tile(out, regular_polygon(base + t.offset, t.sides, t.first_angle), x0, x1, y0, y1);
    }
  }
  return out;
}

// Snub hexagonal: a triangular grid with the six triangles around every point of an
// index-7 sublattice fused into a hexagon.
Tiles snub_hex_patch(double x0, double x1, double y0, double y1) {
  const Point2 e1{1, 0}, e2{0.5, kSqrt3 / 2};
  auto at = [&](int i, int j) { return e1 * i + e2 * j; };
  auto is_center = [](int i, int j) { return ((3 * i + j) % 7 + 7) % 7 == 0; };
  int i0, i1, j0, j1;
  lattice_range(e1, e2, x0, x1, y0, y1, 3.0, i0, i1, j0, j1);
  Tiles out;
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      if (is_center(i, j)) {
        keep_tile(out, {at(i + 1, j), at(i, j + 1), at(i - 1, j + 1), at(i - 1, j), at(i, j - 1), at(i + 1, j - 1)}, x0, x1,
                  y0, y1);
      }
      if (!is_center(i, j) && !is_center(i + 1, j) && !is_center(i, j + 1)) {
        keep_tile(out, {at(i, j), at(i + 1, j), at(i, j + 1)}, x0, x1, y0, y1);
      }
      if (!is_center(i + 1, j) && !is_center(i + 1, j + 1) && !is_center(i, j + 1)) {
        keep_tile(out, {at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)}, x0, x1, y0, y1);
      }
    }
  }
  return out;
}

// Elongated triangular: square rows alternating with triangle rows, each layer shifted half a unit.
Tiles elongated_tri_patch(double x0, double x1, double y0, double y1) {
  const double h = kSqrt3 / 2;
  const double layer = 1.0 + h;
  const Point2 origin{-0.5, -0.5};  // centre a square on the origin
  Tiles out;
  int l0 = static_cast<int>(std::floor((y0 - 2.0) / layer)) - 1;
  int l1 = static_cast<int>(std::ceil((y1 + 2.0) / layer)) + 1;
  int k0 = static_cast<int>(std::floor(x0)) - 3 - (l1 - l0);
  int k1 = static_cast<int>(std::ceil(x1)) + 3 + (l1 - l0);
  for (int l = l0; l <= l1; ++l) {
    const double base = l * layer;
    const double shift = 0.5 * l;
    for (int i = k0; i <= k1; ++i) {
      const double x = i + shift;
      keep_tile(out, {origin + Point2{x, base}, origin + Point2{x + 1, base}, origin + Point2{x + 1, base + 1}, origin + Point2{x, base + 1}},
                x0, x1, y0, y1);
      const double y = base + 1.0;
      keep_tile(out, {origin + Point2{x, y}, origin + Point2{x + 1, y}, origin + Point2{x + 0.5, y + h}}, x0, x1, y0, y1);
      keep_tile(out, {origin + Point2{x + 1, y}, origin + Point2{x + 1.5, y + h}, origin + Point2{x + 0.5, y + h}}, x0, x1, y0, y1);
    }
  }
  return out;
}

// Snub square: squares tilted +/-15 degrees on a centred square lattice, with an
// equilateral triangle standing on every square side.
Tiles snub_square_patch(double x0, double x1, double y0, double y1) {
  const double p = std::sqrt(2.0 + kSqrt3);
  int i0, i1, j0, j1;
  lattice_range({p, 0}, {0, p}, x0, x1, y0, y1, 3.0, i0, i1, j0, j1);
  Tiles out;
  std::map<std::pair<long long, long long>, bool> seen;
  auto key = [](Point2 c) { return std::make_pair(std::llround(c.x * 1e5), std::llround(c.y * 1e5)); };
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      const Point2 ca{i * p, j * p};
      const Point2 cb{(i + 0.5) * p, (j + 0.5) * p};
      for (auto [center, angle] : {std::pair{ca, rad(60)}, std::pair{cb, rad(30)}}) {
        auto sq = regular_polygon(center, 4, angle);
        for (int k = 0; k < 4; ++k) {
          Point2 u = sq[k], v = sq[(k + 1) % 4];
          Point2 mid = (u + v) * 0.5;
          Point2 out_dir = mid - center;
          out_dir = out_dir / norm(out_dir);
          Point2 apex = mid + out_dir * (kSqrt3 / 2);
          std::vector<Point2> tri{v, u, apex};
          Point2 c = vertex_average(tri);
          if (seen.emplace(key(c), true).second) keep_tile(out, tri, x0, x1, y0, y1);
        }
        keep_tile(out, sq, x0, x1, y0, y1);
      }
    }
  }
  return out;
}


// Inserts T-junction points lying on polygon sides so that cells share split edges.
Tiles split_sides(const Tiles& polys) {
  std::vector<Point2> corners;
  for (const auto& p : polys) corners.insert(corners.end(), p.begin(), p.end());
  Tiles out;
  for (const auto& poly : polys) {
    std::vector<Point2> ring;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      Point2 a = poly[i], b = poly[(i + 1) % poly.size()];
      ring.push_back(a);
      std::vector<std::pair<double, Point2>> inner;
      for (auto c : corners) {
        if (on_segment_interior(c, a, b)) inner.push_back({distance(a, c), c});
      }
      std::sort(inner.begin(), inner.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      for (auto& [d, c] : inner) {
        if (!coincident(ring.back(), c)) ring.push_back(c);
      }
    }
    out.push_back(std::move(ring));
  }
  return out;
}

}  // namespace

double lattice_period(TilingKind kind) {
  switch (kind) {
    case TilingKind::T488: return 1.0 + kSqrt2;
    case TilingKind::T4612: return 3.0 + kSqrt3;
    case TilingKind::T3464: return 1.0 + kSqrt3;
    case TilingKind::T3636: return 2.0;
    case TilingKind::T31212: return 2.0 + kSqrt3;
    case TilingKind::T33336: return std::sqrt(7.0);
    case TilingKind::T33344: return 1.0 + kSqrt3 / 2;
    case TilingKind::T33434: return std::sqrt(2.0 + kSqrt3);
    default: return 1.0;
  }
}

std::string_view to_string(TilingKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

std::optional<TilingKind> parse_tiling_kind(std::string_view name) {
  for (const auto& kn : kKindNames) {
    if (kn.name == name) return kn.kind;
  }
  return std::nullopt;
}

bool is_semiregular(TilingKind kind) {
  switch (kind) {
    case TilingKind::T488:
    case TilingKind::T4612:
    case TilingKind::T3464:
    case TilingKind::T3636:
    case TilingKind::T31212:
    case TilingKind::T33336:
    case TilingKind::T33344:
    case TilingKind::T33434: return true;
    default: return false;
  }
}

std::vector<int> vertex_configuration(TilingKind kind) {
  switch (kind) {
    case TilingKind::Square: return {4, 4, 4, 4};
    case TilingKind::Hex: return {6, 6, 6};
    case TilingKind::Tri: return {3, 3, 3, 3, 3, 3};
    case TilingKind::T488: return {4, 8, 8};
    case TilingKind::T4612: return {4, 6, 12};
    case TilingKind::T3464: return {3, 4, 6, 4};
    case TilingKind::T3636: return {3, 6, 3, 6};
    case TilingKind::T31212: return {3, 12, 12};
    case TilingKind::T33336: return {3, 3, 3, 3, 6};
    case TilingKind::T33344: return {3, 3, 3, 4, 4};
    case TilingKind::T33434: return {3, 3, 4, 3, 4};
    default: return {};
  }
}

BoardGraph from_polygons(const std::vector<std::vector<Point2>>& polygons) {
  GraphParts parts;
  for (const auto& poly : polygons) {
    std::vector<int> cycle;
    for (auto p : poly) {
      cycle.push_back(static_cast<int>(parts.points.size()));
      parts.points.push_back(p);
    }
    parts.cells.push_back(std::move(cycle));
  }
  BuildOptions options;
  options.faces = FaceMode::Given;
  return assemble(std::move(parts), options);
}

BoardGraph generate_rectangle(int rows, int cols, SiteType use_site) {
  require_positive(rows, "rows");
  require_positive(cols, "columns");
  BoardGraph g = use_site == SiteType::Cell ? lattice_grid(rows, cols) : lattice_grid(rows - 1, cols - 1);
  g.default_site = use_site;
  return g;
}

BoardGraph generate_square(int n, SiteType use_site) {
  require_positive(n, "square size");
  return generate_rectangle(n, n, use_site);
}

BoardGraph generate_hex(int n, SiteType use_site) {
  require_positive(n, "hex size");
  Tiles tiles;
  for (int q = -(n - 1); q <= n - 1; ++q) {
    for (int r = -(n - 1); r <= n - 1; ++r) {
      if (std::abs(q + r) > n - 1) continue;
      Point2 c{kSqrt3 * (q + 0.5 * r), 1.5 * r};
      tiles.push_back(regular_polygon(c, 6, rad(30)));
    }
  }
  BoardGraph g = from_polygons(tiles);
  g.default_site = use_site;
  return g;
}

BoardGraph generate_tri(int n, SiteType use_site) {
  require_positive(n, "tri size");
  const int cells = use_site == SiteType::Cell ? n : n - 1;
  const double h = kSqrt3 / 2;
  auto at = [&](int i, int j) { return Point2{i + 0.5 * j, j * h}; };
  BoardGraph g;
  if (cells == 0) {
    g = build_graph({at(0, 0)}, {});
  } else {
    Tiles tiles;
    for (int j = 0; j < cells; ++j) {
      for (int i = 0; i + j < cells; ++i) {
        tiles.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
        if (i + j + 1 < cells) tiles.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
      }
    }
    g = from_polygons(tiles);
  }
  g.default_site = use_site;
  return g;
}

std::vector<std::vector<Point2>> tile_patch(TilingKind kind, double x0, double x1, double y0, double y1) {
  switch (kind) {
    case TilingKind::Square: {
      Tiles out;
      for (int x = static_cast<int>(std::floor(x0)) - 1; x <= static_cast<int>(std::ceil(x1)); ++x) {
        for (int y = static_cast<int>(std::floor(y0)) - 1; y <= static_cast<int>(std::ceil(y1)); ++y) {
          keep_tile(out, {{double(x), double(y)}, {x + 1.0, double(y)}, {x + 1.0, y + 1.0}, {double(x), y + 1.0}}, x0, x1, y0, y1);
        }
      }
      return out;
    }
    case TilingKind::Hex: {
      Motif m;
      m.a = {kSqrt3, 0};
      m.b = {kSqrt3 / 2, 1.5};
      m.tiles = {{{0, 0}, 6, rad(30)}};
      return motif_patch(m, x0, x1, y0, y1);
    }
    case TilingKind::Tri: {
      const Point2 e1{1, 0}, e2{0.5, kSqrt3 / 2};
      int i0, i1, j0, j1;
      lattice_range(e1, e2, x0, x1, y0, y1, 2.0, i0, i1, j0, j1);
      Tiles out;
      for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
          keep_tile(out, {e1 * i + e2 * j, e1 * (i + 1) + e2 * j, e1 * i + e2 * (j + 1)}, x0, x1, y0, y1);
          keep_tile(out, {e1 * (i + 1) + e2 * j, e1 * (i + 1) + e2 * (j + 1), e1 * i + e2 * (j + 1)}, x0, x1, y0, y1);
        }
      }
      return out;
    }
    case TilingKind::T33336: return snub_hex_patch(x0, x1, y0, y1);
    case TilingKind::T33344: return elongated_tri_patch(x0, x1, y0, y1);
    case TilingKind::T33434: return snub_square_patch(x0, x1, y0, y1);
    default: {
      auto motif = lattice_motif(kind);
      if (!motif) fail(ErrorCode::UnsupportedTiling, "no tile patch for tiling " + std::string(to_string(kind)));
      return motif_patch(*motif, x0, x1, y0, y1);
    }
  }
}

BoardGraph generate_semiregular(TilingKind kind, int rings) {
  if (!is_semiregular(kind)) fail(ErrorCode::UnsupportedTiling, std::string(to_string(kind)) + " is not a semi-regular tiling");
  require_positive(rings, "tiling size");
  const double radius = rings * lattice_period(kind) * (1.0 + 1e-9) + kMergeEps;
  Tiles tiles;
  for (auto& t : tile_patch(kind, -radius, radius, -radius, radius)) {
    if (norm(vertex_average(t)) <= radius) tiles.push_back(std::move(t));
  }
  return from_polygons(tiles);
}

BoardGraph generate_concentric(const std::vector<int>& ring_counts) {
  if (ring_counts.empty()) fail(ErrorCode::InvalidRingSpec, "concentric board needs at least one ring");
  for (int k : ring_counts) {
    if (k < 1) fail(ErrorCode::InvalidRingSpec, "ring cell counts must be positive");
  }
  const bool disc = ring_counts[0] == 1;
  const std::size_t first_ring = disc ? 1 : 0;
  for (std::size_t i = first_ring; i < ring_counts.size(); ++i) {
    if (ring_counts[i] != ring_counts[first_ring]) {
      fail(ErrorCode::InvalidRingSpec, "every ring must hold the same number of cells (a leading 1 is a central disc)");
    }
    if (ring_counts[i] < 2) fail(ErrorCode::InvalidRingSpec, "annular rings need at least 2 cells");
  }
  const int sectors = first_ring < ring_counts.size() ? ring_counts[first_ring] : 4;
  const double inner = disc ? 1.0 : std::max(1.0, sectors / (2.0 * kPi));

  GraphParts parts;
  auto arc_point = [&](double r, int sector, int seg) {
    double a = 2.0 * kPi * (sector + static_cast<double>(seg) / kArcSegs) / sectors;
    return Point2{r * std::cos(a), r * std::sin(a)};
  };
  if (disc) {
    std::vector<int> cycle;
    for (int s = 0; s < sectors; ++s) {
      for (int k = 0; k < kArcSegs; ++k) {
        cycle.push_back(static_cast<int>(parts.points.size()));
        parts.points.push_back(arc_point(inner, s, k));
      }
    }
    parts.cells.push_back(std::move(cycle));
    parts.rings.push_back({0, 0, 1});
  }
  for (std::size_t ring = first_ring; ring < ring_counts.size(); ++ring) {
    const double r0 = inner + static_cast<double>(ring - first_ring);
    const double r1 = r0 + 1.0;
    for (int s = 0; s < sectors; ++s) {
      std::vector<int> cycle;
      for (int k = 0; k <= kArcSegs; ++k) {
        cycle.push_back(static_cast<int>(parts.points.size()));
        parts.points.push_back(arc_point(r1, s, k));
      }
      for (int k = kArcSegs; k >= 0; --k) {
        cycle.push_back(static_cast<int>(parts.points.size()));
        parts.points.push_back(arc_point(r0, s, k));
      }
      parts.cells.push_back(std::move(cycle));
      parts.rings.push_back({static_cast<int>(ring), s, sectors});
    }
  }
  BuildOptions options;
  options.faces = FaceMode::Given;
  return assemble(std::move(parts), options);
}

BoardGraph generate_brick(int rows, int cols) {
  require_positive(rows, "brick rows");
  require_positive(cols, "brick columns");
  Tiles bricks;
  auto rect = [](double x0, double x1, double y) {
    return std::vector<Point2>{{x0, y}, {x1, y}, {x1, y + 1}, {x0, y + 1}};
  };
  for (int r = 0; r < rows; ++r) {
    const double y = r;
    if (rows == 1) {
      for (int c = 0; c < cols; ++c) bricks.push_back(rect(2.0 * c, 2.0 * c + 2, y));
    } else if (r % 2 == 0) {
      for (int c = 0; c < cols; ++c) bricks.push_back(rect(2.0 * c, 2.0 * c + 2, y));
      bricks.push_back(rect(2.0 * cols, 2.0 * cols + 1, y));
    } else {
      bricks.push_back(rect(0.0, 1.0, y));
      for (int c = 0; c < cols; ++c) bricks.push_back(rect(2.0 * c + 1, 2.0 * c + 3, y));
    }
  }
  return from_polygons(split_sides(bricks));
}

BoardGraph generate(const TilingSpec& spec) {
  switch (spec.kind) {
    case TilingKind::Square:
      return spec.rows == spec.cols ? generate_square(spec.rows, spec.use_site)
                                    : generate_rectangle(spec.rows, spec.cols, spec.use_site);
    case TilingKind::Hex: return generate_hex(spec.rows, spec.use_site);
    case TilingKind::Tri: return generate_tri(spec.rows, spec.use_site);
    case TilingKind::Concentric: return generate_concentric(spec.ring_counts);
    case TilingKind::Brick: return generate_brick(spec.rows, spec.cols);
    default: {
      BoardGraph g = generate_semiregular(spec.kind, spec.rows);
      g.default_site = spec.use_site;
      return g;
    }
  }
}

}  // namespace boardforge

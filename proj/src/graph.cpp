#include "boardforge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "boardforge/error.hpp"

namespace boardforge {

int BoardGraph::count(SiteType t) const {
  switch (t) {
    case SiteType::Vertex: return static_cast<int>(vertices.size());
    case SiteType::Edge: return static_cast<int>(edges.size());
    case SiteType::Cell: return static_cast<int>(cells.size());
  }
  return 0;
}

Point2 BoardGraph::position(ElementId id) const {
  switch (id.type) {
    case SiteType::Vertex: return vertices[id.index].position;
    case SiteType::Edge: {
      const auto& e = edges[id.index];
      return (vertices[e.v0].position + vertices[e.v1].position) * 0.5;
    }
    case SiteType::Cell: return cells[id.index].centroid;
  }
  return {};
}

std::vector<Point2> BoardGraph::cell_polygon(int cell) const {
  std::vector<Point2> pts;
  pts.reserve(cells[cell].vertices.size());
  for (int v : cells[cell].vertices) pts.push_back(vertices[v].position);
  return pts;
}

std::optional<int> BoardGraph::find_edge(int a, int b) const {
  if (a < 0 || a >= count(SiteType::Vertex)) return std::nullopt;
  for (int e : vertices[a].edges) {
    if (edges[e].other(a) == b) return e;
  }
  return std::nullopt;
}

namespace {

// Groups values that lie within kMergeEps of a neighbour into one rank.
std::vector<int> cluster_ranks(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> rank(values.size());
  int r = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && values[order[i]] - values[order[i - 1]] > kMergeEps) ++r;
    rank[order[i]] = r;
  }
  return rank;
}

// Permutation (new -> old) ordering points by (y, x) with coincidence tolerance.
std::vector<int> canonical_order(const std::vector<Point2>& keys, const std::vector<std::vector<int>>* tiebreak = nullptr) {
  std::vector<double> xs(keys.size()), ys(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    xs[i] = keys[i].x;
    ys[i] = keys[i].y;
  }
  auto xr = cluster_ranks(xs);
  auto yr = cluster_ranks(ys);
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (yr[a] != yr[b]) return yr[a] < yr[b];
    if (xr[a] != xr[b]) return xr[a] < xr[b];
    if (tiebreak) return (*tiebreak)[a] < (*tiebreak)[b];
    return false;
  });
  return order;
}

struct PointMerger {
  std::unordered_map<long long, std::vector<int>> buckets;
  std::vector<Point2> reps;
  static constexpr double kBucket = 1e-4;

  static long long key(long long gx, long long gy) { return gx * 73856093LL ^ gy * 19349663LL; }

  int insert(Point2 p) {
    long long gx = static_cast<long long>(std::floor(p.x / kBucket));
    long long gy = static_cast<long long>(std::floor(p.y / kBucket));
    int best = -1;
    for (long long dx = -1; dx <= 1 && best < 0; ++dx) {
      for (long long dy = -1; dy <= 1 && best < 0; ++dy) {
        auto it = buckets.find(key(gx + dx, gy + dy));
        if (it == buckets.end()) continue;
        for (int idx : it->second) {
          if (coincident(reps[idx], p)) {
            best = idx;
            break;
          }
        }
      }
    }
    if (best >= 0) return best;
    reps.push_back(p);
    buckets[key(gx, gy)].push_back(static_cast<int>(reps.size()) - 1);
    return static_cast<int>(reps.size()) - 1;
  }
};

struct CrossingReport {
  std::vector<char> crossing;  // per edge
  std::optional<std::pair<int, int>> first_pair;
  std::optional<std::pair<int, int>> first_vertex_hit;  // (edge, vertex)
};

CrossingReport find_crossings(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges) {
  CrossingReport rep;
  rep.crossing.assign(edges.size(), 0);
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto minx = [&](int e) { return std::min(pts[edges[e].first].x, pts[edges[e].second].x); };
  auto maxx = [&](int e) { return std::max(pts[edges[e].first].x, pts[edges[e].second].x); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return minx(a) < minx(b); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    int a = order[i];
    const Point2 a0 = pts[edges[a].first], a1 = pts[edges[a].second];
    const double alo = std::min(a0.y, a1.y), ahi = std::max(a0.y, a1.y);
    const double ax = maxx(a);
    for (std::size_t j = i + 1; j < order.size() && minx(order[j]) <= ax + kMergeEps; ++j) {
      int b = order[j];
      const Point2 b0 = pts[edges[b].first], b1 = pts[edges[b].second];
      if (std::max(b0.y, b1.y) < alo - kMergeEps || std::min(b0.y, b1.y) > ahi + kMergeEps) continue;
      if (segments_cross(a0, a1, b0, b1)) {
        rep.crossing[a] = rep.crossing[b] = 1;
        if (!rep.first_pair) rep.first_pair = std::make_pair(std::min(a, b), std::max(a, b));
      }
    }
  }
  // Edges passing through a vertex.
  std::vector<int> vorder(pts.size());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) { return pts[a].x < pts[b].x; });
  std::vector<double> vx(pts.size());
  for (std::size_t i = 0; i < vorder.size(); ++i) vx[i] = pts[vorder[i]].x;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Point2 p0 = pts[edges[e].first], p1 = pts[edges[e].second];
    auto lo = std::lower_bound(vx.begin(), vx.end(), std::min(p0.x, p1.x) - kMergeEps);
    auto hi = std::upper_bound(vx.begin(), vx.end(), std::max(p0.x, p1.x) + kMergeEps);
    for (auto it = lo; it != hi; ++it) {
      int v = vorder[it - vx.begin()];
      if (v == edges[e].first || v == edges[e].second) continue;
      if (on_segment_interior(pts[v], p0, p1)) {
        rep.crossing[e] = 1;
        if (!rep.first_vertex_hit) rep.first_vertex_hit = std::make_pair(static_cast<int>(e), v);
        break;
      }
    }
  }
  return rep;
}

// Sorted-by-x index over points for bounding-box queries.
class PointIndex {
 public:
  explicit PointIndex(const std::vector<Point2>& pts) : pts_(pts), order_(pts.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) { return pts_[a].x < pts_[b].x; });
    xs_.reserve(order_.size());
    for (int i : order_) xs_.push_back(pts_[i].x);
  }

  template <typename Fn>
  void for_each_in_box(double x0, double x1, double y0, double y1, Fn&& fn) const {
    auto lo = std::lower_bound(xs_.begin(), xs_.end(), x0);
    auto hi = std::upper_bound(xs_.begin(), xs_.end(), x1);
    for (auto it = lo; it != hi; ++it) {
      int i = order_[it - xs_.begin()];
      if (pts_[i].y >= y0 && pts_[i].y <= y1) fn(i);
    }
  }

 private:
  const std::vector<Point2>& pts_;
  std::vector<int> order_;
  std::vector<double> xs_;
};

struct Box {
  double x0, x1, y0, y1;
};

Box bounding_box(std::span<const Point2> ring) {
  Box b{ring[0].x, ring[0].x, ring[0].y, ring[0].y};
  for (auto p : ring) {
    b.x0 = std::min(b.x0, p.x);
    b.x1 = std::max(b.x1, p.x);
    b.y0 = std::min(b.y0, p.y);
    b.y1 = std::max(b.y1, p.y);
  }
  return b;
}

// Bounded faces of the embedding restricted to edges with usable[e] set.
std::vector<std::vector<int>> trace_faces(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges,
                                          const std::vector<char>& usable) {
  const int nv = static_cast<int>(pts.size());
  const int ne = static_cast<int>(edges.size());
  // Half-edge h = 2e + d; d = 0 runs first -> second.
  auto origin = [&](int h) { return (h & 1) ? edges[h >> 1].second : edges[h >> 1].first; };
  auto target = [&](int h) { return (h & 1) ? edges[h >> 1].first : edges[h >> 1].second; };

  std::vector<std::vector<int>> out_of(nv);
  for (int e = 0; e < ne; ++e) {
    if (!usable[e]) continue;
    out_of[edges[e].first].push_back(2 * e);
    out_of[edges[e].second].push_back(2 * e + 1);
  }
  std::vector<int> pos(2 * ne, -1);
  for (int v = 0; v < nv; ++v) {
    auto& list = out_of[v];
    std::vector<double> ang(list.size());
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      double aa = wrap_positive(heading_of(pts[target(a)] - pts[v]));
      double bb = wrap_positive(heading_of(pts[target(b)] - pts[v]));
      if (aa != bb) return aa < bb;
      return a < b;
    });
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
  }
  auto next = [&](int h) {
    int v = target(h);
    int twin = h ^ 1;
    const auto& list = out_of[v];
    int deg = static_cast<int>(list.size());
    return list[(pos[twin] - 1 + deg) % deg];
  };

  std::vector<std::vector<int>> faces;
  std::vector<char> seen(2 * ne, 0);
  for (int h0 = 0; h0 < 2 * ne; ++h0) {
    if (!usable[h0 >> 1] || seen[h0]) continue;
    std::vector<int> cycle;
    int h = h0;
    while (!seen[h]) {
      seen[h] = 1;
      cycle.push_back(h);
      h = next(h);
    }
    // Drop spurs (an edge walked out and straight back).
    std::vector<int> stack;
    for (int x : cycle) {
      if (!stack.empty() && stack.back() == (x ^ 1)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    while (stack.size() >= 2 && stack.front() == (stack.back() ^ 1)) {
      stack.pop_back();
      stack.erase(stack.begin());
    }
    if (stack.size() < 3) continue;
    std::vector<int> verts;
    std::vector<Point2> ring;
    for (int x : stack) {
      verts.push_back(origin(x));
      ring.push_back(pts[origin(x)]);
    }
    if (signed_area(ring) > kMergeEps) faces.push_back(std::move(verts));
  }
  return faces;
}

}  // namespace

BoardGraph assemble(GraphParts parts, const BuildOptions& options) {
  for (auto p : parts.points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::InvalidElement, "vertex position is not finite");
  }
  // Merge coincident points.
  PointMerger merger;
  std::vector<int> remap(parts.points.size());
  for (std::size_t i = 0; i < parts.points.size(); ++i) remap[i] = merger.insert(parts.points[i]);
  std::vector<Point2> pts = std::move(merger.reps);
  const int npts = static_cast<int>(parts.points.size());

  std::set<std::pair<int, int>> edge_set;
  std::vector<std::pair<int, int>> edges;
  auto add_edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (edge_set.insert({a, b}).second) edges.push_back({a, b});
  };
  for (auto [a, b] : parts.edges) {
    if (a < 0 || b < 0 || a >= npts || b >= npts) {
      fail(ErrorCode::InvalidElement, "edge references vertex outside 0.." + std::to_string(npts - 1));
    }
    int ra = remap[a], rb = remap[b];
    if (ra == rb) {
      fail(ErrorCode::DegenerateEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ") collapses to one vertex");
    }
    add_edge(ra, rb);
  }

  std::vector<std::vector<int>> cycles;
  std::vector<RingSector> cycle_rings;
  if (options.faces == FaceMode::Given) {
    for (std::size_t c = 0; c < parts.cells.size(); ++c) {
      std::vector<int> cyc;
      for (int v : parts.cells[c]) {
        if (v < 0 || v >= npts) fail(ErrorCode::InvalidElement, "cell references vertex outside range");
        int r = remap[v];
        if (cyc.empty() || cyc.back() != r) cyc.push_back(r);
      }
      while (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
      if (cyc.size() < 3) continue;
      for (std::size_t i = 0; i < cyc.size(); ++i) add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      cycles.push_back(std::move(cyc));
      if (!parts.rings.empty()) cycle_rings.push_back(parts.rings[c]);
    }
  }

  auto crossings = find_crossings(pts, edges);
  if (!options.allow_crossings) {
    if (crossings.first_pair) {
      auto [a, b] = *crossings.first_pair;
      auto describe = [&](int e) {
        return "(" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) + ")";
      };
      fail(options.overlap_error ? ErrorCode::NonPlanarOverlap : ErrorCode::NonPlanarInput,
           "edges " + describe(a) + " and " + describe(b) + " cross");
    }
    if (crossings.first_vertex_hit) {
      auto [e, v] = *crossings.first_vertex_hit;
      fail(options.overlap_error ? ErrorCode::NonPlanarOverlap : ErrorCode::NonPlanarInput,
           "edge (" + std::to_string(edges[e].first) + "," + std::to_string(edges[e].second) + ") passes through vertex " +
               std::to_string(v));
    }
  }

  if (options.faces == FaceMode::Infer) {
    std::vector<char> usable(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) usable[e] = !crossings.crossing[e];
    auto faces = trace_faces(pts, edges, usable);
    std::vector<Point2> probes;  // anything inside a face disqualifies it
    std::vector<char> touched(pts.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (crossings.crossing[e]) {
        probes.push_back((pts[edges[e].first] + pts[edges[e].second]) * 0.5);
      } else {
        touched[edges[e].first] = touched[edges[e].second] = 1;
      }
    }
    for (std::size_t v = 0; v < pts.size(); ++v) {
      if (!touched[v]) probes.push_back(pts[v]);
    }
    for (auto p : options.voids) probes.push_back(p);
    PointIndex probe_index(probes);
    PointIndex vertex_index(pts);
    for (auto& face : faces) {
      std::vector<Point2> ring;
      for (int v : face) ring.push_back(pts[v]);
      Box b = bounding_box(ring);
      bool blocked = false;
      auto check = [&](const std::vector<Point2>& src, int i) {
        if (!blocked && locate(src[i], ring) == Containment::Inside) blocked = true;
      };
      probe_index.for_each_in_box(b.x0, b.x1, b.y0, b.y1, [&](int i) { check(probes, i); });
      // A separate component nested inside the face.
      vertex_index.for_each_in_box(b.x0, b.x1, b.y0, b.y1, [&](int i) { check(pts, i); });
      if (!blocked) cycles.push_back(std::move(face));
    }
  }

  // Canonical vertex numbering.
  const int nv = static_cast<int>(pts.size());
  auto vorder = canonical_order(pts);
  std::vector<int> vnew(nv);
  for (int i = 0; i < nv; ++i) vnew[vorder[i]] = i;

  BoardGraph g;
  g.vertices.resize(nv);
  for (int i = 0; i < nv; ++i) g.vertices[i].position = pts[vorder[i]];

  // Canonical edge numbering by midpoint.
  std::vector<std::pair<int, int>> ren_edges;
  ren_edges.reserve(edges.size());
  std::vector<Point2> mids;
  for (auto [a, b] : edges) {
    int na = vnew[a], nb = vnew[b];
    if (na > nb) std::swap(na, nb);
    ren_edges.push_back({na, nb});
    mids.push_back((g.vertices[na].position + g.vertices[nb].position) * 0.5);
  }
  std::vector<std::vector<int>> edge_tie;
  for (auto [a, b] : ren_edges) edge_tie.push_back({a, b});
  auto eorder = canonical_order(mids, &edge_tie);
  g.edges.resize(ren_edges.size());
  std::map<std::pair<int, int>, int> edge_lookup;
  for (std::size_t i = 0; i < eorder.size(); ++i) {
    auto [a, b] = ren_edges[eorder[i]];
    g.edges[i].v0 = a;
    g.edges[i].v1 = b;
    edge_lookup[{a, b}] = static_cast<int>(i);
  }

  // Cells: counter-clockwise, rotated to start at the lowest vertex.
  std::vector<std::vector<int>> ccells;
  std::vector<Point2> centroids;
  for (auto& cyc : cycles) {
    std::vector<int> c;
    std::vector<Point2> ring;
    for (int v : cyc) {
      c.push_back(vnew[v]);
      ring.push_back(g.vertices[vnew[v]].position);
    }
    if (signed_area(ring) < 0) std::reverse(c.begin(), c.end());
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    centroids.push_back(vertex_average(ring));
    ccells.push_back(std::move(c));
  }
  auto corder = canonical_order(centroids, &ccells);
  g.cells.resize(ccells.size());
  for (std::size_t i = 0; i < corder.size(); ++i) {
    auto& cell = g.cells[i];
    cell.vertices = ccells[corder[i]];
    cell.centroid = centroids[corder[i]];
    const std::size_t k = cell.vertices.size();
    for (std::size_t j = 0; j < k; ++j) {
      int a = cell.vertices[j], b = cell.vertices[(j + 1) % k];
      cell.edges.push_back(edge_lookup.at({std::min(a, b), std::max(a, b)}));
    }
  }
  if (!cycle_rings.empty()) {
    g.rings.resize(corder.size());
    for (std::size_t i = 0; i < corder.size(); ++i) g.rings[i] = cycle_rings[corder[i]];
  }

  // Cross references.
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.vertices[g.edges[e].v0].edges.push_back(static_cast<int>(e));
    g.vertices[g.edges[e].v1].edges.push_back(static_cast<int>(e));
  }
  for (std::size_t c = 0; c < g.cells.size(); ++c) {
    for (int v : g.cells[c].vertices) g.vertices[v].cells.push_back(static_cast<int>(c));
    for (int e : g.cells[c].edges) g.edges[e].cells.push_back(static_cast<int>(c));
  }
  for (int v = 0; v < nv; ++v) {
    auto& vr = g.vertices[v];
    const Point2 at = vr.position;
    std::sort(vr.edges.begin(), vr.edges.end(), [&](int a, int b) {
      double aa = wrap_positive(heading_of(g.vertices[g.edges[a].other(v)].position - at));
      double bb = wrap_positive(heading_of(g.vertices[g.edges[b].other(v)].position - at));
      if (aa != bb) return aa < bb;
      return a < b;
    });
    std::sort(vr.cells.begin(), vr.cells.end());
  }
  for (auto& e : g.edges) std::sort(e.cells.begin(), e.cells.end());
  return g;
}

BoardGraph build_graph(const std::vector<Point2>& positions, const std::vector<std::pair<int, int>>& edges) {
  GraphParts parts;
  parts.points = positions;
  parts.edges = edges;
  return assemble(std::move(parts), BuildOptions{});
}

GraphParts to_parts(const BoardGraph& graph) {
  GraphParts parts;
  for (const auto& v : graph.vertices) parts.points.push_back(v.position);
  for (const auto& e : graph.edges) parts.edges.push_back({e.v0, e.v1});
  for (const auto& c : graph.cells) parts.cells.push_back(c.vertices);
  parts.rings = graph.rings;
  return parts;
}

BoardGraph infer_faces(const BoardGraph& graph) {
  GraphParts parts = to_parts(graph);
  parts.cells.clear();
  parts.rings.clear();
  BuildOptions options;
  options.allow_crossings = true;
  BoardGraph out = assemble(std::move(parts), options);
  out.default_site = graph.default_site;
  return out;
}

std::vector<Point2> find_voids(const BoardGraph& graph) {
  GraphParts parts = to_parts(graph);
  std::vector<char> usable(parts.edges.size());
  auto crossings = find_crossings(parts.points, parts.edges);
  for (std::size_t e = 0; e < usable.size(); ++e) usable[e] = !crossings.crossing[e];
  auto faces = trace_faces(parts.points, parts.edges, usable);
  std::set<std::vector<int>> known;
  for (const auto& c : graph.cells) {
    auto key = c.vertices;
    std::sort(key.begin(), key.end());
    known.insert(key);
  }
  std::vector<Point2> voids;
  for (auto& face : faces) {
    auto key = face;
    std::sort(key.begin(), key.end());
    if (known.count(key)) continue;
    std::vector<Point2> ring;
    for (int v : face) ring.push_back(parts.points[v]);
    voids.push_back(interior_point(ring));
  }
  return voids;
}

bool has_crossings(const BoardGraph& graph) {
  GraphParts parts = to_parts(graph);
  auto rep = find_crossings(parts.points, parts.edges);
  return rep.first_pair.has_value() || rep.first_vertex_hit.has_value();
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidIndex: return "InvalidIndex";
    case ViolationKind::DegenerateEdge: return "DegenerateEdge";
    case ViolationKind::DegenerateCell: return "DegenerateCell";
    case ViolationKind::CrossRefMismatch: return "CrossRefMismatch";
    case ViolationKind::AngularOrder: return "AngularOrder";
    case ViolationKind::TooManyIncidentCells: return "TooManyIncidentCells";
    case ViolationKind::NonPositiveArea: return "NonPositiveArea";
    case ViolationKind::RepeatedVertex: return "RepeatedVertex";
    case ViolationKind::BoundaryMismatch: return "BoundaryMismatch";
    case ViolationKind::CentroidMismatch: return "CentroidMismatch";
    case ViolationKind::ContainsElement: return "ContainsElement";
    case ViolationKind::NonFinitePosition: return "NonFinitePosition";
  }
  return "?";
}

namespace {

bool contains_value(const std::vector<int>& list, int x) { return std::find(list.begin(), list.end(), x) != list.end(); }

}  // namespace

std::vector<Violation> validate(const BoardGraph& g) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind k, SiteType t, int i, std::string detail) {
    out.push_back({k, {t, i}, std::move(detail)});
  };
  const int nv = g.count(SiteType::Vertex), ne = g.count(SiteType::Edge), nc = g.count(SiteType::Cell);

  for (int v = 0; v < nv; ++v) {
    const auto& vr = g.vertices[v];
    if (!std::isfinite(vr.position.x) || !std::isfinite(vr.position.y)) {
      report(ViolationKind::NonFinitePosition, SiteType::Vertex, v, "position is not finite");
    }
    double prev = -1.0;
    for (int e : vr.edges) {
      if (e < 0 || e >= ne) {
        report(ViolationKind::InvalidIndex, SiteType::Vertex, v, "lists missing edge " + std::to_string(e));
        continue;
      }
      if (g.edges[e].v0 != v && g.edges[e].v1 != v) {
        report(ViolationKind::CrossRefMismatch, SiteType::Vertex, v, "lists edge " + std::to_string(e) + " without being its endpoint");
        continue;
      }
      int w = g.edges[e].other(v);
      if (w < 0 || w >= nv) continue;
      double a = wrap_positive(heading_of(g.vertices[w].position - vr.position));
      if (a <= prev) report(ViolationKind::AngularOrder, SiteType::Vertex, v, "incident edges not counter-clockwise");
      prev = a;
    }
    for (int c : vr.cells) {
      if (c < 0 || c >= nc) {
        report(ViolationKind::InvalidIndex, SiteType::Vertex, v, "lists missing cell " + std::to_string(c));
      } else if (!contains_value(g.cells[c].vertices, v)) {
        report(ViolationKind::CrossRefMismatch, SiteType::Vertex, v, "lists cell " + std::to_string(c) + " which omits it");
      }
    }
  }

  for (int e = 0; e < ne; ++e) {
    const auto& er = g.edges[e];
    if (er.v0 < 0 || er.v0 >= nv || er.v1 < 0 || er.v1 >= nv) {
      report(ViolationKind::InvalidIndex, SiteType::Edge, e, "endpoint out of range");
      continue;
    }
    if (er.v0 == er.v1) report(ViolationKind::DegenerateEdge, SiteType::Edge, e, "endpoints coincide");
    for (int v : {er.v0, er.v1}) {
      if (!contains_value(g.vertices[v].edges, e)) {
        report(ViolationKind::CrossRefMismatch, SiteType::Edge, e, "endpoint " + std::to_string(v) + " omits the edge");
      }
    }
    if (er.cells.size() > 2) report(ViolationKind::TooManyIncidentCells, SiteType::Edge, e, "bounds more than two cells");
    for (int c : er.cells) {
      if (c < 0 || c >= nc) {
        report(ViolationKind::InvalidIndex, SiteType::Edge, e, "lists missing cell " + std::to_string(c));
      } else if (!contains_value(g.cells[c].edges, e)) {
        report(ViolationKind::CrossRefMismatch, SiteType::Edge, e, "lists cell " + std::to_string(c) + " which omits it");
      }
    }
  }

  std::vector<Point2> vpos;
  for (const auto& v : g.vertices) vpos.push_back(v.position);
  std::vector<Point2> mids;
  for (const auto& e : g.edges) {
    if (e.v0 >= 0 && e.v0 < nv && e.v1 >= 0 && e.v1 < nv) {
      mids.push_back((vpos[e.v0] + vpos[e.v1]) * 0.5);
    } else {
      mids.push_back({std::nan(""), std::nan("")});
    }
  }
  PointIndex vindex(vpos);
  PointIndex mindex(mids);

  for (int c = 0; c < nc; ++c) {
    const auto& cr = g.cells[c];
    const std::size_t k = cr.vertices.size();
    if (k < 3 || cr.edges.size() != k) {
      report(ViolationKind::DegenerateCell, SiteType::Cell, c,
             "boundary has " + std::to_string(k) + " vertices and " + std::to_string(cr.edges.size()) + " edges");
      continue;
    }
    bool indices_ok = true;
    for (int v : cr.vertices) indices_ok = indices_ok && v >= 0 && v < nv;
    for (int e : cr.edges) indices_ok = indices_ok && e >= 0 && e < ne;
    if (!indices_ok) {
      report(ViolationKind::InvalidIndex, SiteType::Cell, c, "boundary references missing element");
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto& er = g.edges[cr.edges[i]];
      int a = cr.vertices[i], b = cr.vertices[(i + 1) % k];
      if (!((er.v0 == a && er.v1 == b) || (er.v0 == b && er.v1 == a))) {
        report(ViolationKind::BoundaryMismatch, SiteType::Cell, c, "edge " + std::to_string(cr.edges[i]) + " does not join its boundary vertices");
      }
      if (!contains_value(er.cells, c)) {
        report(ViolationKind::CrossRefMismatch, SiteType::Cell, c, "lists edge " + std::to_string(cr.edges[i]) + " which omits it");
      }
      if (!contains_value(g.vertices[cr.vertices[i]].cells, c)) {
        report(ViolationKind::CrossRefMismatch, SiteType::Cell, c, "lists vertex " + std::to_string(cr.vertices[i]) + " which omits it");
      }
    }
    std::vector<int> sorted = cr.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      report(ViolationKind::RepeatedVertex, SiteType::Cell, c, "boundary repeats a vertex");
    }
    auto ring = g.cell_polygon(c);
    if (signed_area(ring) <= 0) report(ViolationKind::NonPositiveArea, SiteType::Cell, c, "boundary is not counter-clockwise");
    if (distance(vertex_average(ring), cr.centroid) > kMergeEps) {
      report(ViolationKind::CentroidMismatch, SiteType::Cell, c, "centroid is not the vertex average");
    }
    Box b = bounding_box(ring);
    bool contained = false;
    vindex.for_each_in_box(b.x0, b.x1, b.y0, b.y1, [&](int v) {
      if (!contained && locate(vpos[v], ring) == Containment::Inside) contained = true;
    });
    mindex.for_each_in_box(b.x0, b.x1, b.y0, b.y1, [&](int e) {
      if (!contained && !contains_value(cr.edges, e) && locate(mids[e], ring) == Containment::Inside) contained = true;
    });
    if (contained) report(ViolationKind::ContainsElement, SiteType::Cell, c, "interior contains another vertex or edge");
  }
  return out;
}

int component_count(const BoardGraph& g) {
  const int n = g.count(SiteType::Vertex);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (const auto& e : g.edges) {
    int a = find(e.v0), b = find(e.v1);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

double total_cell_area(const BoardGraph& g) {
  double sum = 0.0;
  for (int c = 0; c < g.count(SiteType::Cell); ++c) sum += std::abs(signed_area(g.cell_polygon(c)));
  return sum;
}

}  // namespace boardforge

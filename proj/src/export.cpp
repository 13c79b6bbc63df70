#include "boardforge/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include <json.hpp>

#include "boardforge/analysis.hpp"
#include "boardforge/error.hpp"

namespace boardforge {

namespace {

using Json = nlohmann::ordered_json;

std::shared_ptr<const Analysis> analysis_of(const BoardGraph& g) { return g.analysis ? g.analysis : analyze(g); }

Json neighbor_table(const NeighborLists& lists) {
  Json arr = Json::array();
  for (const auto& l : lists) arr.push_back(l);
  return arr;
}

std::string radial_direction(const Radial& r) {
  for (Direction d : r.labels) {
    if (is_wind(d)) return std::string(to_string(d));
  }
  if (!r.labels.empty()) return std::string(to_string(r.labels.front()));
  return std::string(to_string(r.relation));
}

// Rebuilds cross references while keeping the given numbering.
BoardGraph link(std::vector<Point2> points, const std::vector<std::pair<int, int>>& edges,
                const std::vector<std::vector<int>>& cells) {
  BoardGraph g;
  const int nv = static_cast<int>(points.size());
  g.vertices.resize(nv);
  for (int i = 0; i < nv; ++i) g.vertices[i].position = points[i];
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) fail(ErrorCode::InvalidElement, "edge references an invalid vertex");
    g.edges.push_back({std::min(a, b), std::max(a, b), {}});
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    g.vertices[g.edges[e].v0].edges.push_back(static_cast<int>(e));
    g.vertices[g.edges[e].v1].edges.push_back(static_cast<int>(e));
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellRec rec;
    rec.vertices = cells[c];
    std::vector<Point2> ring;
    for (int v : rec.vertices) {
      if (v < 0 || v >= nv) fail(ErrorCode::InvalidElement, "cell references an invalid vertex");
      ring.push_back(points[v]);
    }
    for (std::size_t k = 0; k < rec.vertices.size(); ++k) {
      auto e = g.find_edge(rec.vertices[k], rec.vertices[(k + 1) % rec.vertices.size()]);
      if (!e) fail(ErrorCode::InvalidElement, "cell side is not an edge");
      rec.edges.push_back(*e);
      g.edges[*e].cells.push_back(static_cast<int>(c));
    }
    rec.centroid = vertex_average(ring);
    for (int v : rec.vertices) g.vertices[v].cells.push_back(static_cast<int>(c));
    g.cells.push_back(std::move(rec));
  }
  for (int v = 0; v < nv; ++v) {
    auto& vr = g.vertices[v];
    auto angle = [&](int e) { return wrap_positive(heading_of(g.vertices[g.edges[e].other(v)].position - vr.position)); };
    std::sort(vr.edges.begin(), vr.edges.end(), [&](int a, int b) {
      double aa = angle(a), bb = angle(b);
      return aa != bb ? aa < bb : a < b;
    });
    std::sort(vr.cells.begin(), vr.cells.end());
  }
  for (auto& e : g.edges) std::sort(e.cells.begin(), e.cells.end());
  return g;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", stable_number(std::round(x * 1e4) / 1e4));
  return buf;
}

const char* kRelationColours[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#7f7f7f"};

}  // namespace

double stable_number(double x) {
  double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

std::string to_json(const BoardGraph& graph) {
  auto analysis = analysis_of(graph);
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["defaultSite"] = to_string(graph.default_site);
  Json vs = Json::array();
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const Point2 p = graph.vertices[i].position;
    // Coordinates are written exactly so that an import rebuilds the same geometry.
    vs.push_back({{"id", i}, {"x", p.x == 0.0 ? 0.0 : p.x}, {"y", p.y == 0.0 ? 0.0 : p.y}});
  }
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    es.push_back({{"id", i}, {"v0", graph.edges[i].v0}, {"v1", graph.edges[i].v1}});
  }
  j["edges"] = std::move(es);
  Json cs = Json::array();
  for (std::size_t i = 0; i < graph.cells.size(); ++i) {
    const auto& c = graph.cells[i];
    Json cell = {{"id", i},
                 {"vertexIds", c.vertices},
                 {"centroidX", stable_number(c.centroid.x)},
                 {"centroidY", stable_number(c.centroid.y)}};
    if (graph.is_concentric()) {
      cell["ring"] = graph.rings[i].ring;
      cell["sector"] = graph.rings[i].sector;
      cell["sectors"] = graph.rings[i].sectors;
    }
    cs.push_back(std::move(cell));
  }
  j["cells"] = std::move(cs);

  Json rel;
  for (SiteType t : kAllSiteTypes) {
    Json per;
    for (RelationType r : kAllRelations) per[std::string(to_string(r))] = neighbor_table(analysis->relations.table(t, r));
    rel[std::string(to_string(t))] = std::move(per);
  }
  j["relations"] = std::move(rel);

  Json dirs;
  for (SiteType t : kAllSiteTypes) {
    Json arr = Json::array();
    for (const auto& m : analysis->directions.labels[static_cast<int>(t)]) {
      Json entry = Json::object();
      for (auto [d, n] : m) entry[std::string(to_string(d))] = n;
      arr.push_back(std::move(entry));
    }
    dirs[std::string(to_string(t))] = std::move(arr);
  }
  j["directions"] = std::move(dirs);

  Json rads = Json::array();
  for (const auto& r : analysis->radials.radials) {
    Json labels = Json::array();
    for (Direction d : r.labels) labels.push_back(to_string(d));
    rads.push_back({{"origin", r.origin.index},
                    {"siteType", to_string(r.origin.type)},
                    {"direction", radial_direction(r)},
                    {"relation", to_string(r.relation)},
                    {"labels", std::move(labels)},
                    {"path", r.path},
                    {"branch", r.branch}});
  }
  j["radials"] = std::move(rads);
  return j.dump(2) + "\n";
}

BoardGraph from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::IoError, std::string("not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schemaVersion").get<std::string>() != kSchemaVersion) {
      fail(ErrorCode::IoError, "unsupported schema version " + j.at("schemaVersion").get<std::string>());
    }
    std::vector<Point2> points;
    for (const auto& v : j.at("vertices")) points.push_back({v.at("x").get<double>(), v.at("y").get<double>()});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at("v0").get<int>(), e.at("v1").get<int>()});
    std::vector<std::vector<int>> cells;
    std::vector<RingSector> rings;
    for (const auto& c : j.at("cells")) {
      cells.push_back(c.at("vertexIds").get<std::vector<int>>());
      if (c.contains("ring")) {
        rings.push_back({c.at("ring").get<int>(), c.at("sector").get<int>(), c.value("sectors", 1)});
      }
    }
    BoardGraph g = link(std::move(points), edges, cells);
    if (rings.size() == g.cells.size()) g.rings = std::move(rings);
    auto site = parse_site_type(j.value("defaultSite", std::string("Cell")));
    if (!site) fail(ErrorCode::IoError, "unknown defaultSite");
    g.default_site = *site;
    g.analysis = analyze(g);
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::IoError, std::string("malformed board JSON: ") + e.what());
  }
}

std::string to_svg(const BoardGraph& graph, const SvgOptions& options) {
  double x0 = std::numeric_limits<double>::max(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& v : graph.vertices) {
    x0 = std::min(x0, v.position.x);
    x1 = std::max(x1, v.position.x);
    y0 = std::min(y0, v.position.y);
    y1 = std::max(y1, v.position.y);
  }
  if (graph.vertices.empty()) x0 = x1 = y0 = y1 = 0;
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double margin = 0.05 * std::max(span, 1.0);
  const double w = x1 - x0 + 2 * margin, h = y1 - y0 + 2 * margin;
  auto X = [&](double x) { return fmt(x - x0 + margin); };
  auto Y = [&](double y) { return fmt(y1 + margin - y); };

  double typical = 1.0;
  if (!graph.edges.empty()) {
    std::vector<double> lens;
    for (const auto& e : graph.edges) lens.push_back(distance(graph.vertices[e.v0].position, graph.vertices[e.v1].position));
    std::nth_element(lens.begin(), lens.begin() + lens.size() / 2, lens.end());
    typical = lens[lens.size() / 2];
  }
  const double stroke = typical * 0.04;

  std::string s;
  const double px = 800.0;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\" width=\"" +
       fmt(w >= h ? px : px * w / h) + "\" height=\"" + fmt(h >= w ? px : px * h / w) + "\">\n";
  s += "<g id=\"cells\" fill=\"#f3ead8\" stroke=\"none\">\n";
  for (std::size_t c = 0; c < graph.cells.size(); ++c) {
    s += "<polygon points=\"";
    bool first = true;
    for (int v : graph.cells[c].vertices) {
      if (!first) s += ' ';
      first = false;
      s += X(graph.vertices[v].position.x) + "," + Y(graph.vertices[v].position.y);
    }
    s += "\"/>\n";
  }
  s += "</g>\n<g id=\"edges\" stroke=\"#333333\" stroke-width=\"" + fmt(stroke) + "\" stroke-linecap=\"round\">\n";
  for (const auto& e : graph.edges) {
    const Point2 a = graph.vertices[e.v0].position, b = graph.vertices[e.v1].position;
    s += "<line x1=\"" + X(a.x) + "\" y1=\"" + Y(a.y) + "\" x2=\"" + X(b.x) + "\" y2=\"" + Y(b.y) + "\"/>\n";
  }
  s += "</g>\n<g id=\"vertices\" fill=\"#333333\">\n";
  for (const auto& v : graph.vertices) {
    s += "<circle cx=\"" + X(v.position.x) + "\" cy=\"" + Y(v.position.y) + "\" r=\"" + fmt(stroke * 1.5) + "\"/>\n";
  }
  s += "</g>\n";

  if (options.focus && graph.valid(*options.focus) && (options.relations || options.radials || options.directions)) {
    auto analysis = analysis_of(graph);
    const ElementId f = *options.focus;
    const Point2 at = graph.position(f);
    if (options.relations) {
      s += "<g id=\"relations\" stroke-width=\"" + fmt(stroke * 1.5) + "\" fill=\"none\">\n";
      // Narrower relations are drawn last so they stay visible.
      const RelationType order[] = {RelationType::All, RelationType::Adjacent, RelationType::OffDiagonal,
                                    RelationType::Diagonal, RelationType::Orthogonal};
      for (RelationType r : order) {
        for (int n : analysis->relations.neighbors(f.type, r, f.index)) {
          const Point2 b = graph.position({f.type, n});
          s += "<line class=\"" + std::string(to_string(r)) + "\" stroke=\"" + kRelationColours[static_cast<int>(r)] +
               "\" x1=\"" + X(at.x) + "\" y1=\"" + Y(at.y) + "\" x2=\"" + X(b.x) + "\" y2=\"" + Y(b.y) + "\"/>\n";
        }
      }
      s += "</g>\n";
    }
    if (options.radials && f.type == analysis->radials.site) {
      s += "<g id=\"radials\" stroke=\"#e6550d\" stroke-width=\"" + fmt(stroke * 2) + "\" fill=\"none\">\n";
      for (int k : analysis->radials.by_origin[f.index]) {
        const Radial& r = analysis->radials.radials[k];
        s += "<polyline class=\"" + radial_direction(r) + "\" points=\"" + X(at.x) + "," + Y(at.y);
        for (int n : r.path) {
          const Point2 p = graph.position({f.type, n});
          s += " " + X(p.x) + "," + Y(p.y);
        }
        s += "\"/>\n";
      }
      s += "</g>\n";
    }
    if (options.directions) {
      s += "<g id=\"directions\" fill=\"#08519c\" font-family=\"sans-serif\" font-size=\"" + fmt(typical * 0.22) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
      for (auto [d, n] : analysis->directions.labels[static_cast<int>(f.type)][f.index]) {
        const Point2 b = graph.position({f.type, n});
        const Point2 m = at + (b - at) * 0.6;
        s += "<text x=\"" + X(m.x) + "\" y=\"" + Y(m.y) + "\">" + std::string(to_string(d)) + "</text>\n";
      }
      s += "</g>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace boardforge

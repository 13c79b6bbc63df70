#include "boardforge/relations.hpp"

#include <algorithm>

namespace boardforge {

namespace {

constexpr int kAdj = static_cast<int>(RelationType::Adjacent);
constexpr int kOrth = static_cast<int>(RelationType::Orthogonal);
constexpr int kDiag = static_cast<int>(RelationType::Diagonal);
constexpr int kOff = static_cast<int>(RelationType::OffDiagonal);
constexpr int kAll = static_cast<int>(RelationType::All);

void normalize(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

// Maximally opposed candidates, kept only when the opposition exceeds a right angle.
template <typename T>
void keep_maximal(std::vector<std::pair<double, T>>& scored, std::vector<T>& out) {
  if (scored.empty()) return;
  double best = 0.0;
  for (auto& [o, _] : scored) best = std::max(best, o);
  if (best <= kPi / 2 + kAngleTol) return;
  for (auto& [o, t] : scored) {
    if (o >= best - kAngleTol) out.push_back(t);
  }
}

struct DiagonalFinds {
  std::vector<std::vector<std::pair<int, ElementId>>> found;
  explicit DiagonalFinds(std::size_t n) : found(n) {}
  void add(int a, int b, ElementId pivot) {
    found[a].push_back({b, pivot});
    found[b].push_back({a, pivot});
  }
};

void finalize_diagonals(DiagonalFinds& finds, NeighborLists& lists, std::vector<std::vector<ElementId>>& pivots) {
  lists.assign(finds.found.size(), {});
  pivots.assign(finds.found.size(), {});
  for (std::size_t i = 0; i < finds.found.size(); ++i) {
    auto& f = finds.found[i];
    std::sort(f.begin(), f.end());
    for (auto& [j, pivot] : f) {
      if (!lists[i].empty() && lists[i].back() == j) continue;
      lists[i].push_back(j);
      pivots[i].push_back(pivot);
    }
  }
}

void cell_relations(const BoardGraph& g, RelationTable& rt) {
  const int nc = g.count(SiteType::Cell);
  auto& L = rt.lists[static_cast<int>(SiteType::Cell)];
  for (auto& l : L) l.assign(nc, {});
  std::vector<std::vector<int>> touching(nc);  // cells sharing at least a vertex
  for (int c = 0; c < nc; ++c) {
    for (int e : g.cells[c].edges) {
      for (int d : g.edges[e].cells) {
        if (d != c) L[kOrth][c].push_back(d);
      }
    }
    for (int v : g.cells[c].vertices) {
      for (int d : g.vertices[v].cells) {
        if (d != c) touching[c].push_back(d);
      }
    }
    normalize(L[kOrth][c]);
    normalize(touching[c]);
  }

  DiagonalFinds finds(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& cell = g.cells[c];
    for (int v : cell.vertices) {
      const double own = corner_bisector(g, c, v);
      std::vector<std::pair<double, int>> case1;
      for (int d : g.vertices[v].cells) {
        if (d == c || contains_sorted(L[kOrth][c], d)) continue;
        case1.push_back({angle_between(own, corner_bisector(g, d, v)), d});
      }
      if (!case1.empty()) {
        std::vector<int> picks;
        keep_maximal(case1, picks);
        for (int d : picks) finds.add(c, d, {SiteType::Vertex, v});
        continue;
      }
      // Bridged diagonals: an edge leaves v away from c and ends on a corner of a cell
      // that shares nothing with c.
      std::vector<std::pair<double, std::pair<int, int>>> case2;
      for (int e : g.vertices[v].edges) {
        const auto& er = g.edges[e];
        if (contains_sorted(er.cells, c)) continue;
        const int w = er.other(v);
        if (std::find(cell.vertices.begin(), cell.vertices.end(), w) != cell.vertices.end()) continue;
        if (distance(g.vertices[v].position, g.vertices[w].position) > kBridgeLength + kMergeEps) continue;
        for (int d : g.vertices[w].cells) {
          if (d == c || contains_sorted(er.cells, d) || contains_sorted(touching[c], d)) continue;
          const auto& dv = g.cells[d].vertices;
          if (std::find(dv.begin(), dv.end(), v) != dv.end()) continue;
          case2.push_back({angle_between(own, corner_bisector(g, d, w)), {d, e}});
        }
      }
      std::vector<std::pair<int, int>> picks;
      keep_maximal(case2, picks);
      for (auto [d, e] : picks) finds.add(c, d, {SiteType::Edge, e});
    }
  }
  finalize_diagonals(finds, L[kDiag], rt.diagonal_pivots[static_cast<int>(SiteType::Cell)]);

  for (int c = 0; c < nc; ++c) {
    L[kAdj][c] = touching[c];
    for (int d : touching[c]) {
      if (!contains_sorted(L[kOrth][c], d) && !contains_sorted(L[kDiag][c], d)) L[kOff][c].push_back(d);
    }
    L[kAll][c] = set_union(set_union(L[kAdj][c], L[kOrth][c]), set_union(L[kDiag][c], L[kOff][c]));
  }
}

void vertex_relations(const BoardGraph& g, RelationTable& rt) {
  const int nv = g.count(SiteType::Vertex);
  auto& L = rt.lists[static_cast<int>(SiteType::Vertex)];
  for (auto& l : L) l.assign(nv, {});
  std::vector<std::vector<int>> share_cell(nv);
  for (int v = 0; v < nv; ++v) {
    for (int e : g.vertices[v].edges) L[kOrth][v].push_back(g.edges[e].other(v));
    normalize(L[kOrth][v]);
    for (int c : g.vertices[v].cells) {
      for (int w : g.cells[c].vertices) {
        if (w != v) share_cell[v].push_back(w);
      }
    }
    normalize(share_cell[v]);
  }

  DiagonalFinds finds(nv);
  for (int v = 0; v < nv; ++v) {
    const Point2 at = g.vertices[v].position;
    for (int c : g.vertices[v].cells) {
      const Point2 mid = g.cells[c].centroid;
      const double own = heading_of(mid - at);
      std::vector<std::pair<double, int>> scored;
      for (int w : g.cells[c].vertices) {
        if (w == v || contains_sorted(L[kOrth][v], w)) continue;
        scored.push_back({angle_between(own, heading_of(mid - g.vertices[w].position)), w});
      }
      std::vector<int> picks;
      keep_maximal(scored, picks);
      for (int w : picks) finds.add(v, w, {SiteType::Cell, c});
    }
  }
  finalize_diagonals(finds, L[kDiag], rt.diagonal_pivots[static_cast<int>(SiteType::Vertex)]);

  for (int v = 0; v < nv; ++v) {
    L[kAdj][v] = L[kOrth][v];
    for (int w : share_cell[v]) {
      if (!contains_sorted(L[kOrth][v], w) && !contains_sorted(L[kDiag][v], w)) L[kOff][v].push_back(w);
    }
    L[kAll][v] = set_union(set_union(L[kAdj][v], L[kOrth][v]), set_union(L[kDiag][v], L[kOff][v]));
  }
}

void edge_relations(const BoardGraph& g, RelationTable& rt) {
  const int ne = g.count(SiteType::Edge);
  auto& L = rt.lists[static_cast<int>(SiteType::Edge)];
  for (auto& l : L) l.assign(ne, {});
  rt.diagonal_pivots[static_cast<int>(SiteType::Edge)].assign(ne, {});
  for (int e = 0; e < ne; ++e) {
    const auto& er = g.edges[e];
    for (int v : {er.v0, er.v1}) {
      for (int f : g.vertices[v].edges) {
        if (f != e) L[kOrth][e].push_back(f);
      }
    }
    normalize(L[kOrth][e]);
    L[kAdj][e] = L[kOrth][e];
    for (int c : er.cells) {
      for (int f : g.cells[c].edges) {
        if (f != e) L[kAdj][e].push_back(f);
      }
    }
    normalize(L[kAdj][e]);
    L[kAll][e] = L[kAdj][e];
  }
}

}  // namespace

std::string_view to_string(RelationType r) {
  switch (r) {
    case RelationType::Adjacent: return "Adjacent";
    case RelationType::Orthogonal: return "Orthogonal";
    case RelationType::Diagonal: return "Diagonal";
    case RelationType::OffDiagonal: return "OffDiagonal";
    case RelationType::All: return "All";
  }
  return "?";
}

std::optional<RelationType> parse_relation_type(std::string_view s) {
  for (auto r : kAllRelations) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

bool RelationTable::related(SiteType t, RelationType r, int a, int b) const {
  return contains_sorted(neighbors(t, r, a), b);
}

double corner_bisector(const BoardGraph& graph, int cell, int vertex) {
  const auto& cyc = graph.cells[cell].vertices;
  const std::size_t k = cyc.size();
  std::size_t i = 0;
  while (i < k && cyc[i] != vertex) ++i;
  const Point2 at = graph.vertices[vertex].position;
  const double to_next = heading_of(graph.vertices[cyc[(i + 1) % k]].position - at);
  const double to_prev = heading_of(graph.vertices[cyc[(i + k - 1) % k]].position - at);
  // Counter-clockwise cells keep their interior to the left, i.e. sweeping from next to prev.
  return to_next + wrap_positive(to_prev - to_next) / 2;
}

RelationTable compute_relations(const BoardGraph& graph) {
  RelationTable rt;
  vertex_relations(graph, rt);
  edge_relations(graph, rt);
  cell_relations(graph, rt);
  return rt;
}

}  // namespace boardforge

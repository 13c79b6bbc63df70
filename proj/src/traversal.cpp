#include "boardforge/traversal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "boardforge/error.hpp"

namespace boardforge {

namespace {

// Signed counter-clockwise sweep from `from` to `to`, in [0, 2pi).
double ccw_sweep(double from, double to) { return wrap_positive(to - from); }

struct WalkState {
  int at;
  double heading;
  std::vector<ElementId> trace;
};

// Neighbors minimizing `score`, ties kept within the angle tolerance. Scores within
// tolerance of `limit` or beyond it are rejected.
template <typename Score>
std::vector<int> best_steps(const std::vector<int>& candidates, Score score, double limit) {
  std::vector<int> out;
  double best = limit;
  for (int j : candidates) {
    const double s = score(j);
    if (s >= limit - kAngleTol) continue;
    if (out.empty() || s < best - kAngleTol) {
      best = s;
      out = {j};
    } else if (s <= best + kAngleTol) {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<WalkState> walk_from(const BoardGraph& g, const RelationTable& rel, ElementId origin,
                                 const std::vector<WalkToken>& tokens, double heading) {
  const SiteType t = origin.type;
  std::vector<WalkState> states{{origin.index, heading, {origin}}};
  for (WalkToken tok : tokens) {
    std::vector<WalkState> next;
    for (const auto& s : states) {
      const auto& steps = rel.neighbors(t, RelationType::Orthogonal, s.at);
      auto angle = [&](int j) { return step_angle(g, t, s.at, j); };
      std::vector<int> picks;
      switch (tok) {
        case WalkToken::F:
          // Forward never turns through a right angle.
          picks = best_steps(steps, [&](int j) { return angle_between(angle(j), s.heading); }, kPi / 2);
          break;
        case WalkToken::L:
          // Turns stay strictly between straight ahead and straight back.
          picks = best_steps(steps, [&](int j) {
            double d = ccw_sweep(s.heading, angle(j));
            return d <= kAngleTol ? 3 * kPi : d;
          }, kPi);
          break;
        case WalkToken::R:
          picks = best_steps(steps, [&](int j) {
            double d = ccw_sweep(angle(j), s.heading);
            return d <= kAngleTol ? 3 * kPi : d;
          }, kPi);
          break;
      }
      for (int j : picks) {
        WalkState n{j, angle(j), s.trace};
        n.trace.push_back({t, j});
        next.push_back(std::move(n));
      }
    }
    states = std::move(next);
  }
  return states;
}

}  // namespace

std::vector<Step> enumerate_steps(const BoardGraph& graph, const RelationTable& relations,
                                  const DirectionTable& directions) {
  std::vector<Step> steps;
  for (SiteType t : kAllSiteTypes) {
    const int n = graph.count(t);
    for (int i = 0; i < n; ++i) {
      for (int j : relations.neighbors(t, RelationType::All, i)) {
        Step s{{t, i}, {t, j}, {}, std::nullopt};
        for (auto r : kAllRelations) {
          if (relations.related(t, r, i, j)) s.relations.push_back(r);
        }
        for (auto d : directions.directions_to({t, i}, j)) {
          if (is_wind(d)) s.compass = d;
        }
        steps.push_back(std::move(s));
      }
    }
  }
  return steps;
}

std::vector<WalkToken> parse_walk(std::string_view text) {
  std::vector<WalkToken> out;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'F': out.push_back(WalkToken::F); break;
      case 'L': out.push_back(WalkToken::L); break;
      case 'R': out.push_back(WalkToken::R); break;
      case ',':
      case ' ':
      case '{':
      case '}':
      case '\t': break;
      default: fail(ErrorCode::TypeError, std::string("walk token must be F, L or R, got '") + c + "'");
    }
  }
  if (out.empty()) fail(ErrorCode::TypeError, "walk needs at least one token");
  return out;
}

WalkResult walk(const BoardGraph& graph, const RelationTable& relations, ElementId origin,
                const std::vector<WalkToken>& tokens, std::optional<double> initial_heading, Ambiguity ambiguity) {
  if (!graph.valid(origin)) fail(ErrorCode::InvalidElement, "no such element " + to_string(origin));
  std::vector<double> headings;
  if (initial_heading) {
    headings.push_back(*initial_heading);
  } else {
    for (int j : relations.neighbors(origin.type, RelationType::Orthogonal, origin.index)) {
      const double a = step_angle(graph, origin.type, origin.index, j);
      bool seen = false;
      for (double h : headings) seen = seen || angle_between(a, h) <= kAngleTol;
      if (!seen) headings.push_back(a);
    }
  }
  const Point2 start = graph.position(origin);
  std::vector<std::pair<ElementId, std::vector<ElementId>>> found;
  for (double h : headings) {
    auto states = walk_from(graph, relations, origin, tokens, h);
    if (ambiguity == Ambiguity::Furthest && !states.empty()) {
      double far = 0.0;
      for (const auto& s : states) far = std::max(far, distance(start, graph.position({origin.type, s.at})));
      std::erase_if(states, [&](const WalkState& s) {
        return distance(start, graph.position({origin.type, s.at})) < far - kMergeEps;
      });
    }
    for (auto& s : states) found.push_back({{origin.type, s.at}, std::move(s.trace)});
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  WalkResult result;
  for (auto& [dest, trace] : found) {
    if (!result.destinations.empty() && result.destinations.back() == dest) continue;
    result.destinations.push_back(dest);
    result.traces.push_back(std::move(trace));
  }
  return result;
}

std::vector<const Radial*> RadialIndex::query(int origin, Direction d, const RelationTable& relations) const {
  std::vector<const Radial*> out;
  if (origin < 0 || origin >= static_cast<int>(by_origin.size())) return out;
  for (int k : by_origin[origin]) {
    const Radial& r = radials[k];
    bool keep = false;
    if (auto rel = as_relation(d)) {
      switch (*rel) {
        case RelationType::All: keep = true; break;
        case RelationType::Adjacent:
          keep = !r.path.empty() && relations.related(site, RelationType::Adjacent, origin, r.path.front());
          break;
        default: keep = r.relation == *rel; break;
      }
    } else {
      keep = std::find(r.labels.begin(), r.labels.end(), d) != r.labels.end();
    }
    if (keep) out.push_back(&r);
  }
  return out;
}

RadialIndex generate_radials(const BoardGraph& graph, const RelationTable& relations, const DirectionTable& directions,
                             bool branching, SiteType site) {
  RadialIndex index;
  index.site = site;
  const int n = graph.count(site);
  index.by_origin.assign(n, {});
  const RelationType families[] = {RelationType::Orthogonal, RelationType::Diagonal, RelationType::OffDiagonal};
  for (int o = 0; o < n; ++o) {
    for (RelationType family : families) {
      for (int first : relations.neighbors(site, family, o)) {
        const auto labels = directions.directions_to({site, o}, first);
        // Depth-first over forks; each entry is a partial path.
        std::vector<std::vector<int>> pending{{first}};
        int emitted = 0;
        while (!pending.empty()) {
          std::vector<int> path = std::move(pending.back());
          pending.pop_back();
          while (true) {
            const int at = path.back();
            const int prev = path.size() > 1 ? path[path.size() - 2] : o;
            const double heading = step_angle(graph, site, prev, at);
            auto picks = best_steps(relations.neighbors(site, family, at), [&](int j) {
              return angle_between(step_angle(graph, site, at, j), heading);
            }, kPi / 2);
            if (picks.empty()) break;
            auto revisit = [&](int j) { return j == o || std::find(path.begin(), path.end(), j) != path.end(); };
            if (!branching) {
              if (revisit(picks.front())) break;
              path.push_back(picks.front());
              continue;
            }
            std::erase_if(picks, revisit);
            if (picks.empty()) break;
            const bool room = emitted + static_cast<int>(pending.size()) + static_cast<int>(picks.size()) <= kMaxBranches;
            if (room) {
              // Later picks wait on the stack in reverse so forks come out in index order.
              for (std::size_t k = picks.size(); k-- > 1;) {
                auto fork = path;
                fork.push_back(picks[k]);
                pending.push_back(std::move(fork));
              }
            }
            path.push_back(picks.front());
          }
          index.by_origin[o].push_back(static_cast<int>(index.radials.size()));
          index.radials.push_back({{site, o}, family, labels, std::move(path), emitted++});
        }
      }
    }
  }
  return index;
}

std::vector<int> turn_sequence(const BoardGraph& graph, const Radial& radial) {
  std::vector<int> seq{radial.origin.index};
  seq.insert(seq.end(), radial.path.begin(), radial.path.end());
  std::vector<int> turns;
  const SiteType t = radial.origin.type;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    const Point2 a = graph.position({t, seq[i - 1]}) - graph.position({t, seq[i - 2]});
    const Point2 b = graph.position({t, seq[i]}) - graph.position({t, seq[i - 1]});
    const double c = cross(a, b);
    const double scale = norm(a) * norm(b);
    turns.push_back(std::abs(c) <= kAngleTol * scale ? 0 : (c > 0 ? 1 : -1));
  }
  return turns;
}

}  // namespace boardforge

#include "boardforge/analysis.hpp"

namespace boardforge {

std::shared_ptr<const Analysis> analyze(const BoardGraph& graph, bool branching) {
  auto a = std::make_shared<Analysis>();
  a->relations = compute_relations(graph);
  a->directions = assign_directions(graph, a->relations);
  a->radials = generate_radials(graph, a->relations, a->directions, branching, graph.default_site);
  a->branching = branching;
  return a;
}

const Analysis& ensure_analysis(BoardGraph& graph, bool branching) {
  if (!graph.analysis || graph.analysis->branching != branching) graph.analysis = analyze(graph, branching);
  return *graph.analysis;
}

}  // namespace boardforge

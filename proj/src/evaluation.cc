/// @file evaluation.cc

#include "sagen/evaluation.h"

#include <unordered_map>

#include "json_util.h"
#include "sagen/error.h"

namespace sagen {

namespace {

void check_order(const ArgumentGraph& graph,
                 const std::vector<std::string>& order) {
  if (order.size() != graph.vertex_count())
    throw Error("evaluation order does not cover the graph");
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!graph.contains(order[i]) || !position.emplace(order[i], i).second)
      throw Error("evaluation order has an unknown or repeated vertex");
  }
  for (const auto& edge : graph.edges()) {
    if (position.at(edge.source) > position.at(edge.target))
      throw Error("evaluation order is not topological");
  }
}

}  // namespace

EvaluationResult evaluate_in_order(const ArgumentGraph& graph,
                                   const std::vector<std::string>& order,
                                   const PriorOverrides& overrides) {
  for (const auto& [id, prior] : overrides) {
    if (!(prior >= 0.0 && prior <= 1.0))
      throw OverrideOutOfRange("override for " + id + " is outside [0, 1]");
  }
  check_order(graph, order);

  EvaluationResult result;
  result.order = order;
  for (const auto& [id, prior] : overrides) {
    if (!graph.contains(id))
      result.warnings.push_back("override for unknown vertex " + id +
                                " ignored");
  }

  for (const auto& id : order) {
    const Vertex& vertex = graph.vertex(id);
    const Label& label = graph.label(id);

    double base;
    if (auto it = overrides.find(id); it != overrides.end()) {
      base = it->second;
    } else if (label.prior) {
      base = *label.prior;
    } else if (vertex.kind() == VertexKind::kAttackerProperty) {
      base = 0.0;
      result.warnings.push_back("attacker property " + vertex.attr("property") +
                                " has no prior; assuming 0");
    } else {
      base = 1.0;
    }

    double value;
    if (vertex.kind() == VertexKind::kAttackStep) {
      value = base;
      for (const auto& pred : graph.predecessors(id))
        value *= result.values.at(pred);
    } else {
      double support = 1.0;
      double discount = 1.0;
      bool has_support = false;
      for (const auto& pred : graph.predecessors(id)) {
        double p = result.values.at(pred);
        if (graph.vertex(pred).kind() == VertexKind::kAttackStep) {
          discount *= 1.0 - p;
          continue;
        }
        has_support = true;
        // For OR, `support` accumulates prod(1 - p) until the end.
        support *= label.aggregator == Aggregator::kOr ? 1.0 - p : p;
      }
      if (!has_support) {
        support = base;
      } else if (label.aggregator == Aggregator::kOr) {
        support = 1.0 - support;
      }
      value = support * discount;
    }
    result.values.emplace(id, value);
  }
  return result;
}

EvaluationResult evaluate(const ArgumentGraph& graph,
                          const PriorOverrides& overrides) {
  return evaluate_in_order(graph, topological_order(graph), overrides);
}

std::vector<std::string> goal_vertices(const ArgumentGraph& graph) {
  std::vector<std::string> out;
  for (const auto& v : graph.vertices()) {
    if (v.kind() == VertexKind::kGoal)
      out.push_back(v.id());
  }
  return out;
}

std::string result_to_json(const EvaluationResult& result) {
  detail::Json doc = {{"values", result.values},
                      {"warnings", result.warnings}};
  return detail::dump(doc);
}

PriorOverrides parse_overrides(std::string_view text) {
  detail::Json doc = detail::parse_text(text);
  detail::require_object(doc, "");
  PriorOverrides out;
  for (const auto& [id, prior] : doc.items()) {
    if (!prior.is_number())
      throw SchemaError(id, "expected a number");
    out.emplace(id, prior.get<double>());
  }
  return out;
}

}  // namespace sagen

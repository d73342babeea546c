/// @file evaluation.h
/// Probability propagation over a finished argument graph.
///
/// Values flow along prerequisite->dependent edges, predecessors treated as
/// independent:
///   - a vertex without non-attack predecessors starts from its base value:
///     the override, else the label prior, else 1 (0 for AttackerProperty);
///   - AND (and ATTACK_DISCOUNT) multiply non-attack predecessor values,
///     OR takes 1 - prod(1 - p);
///   - every AttackStep predecessor a scales the result by (1 - value(a));
///   - an AttackStep is its success probability (label prior) times the
///     product of its prerequisites.

#ifndef SAGEN_EVALUATION_H_
#define SAGEN_EVALUATION_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sagen/graph.h"

namespace sagen {

using PriorOverrides = std::map<std::string, double>;

struct EvaluationResult {
  std::map<std::string, double> values;
  std::vector<std::string> order;
  std::vector<std::string> warnings;
};

/// @throws CyclicGraph
/// @throws OverrideOutOfRange
EvaluationResult evaluate(const ArgumentGraph& graph,
                          const PriorOverrides& overrides = {});

/// Same as evaluate() but walks the caller's order, which must be a
/// topological order of the graph.
///
/// @throws Error  `order` is not a topological order.
EvaluationResult evaluate_in_order(const ArgumentGraph& graph,
                                   const std::vector<std::string>& order,
                                   const PriorOverrides& overrides = {});

/// Ids of Goal vertices in insertion order.
std::vector<std::string> goal_vertices(const ArgumentGraph& graph);

/// {"values": {id: number}, "warnings": [...]}, ids sorted.
std::string result_to_json(const EvaluationResult& result);

/// Reads {id: prior}.
///
/// @throws SyntaxError
/// @throws SchemaError
PriorOverrides parse_overrides(std::string_view text);

}  // namespace sagen

#endif  // SAGEN_EVALUATION_H_

/// @file engine.cc
/// Template dispatch, the generation loop, and the three-stage pipeline.

#include "sagen/engine.h"

#include <algorithm>
#include <deque>

#include "sagen/error.h"
#include "sagen/templates.h"

namespace sagen {

TemplateSet::TemplateSet(std::vector<TemplatePtr> templates)
    : templates_(std::move(templates)) {
  std::set<std::string> seen;
  for (const auto& t : templates_) {
    if (!seen.insert(t->id()).second)
      throw ConfigError("duplicate template id '" + t->id() + "'");
  }
}

TemplateSet TemplateSet::filtered(const RunConfig& config) const {
  std::vector<TemplatePtr> kept;
  for (const auto& t : templates_) {
    if (config.is_enabled(t->id()))
      kept.push_back(t);
  }
  return TemplateSet(std::move(kept));
}

std::vector<TemplateMatch> match_templates(const Vertex& vertex,
                                           const TemplateSet& templates,
                                           const Environment& env,
                                           const AppliedRecord& applied) {
  std::vector<TemplateMatch> out;
  for (const auto& t : templates.templates()) {
    if (applied.contains(vertex.id(), t->id()))
      continue;
    Score score = t->match(vertex, env);
    if (score.positive())
      out.push_back({t, score});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TemplateMatch& a, const TemplateMatch& b) {
                     if (a.score != b.score)
                       return a.score > b.score;
                     return a.tmpl->id() < b.tmpl->id();
                   });
  return out;
}

ArgumentGraph generate_graph(const ArgumentGraph& graph,
                             const TemplateSet& templates,
                             const Environment& env,
                             const GenerationOptions& options,
                             GenerationTrace* trace) {
  ArgumentGraph result = graph;
  AppliedRecord applied;
  std::deque<std::string> frontier;
  for (const auto& v : result.vertices())
    frontier.push_back(v.id());

  std::size_t applications = 0;
  while (!frontier.empty()) {
    std::string id = std::move(frontier.front());
    frontier.pop_front();
    for (;;) {
      Vertex vertex = result.vertex(id);
      auto matches = match_templates(vertex, templates, env, applied);
      if (matches.empty())
        break;
      const ExtensionTemplate& chosen = *matches.front().tmpl;
      LocalExtension ext = chosen.generate(vertex, env);
      if (!(ext.center == vertex))
        throw StarInvalid("template " + chosen.id() +
                          " produced an extension for a different vertex");
      for (const auto& v : ext.star.vertices()) {
        Label label = ext.star.label(v.id());
        label.provenance = {chosen.id(), options.stage};
        ext.star.set_label(v.id(), std::move(label));
      }
      if (applications == options.max_applications)
        throw NonTermination("generation exceeded " +
                             std::to_string(options.max_applications) +
                             " template applications");
      ++applications;
      auto added = apply_extension_in_place(result, ext);
      applied.insert(id, chosen.id());
      if (trace)
        trace->applications.emplace_back(id, chosen.id());
      frontier.insert(frontier.end(), added.begin(), added.end());
    }
  }
  topological_order(result);  // Throws on a cycle.
  return result;
}

Vertex parse_goal(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
    throw ConfigError("goal '" + spec +
                      "' is not of the form <property>:<workflow_id>");
  std::string property = spec.substr(0, colon);
  std::string subject = spec.substr(colon + 1);
  if (property == "confidentiality" || property == "integrity")
    throw ConfigError("goal property '" + property +
                      "' is unsupported in this artifact");
  if (property != "availability")
    throw ConfigError("unknown goal property '" + property + "'");
  return make_vertex(VertexKind::kGoal,
                     {{"property", property}, {"subject", subject}});
}

ArgumentGraph initial_graph(const Vertex& goal) {
  ArgumentGraph graph;
  graph.add_vertex(goal, Label{Aggregator::kAnd, std::nullopt,
                               {"goal", "input"}, {}});
  return graph;
}

const ArgumentGraph& PipelineResult::at(Stage stage) const {
  switch (stage) {
    case Stage::kG:
      return g;
    case Stage::kGs:
      return gs;
    case Stage::kGsa:
      return gsa;
  }
  return gsa;
}

PipelineResult run_pipeline(const Vertex& goal, const Environment& env) {
  if (goal.kind() != VertexKind::kGoal)
    throw ConfigError("pipeline must start from a Goal vertex");
  if (env.workflow.steps.empty())
    throw EmptyWorkflow("workflow " + env.workflow.workflow_id +
                        " has no steps");
  if (goal.attr("subject") != env.workflow.workflow_id)
    throw UnknownWorkflow("goal refers to unknown workflow " +
                          goal.attr("subject"));
  env.config.check();

  const RunConfig& config = env.config;
  auto stage_set = [&config](Stage stage, TemplateSet all) {
    if (static_cast<int>(stage) > static_cast<int>(config.stage))
      return TemplateSet();
    return all.filtered(config);
  };
  auto options = [&config](Stage stage) {
    return GenerationOptions{std::string(to_string(stage)),
                             config.max_applications};
  };

  PipelineResult out;
  out.g = generate_graph(initial_graph(goal),
                         stage_set(Stage::kG, goal_stage_templates()), env,
                         options(Stage::kG));
  out.gs = generate_graph(out.g,
                          stage_set(Stage::kGs, system_stage_templates()), env,
                          options(Stage::kGs));
  out.gsa = generate_graph(out.gs,
                           stage_set(Stage::kGsa, attacker_stage_templates()),
                           env, options(Stage::kGsa));
  return out;
}

}  // namespace sagen

/// @file environment.cc
/// Run configuration and cross-model validation.

#include "sagen/environment.h"

#include <algorithm>
#include <set>

#include "sagen/error.h"

namespace sagen {

namespace {

void check_composition(const CompositionNode& node, const std::string& locus,
                       std::vector<Issue>& issues) {
  if (node.name.empty())
    issues.push_back({locus, "composition node with an empty name"});
  for (const auto& child : node.children)
    check_composition(child, locus, issues);
}

bool in_unit_interval(double p) { return p >= 0.0 && p <= 1.0; }

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kG:
      return "g";
    case Stage::kGs:
      return "gs";
    case Stage::kGsa:
      return "gsa";
  }
  return "gsa";
}

Stage stage_from_string(std::string_view name) {
  if (name == "g")
    return Stage::kG;
  if (name == "gs")
    return Stage::kGs;
  if (name == "gsa")
    return Stage::kGsa;
  throw ConfigError("unknown stage '" + std::string(name) +
                    "' (expected g, gs, or gsa)");
}

const std::vector<std::string>& builtin_template_ids() {
  static const std::vector<std::string> kIds = {"T1", "T2", "T3", "T4",
                                                "T5", "T6", "T7"};
  return kIds;
}

void RunConfig::check() const {
  const auto& known = builtin_template_ids();
  auto verify = [&known](const std::string& id) {
    if (std::find(known.begin(), known.end(), id) == known.end())
      throw ConfigError("unknown template id '" + id + "'");
  };
  for (const auto& id : disabled)
    verify(id);
  if (enable_only) {
    for (const auto& id : *enable_only)
      verify(id);
  }
  if (max_applications == 0)
    throw ConfigError("application ceiling must be positive");
}

bool RunConfig::is_enabled(const std::string& template_id) const {
  if (disabled.count(template_id))
    return false;
  return !enable_only || enable_only->count(template_id) != 0;
}

Environment validate_environment(WorkflowModel workflow, SystemModel system,
                                 AttackerModel attacker, RunConfig config) {
  std::vector<Issue> issues;
  std::vector<std::string> warnings;
  const TypeHierarchy& types = system.type_hierarchy;

  // Workflow.
  if (workflow.steps.empty())
    issues.push_back({"workflow.steps", "workflow has no steps"});
  std::set<std::string> step_ids;
  const auto actors = workflow.actors();
  auto is_actor = [&actors](const std::string& a) {
    return std::find(actors.begin(), actors.end(), a) != actors.end();
  };
  for (std::size_t i = 0; i < workflow.steps.size(); ++i) {
    const WorkflowStep& step = workflow.steps[i];
    std::string locus = "workflow.steps[" + std::to_string(i) + "]";
    if (!step_ids.insert(step.step_id).second)
      issues.push_back({locus, "duplicate step_id " + step.step_id});
    if (step.sends_message && !is_actor(step.sends_message->peer_actor))
      issues.push_back({locus, "message " + step.sends_message->message_id +
                                   " is sent to actor " +
                                   step.sends_message->peer_actor +
                                   " outside the workflow"});
    if (step.receives_message) {
      const MessageRef& in = *step.receives_message;
      if (!is_actor(in.peer_actor))
        issues.push_back({locus, "message " + in.message_id +
                                     " is received from actor " +
                                     in.peer_actor + " outside the workflow"});
      bool sent = false;
      for (std::size_t j = 0; j < i; ++j) {
        const WorkflowStep& earlier = workflow.steps[j];
        if (earlier.actor == in.peer_actor && earlier.sends_message &&
            earlier.sends_message->message_id == in.message_id &&
            earlier.sends_message->peer_actor == step.actor)
          sent = true;
      }
      if (!sent)
        issues.push_back({locus, "message " + in.message_id + " has no sender"});
    }
  }

  // System.
  if (types.empty())
    issues.push_back({"system.type_hierarchy", "type hierarchy is empty"});
  std::set<std::string> device_ids;
  for (std::size_t i = 0; i < system.devices.size(); ++i) {
    const Device& device = system.devices[i];
    std::string locus = "system.devices[" + std::to_string(i) + "]";
    if (!device_ids.insert(device.device_id).second)
      issues.push_back({locus, "duplicate device_id " + device.device_id});
    if (!types.contains(device.type_name))
      issues.push_back({locus, "device " + device.device_id +
                                   " has unknown type " + device.type_name});
  }
  for (std::size_t i = 0; i < system.links.size(); ++i) {
    const Link& link = system.links[i];
    std::string locus = "system.links[" + std::to_string(i) + "]";
    for (const auto* end : {&link.endpoints.first, &link.endpoints.second}) {
      if (!device_ids.count(*end))
        issues.push_back({locus, "link endpoint " + *end + " is not a device"});
    }
    if ((link.capacity && *link.capacity < 0) || (link.delay && *link.delay < 0))
      issues.push_back({locus, "link capacity and delay must be non-negative"});
  }
  for (const auto& [actor, binding] : system.actor_map) {
    std::string locus = "system.actor_map." + actor;
    if (!types.contains(binding.component_type)) {
      issues.push_back({locus, "actor " + actor + " maps to unknown type " +
                                   binding.component_type});
      continue;
    }
    for (const auto& id : binding.devices) {
      const Device* device = system.find_device(id);
      if (!device) {
        issues.push_back({locus, "actor " + actor + " names unknown device " + id});
      } else if (!types.is_descendant_or_self(device->type_name,
                                              binding.component_type)) {
        issues.push_back({locus, "device " + id + " is not of type " +
                                     binding.component_type});
      }
    }
  }
  for (const auto& [type, tree] : system.composition_trees) {
    std::string locus = "system.composition_trees." + type;
    if (!types.contains(type))
      issues.push_back({locus, "composition tree for unknown type " + type});
    check_composition(tree, locus, issues);
  }
  if (!types.empty() && !system.composition_trees.count(types.root()))
    issues.push_back({"system.composition_trees",
                      "hierarchy root " + types.root() +
                          " must own a composition tree"});

  // Attacker.
  std::set<std::string> pattern_ids;
  for (const auto& [property, prior] : attacker.profile) {
    if (!in_unit_interval(prior))
      issues.push_back({"attacker.profile." + property,
                        "prior must lie in [0, 1]"});
  }
  std::set<std::string> unstated;
  for (std::size_t i = 0; i < attacker.patterns.size(); ++i) {
    const AttackPattern& pattern = attacker.patterns[i];
    std::string locus = "attacker.patterns[" + std::to_string(i) + "]";
    if (!pattern_ids.insert(pattern.pattern_id).second)
      issues.push_back({locus, "duplicate pattern_id " + pattern.pattern_id});
    if (!in_unit_interval(pattern.success_prob))
      issues.push_back({locus, "success_prob must lie in [0, 1]"});
    if (!types.contains(pattern.target.component_type))
      issues.push_back({locus, "target type " + pattern.target.component_type +
                                   " is not in the type hierarchy"});
    for (const auto& property : pattern.prerequisites) {
      if (!attacker.profile.count(property))
        unstated.insert(property);
    }
  }
  for (const auto& property : unstated)
    warnings.push_back("attacker property " + property +
                       " has no prior in the profile; assuming 0");

  // Cross references.
  for (const auto& actor : actors) {
    if (!system.actor_map.count(actor)) {
      issues.push_back({"system.actor_map", "actor " + actor + " unmapped"});
    } else if (types.contains(system.actor_map.at(actor).component_type) &&
               system.devices_for_actor(actor).empty()) {
      issues.push_back({"system.actor_map." + actor,
                        "actor " + actor + " resolves to no device"});
    }
  }

  try {
    config.check();
  } catch (const ConfigError& err) {
    issues.push_back({"config", err.what()});
  }

  if (!issues.empty())
    throw ValidationError(std::move(issues));
  return Environment{std::move(workflow), std::move(system),
                     std::move(attacker), std::move(config),
                     std::move(warnings)};
}

}  // namespace sagen

/// @file templates.cc
/// Match and generate functions of the built-in templates.

#include "sagen/templates.h"

#include "sagen/error.h"

namespace sagen {

namespace {

constexpr Score kApplies{1};
constexpr Score kNotApplicable{0};

const std::string kOwnerNote = "composition_owner";

class BuiltinTemplate : public ExtensionTemplate {
 public:
  explicit BuiltinTemplate(std::string id) : id_(std::move(id)) {}
  const std::string& id() const final { return id_; }

 private:
  std::string id_;
};

Label label_of(Aggregator aggregator, std::optional<double> prior = {}) {
  Label label;
  label.aggregator = aggregator;
  label.prior = prior;
  return label;
}

LocalExtension star_at(const Vertex& center, Label center_label) {
  LocalExtension ext{center, {}};
  ext.star.add_vertex(center, std::move(center_label));
  return ext;
}

void add_prerequisite(LocalExtension& ext, const Vertex& v, Label label) {
  ext.star.add_vertex(v, std::move(label));
  ext.star.add_edge(v.id(), ext.center.id());
}

Vertex action_vertex(const WorkflowStep& step) {
  return make_vertex(VertexKind::kActionAvailability,
                     {{"action", step.action},
                      {"actor", step.actor},
                      {"step_id", step.step_id}});
}

/// The workflow step an ActionAvailability vertex stands for, or null when
/// the vertex does not describe a step of this workflow.
const WorkflowStep* step_of(const Vertex& v, const Environment& env) {
  const WorkflowStep* step = env.workflow.find_step(v.attr("step_id"));
  if (!step || step->action != v.attr("action") || step->actor != v.attr("actor"))
    return nullptr;
  return step;
}

/// Composition node addressed by a ComponentAvailability vertex.
struct ComponentSite {
  ResolvedComposition resolved;
  const CompositionNode* node = nullptr;
};

std::optional<ComponentSite> site_of(const Vertex& v, const Environment& env) {
  const std::string& type = v.attr("component_type");
  if (!env.system.type_hierarchy.contains(type))
    return std::nullopt;
  ComponentSite site;
  try {
    site.resolved = resolve_composition_tree(type, env.system);
  } catch (const NoCompositionTreeAnywhere&) {
    return std::nullopt;
  }
  site.node = site.resolved.tree->find(v.attr("component"));
  if (!site.node)
    return std::nullopt;
  return site;
}

std::string device_type_of(const Vertex& v, const Environment& env) {
  const Device* device = env.system.find_device(v.attr("device"));
  return device ? device->type_name : v.attr("component_type");
}

class GoalToWorkflow : public BuiltinTemplate {
 public:
  GoalToWorkflow() : BuiltinTemplate("T1") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kGoal ||
        v.attr("subject") != env.workflow.workflow_id)
      return kNotApplicable;
    return kApplies;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    // A sequential chain has exactly one sink: the last listed step.
    if (env.workflow.steps.empty())
      throw WorkflowHasNoUniqueFinalStep("workflow " +
                                         env.workflow.workflow_id +
                                         " has no final step");
    LocalExtension ext = star_at(v, label_of(Aggregator::kAnd));
    add_prerequisite(ext, action_vertex(env.workflow.steps.back()),
                     label_of(Aggregator::kAnd));
    return ext;
  }
};

class PreviousSteps : public BuiltinTemplate {
 public:
  PreviousSteps() : BuiltinTemplate("T2") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kActionAvailability)
      return kNotApplicable;
    const WorkflowStep* step = step_of(v, env);
    if (!step || env.workflow.predecessors(step->step_id).empty())
      return kNotApplicable;
    return kApplies;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    LocalExtension ext = star_at(v, label_of(Aggregator::kAnd));
    for (const WorkflowStep* prev : env.workflow.predecessors(v.attr("step_id")))
      add_prerequisite(ext, action_vertex(*prev), label_of(Aggregator::kAnd));
    return ext;
  }
};

class ActorRequirements : public BuiltinTemplate {
 public:
  ActorRequirements() : BuiltinTemplate("T3") {}

  Score match(const Vertex& v, const Environment&) const override {
    return v.kind() == VertexKind::kActionAvailability ? kApplies
                                                       : kNotApplicable;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    LocalExtension ext = star_at(v, label_of(Aggregator::kAnd));
    add_prerequisite(
        ext, make_vertex(VertexKind::kActorAvailability, {{"actor", v.attr("actor")}}),
        label_of(Aggregator::kAnd));
    const WorkflowStep* step = step_of(v, env);
    if (step && step->receives_message) {
      add_prerequisite(
          ext,
          make_vertex(VertexKind::kMessageAvailability,
                      {{"message", step->receives_message->message_id},
                       {"sender", step->receives_message->peer_actor},
                       {"receiver", step->actor}}),
          label_of(Aggregator::kAnd));
    }
    return ext;
  }
};

class ActorToDevices : public BuiltinTemplate {
 public:
  ActorToDevices() : BuiltinTemplate("T4") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kActorAvailability ||
        env.system.devices_for_actor(v.attr("actor")).empty())
      return kNotApplicable;
    return kApplies;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    // Every device playing the role is required.
    LocalExtension ext = star_at(v, label_of(Aggregator::kAnd));
    for (const Device* device : env.system.devices_for_actor(v.attr("actor"))) {
      auto resolved = resolve_composition_tree(device->type_name, env.system);
      Label label = label_of(resolved.tree->aggregator);
      label.notes[kOwnerNote] = resolved.owner;
      add_prerequisite(ext,
                       make_vertex(VertexKind::kComponentAvailability,
                                   {{"device", device->device_id},
                                    {"component_type", device->type_name},
                                    {"component", resolved.tree->path}}),
                       std::move(label));
    }
    return ext;
  }
};

class DecomposeComponent : public BuiltinTemplate {
 public:
  DecomposeComponent() : BuiltinTemplate("T5") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kComponentAvailability)
      return kNotApplicable;
    auto site = site_of(v, env);
    return site && !site->node->is_leaf() ? kApplies : kNotApplicable;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    auto site = site_of(v, env);
    if (!site)
      throw NoCompositionTreeAnywhere("no composition node " +
                                      v.attr("component") + " for type " +
                                      v.attr("component_type"));
    const std::string& owner = site->resolved.owner;
    Label center = label_of(site->node->aggregator);
    center.notes[kOwnerNote] = owner;
    LocalExtension ext = star_at(v, std::move(center));
    for (const auto& child : site->node->children) {
      Label label = label_of(child.aggregator);
      label.notes[kOwnerNote] = owner;
      add_prerequisite(ext,
                       make_vertex(VertexKind::kComponentAvailability,
                                   {{"device", v.attr("device")},
                                    {"component_type", v.attr("component_type")},
                                    {"component", child.path}}),
                       std::move(label));
    }
    return ext;
  }
};

class AttacksOnLeaves : public BuiltinTemplate {
 public:
  AttacksOnLeaves() : BuiltinTemplate("T6") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kComponentAvailability)
      return kNotApplicable;
    auto site = site_of(v, env);
    if (!site || !site->node->is_leaf())
      return kNotApplicable;
    std::string device_type = device_type_of(v, env);
    for (const auto& pattern : env.attacker.patterns) {
      if (attack_targets(pattern, site->node->path, device_type,
                         env.system.type_hierarchy))
        return kApplies;
    }
    return kNotApplicable;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    auto site = site_of(v, env);
    Label center = label_of(Aggregator::kAttackDiscount);
    if (site)
      center.notes[kOwnerNote] = site->resolved.owner;
    LocalExtension ext = star_at(v, std::move(center));
    std::string device_type = device_type_of(v, env);
    for (const auto& pattern : env.attacker.patterns) {
      if (!attack_targets(pattern, v.attr("component"), device_type,
                          env.system.type_hierarchy))
        continue;
      add_prerequisite(ext,
                       make_vertex(VertexKind::kAttackStep,
                                   {{"attack", pattern.pattern_id},
                                    {"device", v.attr("device")}}),
                       label_of(Aggregator::kAnd, pattern.success_prob));
    }
    return ext;
  }
};

class AttackRequirements : public BuiltinTemplate {
 public:
  AttackRequirements() : BuiltinTemplate("T7") {}

  Score match(const Vertex& v, const Environment& env) const override {
    if (v.kind() != VertexKind::kAttackStep)
      return kNotApplicable;
    const AttackPattern* pattern = env.attacker.find_pattern(v.attr("attack"));
    return pattern && !pattern->prerequisites.empty() ? kApplies
                                                      : kNotApplicable;
  }

  LocalExtension generate(const Vertex& v,
                          const Environment& env) const override {
    const AttackPattern& pattern = *env.attacker.find_pattern(v.attr("attack"));
    // The center keeps the success probability it was created with.
    LocalExtension ext =
        star_at(v, label_of(Aggregator::kAnd, pattern.success_prob));
    for (const auto& property : pattern.prerequisites) {
      std::optional<double> prior;
      if (auto it = env.attacker.profile.find(property);
          it != env.attacker.profile.end())
        prior = it->second;
      add_prerequisite(
          ext, make_vertex(VertexKind::kAttackerProperty, {{"property", property}}),
          label_of(Aggregator::kAnd, prior));
    }
    return ext;
  }
};

}  // namespace

bool attack_targets(const AttackPattern& pattern, const std::string& path,
                    const std::string& device_type, const TypeHierarchy& types) {
  const std::string& wanted = pattern.target.component;
  bool path_matches = path == wanted;
  if (!path_matches && path.size() > wanted.size()) {
    std::size_t cut = path.size() - wanted.size();
    path_matches = path[cut - 1] == '/' && path.compare(cut, wanted.size(), wanted) == 0;
  }
  return path_matches &&
         types.is_descendant_or_self(device_type, pattern.target.component_type);
}

TemplatePtr make_goal_to_workflow() { return std::make_shared<GoalToWorkflow>(); }
TemplatePtr make_previous_steps() { return std::make_shared<PreviousSteps>(); }
TemplatePtr make_actor_requirements() {
  return std::make_shared<ActorRequirements>();
}
TemplatePtr make_actor_to_devices() { return std::make_shared<ActorToDevices>(); }
TemplatePtr make_decompose_component() {
  return std::make_shared<DecomposeComponent>();
}
TemplatePtr make_attacks_on_leaves() {
  return std::make_shared<AttacksOnLeaves>();
}
TemplatePtr make_attack_requirements() {
  return std::make_shared<AttackRequirements>();
}

TemplateSet goal_stage_templates() {
  return TemplateSet({make_goal_to_workflow(), make_previous_steps(),
                      make_actor_requirements()});
}

TemplateSet system_stage_templates() {
  return TemplateSet({make_actor_to_devices(), make_decompose_component()});
}

TemplateSet attacker_stage_templates() {
  return TemplateSet({make_attacks_on_leaves(), make_attack_requirements()});
}

}  // namespace sagen

/// @file models.cc
/// Model lookups plus the JSON readers and writers for the three input files.

#include "sagen/models.h"

#include <algorithm>
#include <set>

#include "json_util.h"
#include "sagen/error.h"

namespace sagen {

namespace {

using detail::Json;

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void check_format_version(const Json& doc) {
  const Json& version = detail::require_member(doc, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    throw SchemaError("format_version",
                      "unsupported version (expected " +
                          std::to_string(kFormatVersion) + ")");
}

void put_extras(Json& object, const OpaqueNotes& extras) {
  for (const auto& [key, text] : extras)
    object[key] = Json::parse(text);
}

std::optional<MessageRef> parse_message(const Json& step,
                                        const std::string& key,
                                        const std::string& peer_key,
                                        const std::string& path,
                                        const ParseOptions& options) {
  if (!step.contains(key))
    return std::nullopt;
  std::string field = path + "." + key;
  const Json& object = detail::require_object(step[key], field);
  detail::check_keys(object, field, {"message_id", peer_key}, options.lenient);
  return MessageRef{detail::get_string(object, "message_id", field),
                    detail::get_string(object, peer_key, field)};
}

void parse_type_node(const Json& node, const std::string& parent,
                     const std::string& path, TypeHierarchy& out,
                     const ParseOptions& options) {
  detail::require_object(node, path);
  detail::check_keys(node, path, {"name", "children"}, options.lenient);
  std::string name = detail::get_string(node, "name", path);
  out.add(name, parent);
  if (!node.contains("children"))
    return;
  const Json& children =
      detail::require_array(node["children"], path + ".children");
  for (std::size_t i = 0; i < children.size(); ++i)
    parse_type_node(children[i], name, index_path(path + ".children", i), out,
                    options);
}

Json type_node_to_json(const TypeHierarchy& types, const std::string& name) {
  Json node = {{"name", name}};
  const auto& children = types.children(name);
  if (!children.empty()) {
    Json list = Json::array();
    for (const auto& child : children)
      list.push_back(type_node_to_json(types, child));
    node["children"] = std::move(list);
  }
  return node;
}

CompositionNode parse_composition_node(const Json& node,
                                       const std::string& parent_path,
                                       const std::string& path,
                                       const ParseOptions& options) {
  detail::require_object(node, path);
  detail::check_keys(node, path, {"name", "aggregator", "children"},
                     options.lenient);
  CompositionNode out;
  out.name = detail::get_string(node, "name", path);
  if (out.name.find('/') != std::string::npos)
    throw SchemaError(path + ".name", "must not contain '/'");
  out.path = parent_path.empty() ? out.name : parent_path + "/" + out.name;
  if (auto aggregator = detail::get_optional_string(node, "aggregator", path)) {
    if (*aggregator == "AND") {
      out.aggregator = Aggregator::kAnd;
    } else if (*aggregator == "OR") {
      out.aggregator = Aggregator::kOr;
    } else {
      throw SchemaError(path + ".aggregator", "expected AND or OR");
    }
  }
  if (!node.contains("children"))
    return out;
  const Json& children =
      detail::require_array(node["children"], path + ".children");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::string child_path = index_path(path + ".children", i);
    out.children.push_back(
        parse_composition_node(children[i], out.path, child_path, options));
    if (!seen.insert(out.children.back().name).second)
      throw SchemaError(child_path + ".name",
                        "duplicate child '" + out.children.back().name + "'");
  }
  return out;
}

Json composition_node_to_json(const CompositionNode& node) {
  Json out = {{"name", node.name},
              {"aggregator", std::string(to_string(node.aggregator))}};
  if (!node.children.empty()) {
    Json list = Json::array();
    for (const auto& child : node.children)
      list.push_back(composition_node_to_json(child));
    out["children"] = std::move(list);
  }
  return out;
}

double probability(const Json& object, const std::string& key,
                   const std::string& path) {
  return detail::get_number(object, key, path);
}

}  // namespace

// ---------------------------------------------------------------- workflow

const WorkflowStep* WorkflowModel::find_step(std::string_view step_id) const {
  for (const auto& step : steps) {
    if (step.step_id == step_id)
      return &step;
  }
  return nullptr;
}

std::vector<const WorkflowStep*> WorkflowModel::predecessors(
    std::string_view step_id) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].step_id == step_id) {
      if (i == 0)
        return {};
      return {&steps[i - 1]};
    }
  }
  return {};
}

std::vector<std::pair<std::string, std::string>> WorkflowModel::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 1; i < steps.size(); ++i)
    out.emplace_back(steps[i - 1].step_id, steps[i].step_id);
  return out;
}

std::vector<std::string> WorkflowModel::actors() const {
  std::vector<std::string> out;
  for (const auto& step : steps) {
    if (std::find(out.begin(), out.end(), step.actor) == out.end())
      out.push_back(step.actor);
  }
  return out;
}

WorkflowModel parse_workflow(std::string_view text, ParseOptions options) {
  Json doc = detail::parse_text(text);
  detail::require_object(doc, "");
  WorkflowModel model;
  model.extras = detail::check_keys(
      doc, "", {"format_version", "workflow_id", "steps"}, options.lenient);
  check_format_version(doc);
  model.workflow_id = detail::get_string(doc, "workflow_id", "");
  const Json& steps =
      detail::require_array(detail::require_member(doc, "steps", ""), "steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::string path = index_path("steps", i);
    const Json& item = detail::require_object(steps[i], path);
    WorkflowStep step;
    step.extras = detail::check_keys(
        item, path,
        {"step_id", "action", "actor", "receives_message", "sends_message"},
        options.lenient);
    step.step_id = detail::get_string(item, "step_id", path);
    step.action = detail::get_string(item, "action", path);
    step.actor = detail::get_string(item, "actor", path);
    step.receives_message =
        parse_message(item, "receives_message", "from_actor", path, options);
    step.sends_message =
        parse_message(item, "sends_message", "to_actor", path, options);
    model.steps.push_back(std::move(step));
  }
  return model;
}

std::string serialize_workflow(const WorkflowModel& model) {
  Json steps = Json::array();
  for (const auto& step : model.steps) {
    Json item = {{"step_id", step.step_id},
                 {"action", step.action},
                 {"actor", step.actor}};
    if (step.receives_message)
      item["receives_message"] = {
          {"message_id", step.receives_message->message_id},
          {"from_actor", step.receives_message->peer_actor}};
    if (step.sends_message)
      item["sends_message"] = {{"message_id", step.sends_message->message_id},
                               {"to_actor", step.sends_message->peer_actor}};
    put_extras(item, step.extras);
    steps.push_back(std::move(item));
  }
  Json doc = {{"format_version", kFormatVersion},
              {"workflow_id", model.workflow_id},
              {"steps", std::move(steps)}};
  put_extras(doc, model.extras);
  return detail::dump(doc);
}

// ------------------------------------------------------------------ system

void TypeHierarchy::add(const std::string& name, const std::string& parent) {
  if (parent_.count(name))
    throw SchemaError("type_hierarchy", "duplicate type '" + name + "'");
  if (parent.empty()) {
    if (!order_.empty())
      throw SchemaError("type_hierarchy", "second root '" + name + "'");
  } else if (!parent_.count(parent)) {
    throw SchemaError("type_hierarchy", "unknown parent '" + parent + "'");
  }
  order_.push_back(name);
  parent_.emplace(name, parent);
  children_[name];
  if (!parent.empty())
    children_[parent].push_back(name);
}

bool TypeHierarchy::contains(std::string_view name) const {
  return parent_.find(std::string(name)) != parent_.end();
}

const std::string& TypeHierarchy::parent(const std::string& name) const {
  return parent_.at(name);
}

const std::vector<std::string>& TypeHierarchy::children(
    const std::string& name) const {
  return children_.at(name);
}

std::vector<std::string> TypeHierarchy::ancestors_or_self(
    const std::string& name) const {
  std::vector<std::string> out;
  for (std::string current = name; !current.empty();
       current = parent_.at(current))
    out.push_back(current);
  return out;
}

bool TypeHierarchy::is_descendant_or_self(const std::string& name,
                                          const std::string& ancestor) const {
  if (!contains(name))
    return false;
  for (std::string current = name; !current.empty();
       current = parent_.at(current)) {
    if (current == ancestor)
      return true;
  }
  return false;
}

const CompositionNode* CompositionNode::find(std::string_view target) const {
  if (target == path)
    return this;
  if (target.size() <= path.size() || target.substr(0, path.size()) != path ||
      target[path.size()] != '/')
    return nullptr;
  for (const auto& child : children) {
    if (const CompositionNode* hit = child.find(target))
      return hit;
  }
  return nullptr;
}

const Device* SystemModel::find_device(std::string_view device_id) const {
  for (const auto& device : devices) {
    if (device.device_id == device_id)
      return &device;
  }
  return nullptr;
}

std::vector<const Device*> SystemModel::devices_for_actor(
    const std::string& actor) const {
  std::vector<const Device*> out;
  auto it = actor_map.find(actor);
  if (it == actor_map.end())
    return out;
  const ActorBinding& binding = it->second;
  for (const auto& device : devices) {
    if (!type_hierarchy.is_descendant_or_self(device.type_name,
                                              binding.component_type))
      continue;
    if (!binding.devices.empty() &&
        std::find(binding.devices.begin(), binding.devices.end(),
                  device.device_id) == binding.devices.end())
      continue;
    out.push_back(&device);
  }
  return out;
}

ResolvedComposition resolve_composition_tree(const std::string& type_name,
                                             const SystemModel& system) {
  if (!system.type_hierarchy.contains(type_name))
    throw UnknownType("component type '" + type_name +
                      "' is not in the type hierarchy");
  for (const auto& candidate :
       system.type_hierarchy.ancestors_or_self(type_name)) {
    auto it = system.composition_trees.find(candidate);
    if (it != system.composition_trees.end())
      return {candidate, &it->second};
  }
  throw NoCompositionTreeAnywhere("no composition tree for '" + type_name +
                                  "' or any of its ancestors");
}

SystemModel parse_system(std::string_view text, ParseOptions options) {
  Json doc = detail::parse_text(text);
  detail::require_object(doc, "");
  SystemModel model;
  model.extras = detail::check_keys(
      doc, "",
      {"format_version", "devices", "links", "actor_map", "type_hierarchy",
       "composition_trees"},
      options.lenient);
  check_format_version(doc);

  const Json& devices = detail::require_array(
      detail::require_member(doc, "devices", ""), "devices");
  for (std::size_t i = 0; i < devices.size(); ++i) {
    std::string path = index_path("devices", i);
    const Json& item = detail::require_object(devices[i], path);
    Device device;
    device.extras = detail::check_keys(
        item, path, {"device_id", "type_name", "location", "access"},
        options.lenient);
    device.device_id = detail::get_string(item, "device_id", path);
    device.type_name = detail::get_string(item, "type_name", path);
    device.location =
        detail::get_optional_string(item, "location", path).value_or("");
    if (item.contains("access"))
      device.access = detail::get_string_array(item, "access", path);
    model.devices.push_back(std::move(device));
  }

  if (doc.contains("links")) {
    const Json& links = detail::require_array(doc["links"], "links");
    for (std::size_t i = 0; i < links.size(); ++i) {
      std::string path = index_path("links", i);
      const Json& item = detail::require_object(links[i], path);
      Link link;
      link.extras = detail::check_keys(
          item, path,
          {"endpoints", "link_type", "capacity", "delay", "wide_area"},
          options.lenient);
      auto endpoints = detail::get_string_array(item, "endpoints", path);
      if (endpoints.size() != 2)
        throw SchemaError(path + ".endpoints", "expected exactly two devices");
      link.endpoints = {endpoints[0], endpoints[1]};
      std::string type = detail::get_string(item, "link_type", path);
      if (type == "communication") {
        link.link_type = LinkType::kCommunication;
      } else if (type == "physical-power") {
        link.link_type = LinkType::kPhysicalPower;
      } else {
        throw SchemaError(path + ".link_type",
                          "expected communication or physical-power");
      }
      if (item.contains("capacity"))
        link.capacity = detail::get_number(item, "capacity", path);
      if (item.contains("delay"))
        link.delay = detail::get_number(item, "delay", path);
      if (item.contains("wide_area")) {
        if (!item["wide_area"].is_boolean())
          throw SchemaError(path + ".wide_area", "expected a boolean");
        link.wide_area = item["wide_area"].get<bool>();
      }
      model.links.push_back(std::move(link));
    }
  }

  const Json& actor_map = detail::require_object(
      detail::require_member(doc, "actor_map", ""), "actor_map");
  for (const auto& [actor, value] : actor_map.items()) {
    std::string path = "actor_map." + actor;
    ActorBinding binding;
    if (value.is_string()) {
      binding.component_type = value.get<std::string>();
    } else if (value.is_object()) {
      detail::check_keys(value, path, {"component_type", "devices"}, false);
      binding.component_type = detail::get_string(value, "component_type", path);
      if (value.contains("devices"))
        binding.devices = detail::get_string_array(value, "devices", path);
    } else {
      throw SchemaError(path, "expected a type name or a binding object");
    }
    model.actor_map.emplace(actor, std::move(binding));
  }

  parse_type_node(detail::require_member(doc, "type_hierarchy", ""), "",
                  "type_hierarchy", model.type_hierarchy, options);

  const Json& trees = detail::require_object(
      detail::require_member(doc, "composition_trees", ""),
      "composition_trees");
  for (const auto& [type, tree] : trees.items()) {
    model.composition_trees.emplace(
        type, parse_composition_node(tree, "", "composition_trees." + type,
                                     options));
  }
  return model;
}

std::string serialize_system(const SystemModel& model) {
  Json devices = Json::array();
  for (const auto& device : model.devices) {
    Json item = {{"device_id", device.device_id},
                 {"type_name", device.type_name},
                 {"location", device.location},
                 {"access", device.access}};
    put_extras(item, device.extras);
    devices.push_back(std::move(item));
  }
  Json links = Json::array();
  for (const auto& link : model.links) {
    Json item = {
        {"endpoints", {link.endpoints.first, link.endpoints.second}},
        {"link_type", link.link_type == LinkType::kCommunication
                          ? "communication"
                          : "physical-power"},
        {"wide_area", link.wide_area}};
    if (link.capacity)
      item["capacity"] = *link.capacity;
    if (link.delay)
      item["delay"] = *link.delay;
    put_extras(item, link.extras);
    links.push_back(std::move(item));
  }
  Json actor_map = Json::object();
  for (const auto& [actor, binding] : model.actor_map) {
    if (binding.devices.empty()) {
      actor_map[actor] = binding.component_type;
    } else {
      actor_map[actor] = {{"component_type", binding.component_type},
                          {"devices", binding.devices}};
    }
  }
  Json trees = Json::object();
  for (const auto& [type, tree] : model.composition_trees)
    trees[type] = composition_node_to_json(tree);
  Json doc = {{"format_version", kFormatVersion},
              {"devices", std::move(devices)},
              {"links", std::move(links)},
              {"actor_map", std::move(actor_map)},
              {"composition_trees", std::move(trees)}};
  if (!model.type_hierarchy.empty())
    doc["type_hierarchy"] =
        type_node_to_json(model.type_hierarchy, model.type_hierarchy.root());
  put_extras(doc, model.extras);
  return detail::dump(doc);
}

// ---------------------------------------------------------------- attacker

const AttackPattern* AttackerModel::find_pattern(
    std::string_view pattern_id) const {
  for (const auto& pattern : patterns) {
    if (pattern.pattern_id == pattern_id)
      return &pattern;
  }
  return nullptr;
}

AttackerModel parse_attacker(std::string_view text, ParseOptions options) {
  Json doc = detail::parse_text(text);
  detail::require_object(doc, "");
  AttackerModel model;
  model.extras = detail::check_keys(
      doc, "", {"format_version", "profile", "patterns"}, options.lenient);
  check_format_version(doc);

  const Json& profile = detail::require_object(
      detail::require_member(doc, "profile", ""), "profile");
  for (const auto& [property, prior] : profile.items()) {
    if (!prior.is_number())
      throw SchemaError("profile." + property, "expected a number");
    model.profile.emplace(property, prior.get<double>());
  }

  const Json& patterns = detail::require_array(
      detail::require_member(doc, "patterns", ""), "patterns");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    std::string path = index_path("patterns", i);
    const Json& item = detail::require_object(patterns[i], path);
    AttackPattern pattern;
    pattern.extras = detail::check_keys(
        item, path, {"pattern_id", "target", "success_prob", "prerequisites"},
        options.lenient);
    pattern.pattern_id = detail::get_string(item, "pattern_id", path);
    std::string target_path = path + ".target";
    const Json& target = detail::require_object(
        detail::require_member(item, "target", path), target_path);
    detail::check_keys(target, target_path, {"component", "component_type"},
                       false);
    pattern.target.component =
        detail::get_string(target, "component", target_path);
    pattern.target.component_type =
        detail::get_string(target, "component_type", target_path);
    pattern.success_prob = probability(item, "success_prob", path);
    if (item.contains("prerequisites"))
      pattern.prerequisites =
          detail::get_string_array(item, "prerequisites", path);
    model.patterns.push_back(std::move(pattern));
  }
  return model;
}

std::string serialize_attacker(const AttackerModel& model) {
  Json patterns = Json::array();
  for (const auto& pattern : model.patterns) {
    Json item = {{"pattern_id", pattern.pattern_id},
                 {"target",
                  {{"component", pattern.target.component},
                   {"component_type", pattern.target.component_type}}},
                 {"success_prob", pattern.success_prob},
                 {"prerequisites", pattern.prerequisites}};
    put_extras(item, pattern.extras);
    patterns.push_back(std::move(item));
  }
  Json doc = {{"format_version", kFormatVersion},
              {"profile", model.profile},
              {"patterns", std::move(patterns)}};
  put_extras(doc, model.extras);
  return detail::dump(doc);
}

}  // namespace sagen

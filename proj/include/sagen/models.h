/// @file models.h
/// Workflow, system, and attacker models and their JSON file formats.
///
/// All three files carry "format_version": 1. Unknown fields are rejected
/// unless parsing is lenient, in which case they are kept as opaque notes
/// and written back on serialization.

#ifndef SAGEN_MODELS_H_
#define SAGEN_MODELS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sagen/graph.h"

namespace sagen {

inline constexpr int kFormatVersion = 1;

struct ParseOptions {
  bool lenient = false;
};

/// Unknown members kept under lenient parsing: name -> compact JSON text.
using OpaqueNotes = std::map<std::string, std::string>;

// ---------------------------------------------------------------- workflow

struct MessageRef {
  std::string message_id;
  std::string peer_actor;  ///< from_actor on receive, to_actor on send.

  bool operator==(const MessageRef&) const = default;
};

struct WorkflowStep {
  std::string step_id;
  std::string action;
  std::string actor;
  std::optional<MessageRef> receives_message;
  std::optional<MessageRef> sends_message;
  OpaqueNotes extras;

  bool operator==(const WorkflowStep&) const = default;
};

/// A sequential workflow; list order is the chain order.
struct WorkflowModel {
  std::string workflow_id;
  std::vector<WorkflowStep> steps;
  OpaqueNotes extras;

  const WorkflowStep* find_step(std::string_view step_id) const;
  /// Immediate predecessors of a step in the chain (zero or one).
  std::vector<const WorkflowStep*> predecessors(std::string_view step_id) const;
  /// Successor relation as (from, to) step-id pairs.
  std::vector<std::pair<std::string, std::string>> edges() const;
  /// Distinct actors in order of first appearance.
  std::vector<std::string> actors() const;

  bool operator==(const WorkflowModel&) const = default;
};

// ------------------------------------------------------------------ system

/// Rooted tree of component-type names, most general at the root.
class TypeHierarchy {
 public:
  /// Adds a type under `parent`, or the root when `parent` is empty.
  ///
  /// @throws SchemaError  Duplicate name, second root, or unknown parent.
  void add(const std::string& name, const std::string& parent);

  bool empty() const { return order_.empty(); }
  const std::string& root() const { return order_.front(); }
  bool contains(std::string_view name) const;
  /// Empty for the root.
  const std::string& parent(const std::string& name) const;
  const std::vector<std::string>& children(const std::string& name) const;
  /// Types in insertion (pre-)order.
  const std::vector<std::string>& types() const { return order_; }

  /// Walks from `name` up to the root, nearest first.
  std::vector<std::string> ancestors_or_self(const std::string& name) const;
  bool is_descendant_or_self(const std::string& name,
                             const std::string& ancestor) const;

  bool operator==(const TypeHierarchy&) const = default;

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::string> parent_;
  std::map<std::string, std::vector<std::string>> children_;
};

/// Node of a device composition tree. Paths join names with '/', starting
/// at the root node's name ("root", "root/software", ...).
struct CompositionNode {
  std::string name;
  std::string path;
  Aggregator aggregator = Aggregator::kAnd;
  std::vector<CompositionNode> children;

  bool is_leaf() const { return children.empty(); }
  const CompositionNode* find(std::string_view path) const;

  bool operator==(const CompositionNode&) const = default;
};

struct Device {
  std::string device_id;
  std::string type_name;
  std::string location;
  std::vector<std::string> access;
  OpaqueNotes extras;

  bool operator==(const Device&) const = default;
};

enum class LinkType { kCommunication, kPhysicalPower };

struct Link {
  std::pair<std::string, std::string> endpoints;
  LinkType link_type = LinkType::kCommunication;
  std::optional<double> capacity;
  std::optional<double> delay;
  bool wide_area = false;
  OpaqueNotes extras;

  bool operator==(const Link&) const = default;
};

/// Where an actor is deployed. With an empty device list every device of
/// the type (or a descendant type) plays the role; otherwise only the
/// listed ones do.
struct ActorBinding {
  std::string component_type;
  std::vector<std::string> devices;

  bool operator==(const ActorBinding&) const = default;
};

struct SystemModel {
  std::vector<Device> devices;
  std::vector<Link> links;
  std::map<std::string, ActorBinding> actor_map;
  TypeHierarchy type_hierarchy;
  std::map<std::string, CompositionNode> composition_trees;
  OpaqueNotes extras;

  const Device* find_device(std::string_view device_id) const;
  /// Devices playing the actor's role, in topology order. Empty when the
  /// actor is unmapped.
  std::vector<const Device*> devices_for_actor(const std::string& actor) const;

  bool operator==(const SystemModel&) const = default;
};

/// Nearest ancestor-or-self of a type that owns a composition tree.
struct ResolvedComposition {
  std::string owner;
  const CompositionNode* tree = nullptr;
};

/// @throws UnknownType  `type_name` is not in the hierarchy.
/// @throws NoCompositionTreeAnywhere  No ancestor owns a tree.
ResolvedComposition resolve_composition_tree(const std::string& type_name,
                                             const SystemModel& system);

// ---------------------------------------------------------------- attacker

struct AttackTarget {
  std::string component;  ///< Node name or full composition path.
  std::string component_type;

  bool operator==(const AttackTarget&) const = default;
};

struct AttackPattern {
  std::string pattern_id;
  AttackTarget target;
  double success_prob = 0.0;
  std::vector<std::string> prerequisites;
  OpaqueNotes extras;

  bool operator==(const AttackPattern&) const = default;
};

struct AttackerModel {
  std::map<std::string, double> profile;
  std::vector<AttackPattern> patterns;
  OpaqueNotes extras;

  const AttackPattern* find_pattern(std::string_view pattern_id) const;

  bool operator==(const AttackerModel&) const = default;
};

// ------------------------------------------------------------------ I/O

/// @throws SyntaxError
/// @throws SchemaError
WorkflowModel parse_workflow(std::string_view text, ParseOptions options = {});
SystemModel parse_system(std::string_view text, ParseOptions options = {});
AttackerModel parse_attacker(std::string_view text, ParseOptions options = {});

std::string serialize_workflow(const WorkflowModel& model);
std::string serialize_system(const SystemModel& model);
std::string serialize_attacker(const AttackerModel& model);

}  // namespace sagen

#endif  // SAGEN_MODELS_H_

/// @file graph.cc
/// Vertex identity, graph storage, and local-extension application.

#include "sagen/graph.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <queue>

#include "sagen/error.h"

namespace sagen {

namespace {

constexpr std::array<std::string_view, 7> kKindNames = {
    "Goal",
    "ActionAvailability",
    "ActorAvailability",
    "MessageAvailability",
    "ComponentAvailability",
    "AttackStep",
    "AttackerProperty",
};

constexpr std::array<std::string_view, 3> kAggregatorNames = {
    "AND", "OR", "ATTACK_DISCOUNT"};

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& hash, std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= kFnvPrime;
  }
}

// Length prefix keeps ("ab","c") and ("a","bc") apart.
void fnv_field(std::uint64_t& hash, std::string_view field) {
  fnv_mix(hash, std::to_string(field.size()));
  fnv_mix(hash, ":");
  fnv_mix(hash, field);
}

// MurmurHash3 finalizer; spreads ids that differ only in trailing bytes.
std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

const std::vector<std::string> kEmpty;

}  // namespace

std::string_view to_string(VertexKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

VertexKind vertex_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name)
      return static_cast<VertexKind>(i);
  }
  throw Error("unknown vertex kind '" + std::string(name) + "'");
}

const std::vector<std::string>& required_attributes(VertexKind kind) {
  static const std::array<std::vector<std::string>, 7> kRequired = {{
      {"property", "subject"},
      {"action", "actor", "step_id"},
      {"actor"},
      {"message", "receiver", "sender"},
      {"component", "component_type", "device"},
      {"attack", "device"},
      {"property"},
  }};
  return kRequired[static_cast<std::size_t>(kind)];
}

std::string vertex_id(VertexKind kind, const AttributeMap& attrs) {
  std::uint64_t hash = kFnvOffset;
  fnv_field(hash, to_string(kind));
  for (const auto& [key, value] : attrs) {
    fnv_field(hash, key);
    fnv_field(hash, value);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fmix64(hash)));
  return buf;
}

Vertex make_vertex(VertexKind kind, AttributeMap attrs) {
  const auto& required = required_attributes(kind);
  for (const auto& key : required) {
    if (!attrs.count(key))
      throw MissingAttribute(key);
  }
  for (const auto& entry : attrs) {
    if (!std::binary_search(required.begin(), required.end(), entry.first))
      throw UnknownAttribute(entry.first);
  }
  std::string id = vertex_id(kind, attrs);
  return Vertex(kind, std::move(attrs), std::move(id));
}

std::string_view to_string(Aggregator aggregator) {
  return kAggregatorNames[static_cast<std::size_t>(aggregator)];
}

Aggregator aggregator_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kAggregatorNames.size(); ++i) {
    if (kAggregatorNames[i] == name)
      return static_cast<Aggregator>(i);
  }
  throw Error("unknown aggregator '" + std::string(name) + "'");
}

bool ArgumentGraph::add_vertex(const Vertex& vertex, Label label) {
  if (label.prior && (*label.prior < 0.0 || *label.prior > 1.0))
    throw Error("prior of vertex " + vertex.id() + " is outside [0, 1]");
  auto it = index_.find(vertex.id());
  if (it != index_.end()) {
    if (!(vertices_[it->second] == vertex))
      throw IdentityCollision("id " + vertex.id() +
                              " is shared by vertices with different data");
    return false;
  }
  index_.emplace(vertex.id(), vertices_.size());
  labels_.emplace(vertex.id(), std::move(label));
  vertices_.push_back(vertex);
  return true;
}

bool ArgumentGraph::add_edge(const std::string& source,
                             const std::string& target) {
  if (source == target)
    throw InvalidEdge("self-loop on " + source);
  if (!contains(source) || !contains(target))
    throw InvalidEdge("edge " + source + " -> " + target +
                      " has an endpoint outside the graph");
  if (!edges_.insert({source, target}).second)
    return false;
  preds_[target].push_back(source);
  succs_[source].push_back(target);
  return true;
}

void ArgumentGraph::set_label(const std::string& id, Label label) {
  if (label.prior && (*label.prior < 0.0 || *label.prior > 1.0))
    throw Error("prior of vertex " + id + " is outside [0, 1]");
  labels_.at(id) = std::move(label);
}

const Vertex& ArgumentGraph::vertex(const std::string& id) const {
  return vertices_[index_.at(id)];
}

const std::vector<std::string>& ArgumentGraph::predecessors(
    const std::string& id) const {
  auto it = preds_.find(id);
  return it == preds_.end() ? kEmpty : it->second;
}

const std::vector<std::string>& ArgumentGraph::successors(
    const std::string& id) const {
  auto it = succs_.find(id);
  return it == succs_.end() ? kEmpty : it->second;
}

bool ArgumentGraph::operator==(const ArgumentGraph& other) const {
  if (vertices_.size() != other.vertices_.size() || edges_ != other.edges_ ||
      labels_ != other.labels_)
    return false;
  // Equal label key sets mean equal id sets; ids are content hashes, but
  // collisions are rejected on insert, so compare the data as well.
  for (const auto& v : vertices_) {
    if (!(other.vertex(v.id()) == v))
      return false;
  }
  return true;
}

StarReport validate_star(const LocalExtension& ext) {
  StarReport report;
  const ArgumentGraph& star = ext.star;
  const std::string& center = ext.center.id();
  if (!star.contains(center)) {
    report.violations.push_back("center " + center + " absent from star");
  } else if (!(star.vertex(center) == ext.center)) {
    report.violations.push_back("center " + center +
                                " differs from the star's vertex");
  }
  std::size_t additional = 0;
  for (const auto& v : star.vertices()) {
    if (v.id() != center)
      ++additional;
  }
  if (additional == 0)
    report.violations.push_back("at least one additional vertex required");

  for (const auto& edge : star.edges()) {
    if (edge.source == center) {
      report.violations.push_back("wrong direction " + edge.source + "->" +
                                  edge.target);
    } else if (edge.target != center) {
      report.violations.push_back("extra edge " + edge.source + "->" +
                                  edge.target);
    }
  }
  for (const auto& v : star.vertices()) {
    if (v.id() == center)
      continue;
    if (!star.contains(Edge{v.id(), center}))
      report.violations.push_back("vertex " + v.id() +
                                  " has no edge to the center");
  }
  return report;
}

std::vector<std::string> apply_extension_in_place(ArgumentGraph& graph,
                                                  const LocalExtension& ext) {
  StarReport report = validate_star(ext);
  if (!report.ok()) {
    std::string msg = "invalid star at " + ext.center.id() + ":";
    for (const auto& v : report.violations)
      msg += " " + v + ";";
    throw StarInvalid(msg);
  }
  const std::string& center = ext.center.id();
  if (!graph.contains(center) || !(graph.vertex(center) == ext.center))
    throw CenterNotInGraph("center " + center + " is not in the graph");

  // Check collisions before mutating so a failure leaves the graph intact.
  for (const auto& v : ext.star.vertices()) {
    if (graph.contains(v.id()) && !(graph.vertex(v.id()) == v))
      throw IdentityCollision("id " + v.id() +
                              " is shared by vertices with different data");
  }

  std::vector<std::string> added;
  for (const auto& v : ext.star.vertices()) {
    if (v.id() == center) {
      graph.set_label(center, ext.star.label(center));
    } else if (graph.add_vertex(v, ext.star.label(v.id()))) {
      added.push_back(v.id());
    }
  }
  for (const auto& v : ext.star.vertices()) {
    if (v.id() != center)
      graph.add_edge(v.id(), center);
  }
  return added;
}

ArgumentGraph apply_extension(const ArgumentGraph& graph,
                              const LocalExtension& ext) {
  ArgumentGraph result = graph;
  apply_extension_in_place(result, ext);
  return result;
}

std::vector<std::string> topological_order(const ArgumentGraph& graph) {
  const auto& vertices = graph.vertices();
  std::unordered_map<std::string, std::size_t> position;
  std::vector<std::size_t> indegree(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    position.emplace(vertices[i].id(), i);
  for (const auto& edge : graph.edges())
    ++indegree[position.at(edge.target)];

  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (indegree[i] == 0)
      ready.push(i);
  }
  std::vector<std::string> order;
  order.reserve(vertices.size());
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(vertices[i].id());
    for (const auto& next : graph.successors(vertices[i].id())) {
      std::size_t j = position.at(next);
      if (--indegree[j] == 0)
        ready.push(j);
    }
  }
  if (order.size() != vertices.size())
    throw CyclicGraph("graph contains a cycle through " +
                      std::to_string(vertices.size() - order.size()) +
                      " vertices");
  return order;
}

bool is_acyclic(const ArgumentGraph& graph) {
  try {
    topological_order(graph);
    return true;
  } catch (const CyclicGraph&) {
    return false;
  }
}

}  // namespace sagen

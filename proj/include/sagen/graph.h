/// @file graph.h
/// Security argument graph: typed vertices identified by their static data,
/// prerequisite-to-dependent edges, and a mutable label per vertex.

#ifndef SAGEN_GRAPH_H_
#define SAGEN_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sagen {

enum class VertexKind : std::uint8_t {
  kGoal,
  kActionAvailability,
  kActorAvailability,
  kMessageAvailability,
  kComponentAvailability,
  kAttackStep,
  kAttackerProperty,
};

inline constexpr VertexKind kAllVertexKinds[] = {
    VertexKind::kGoal,
    VertexKind::kActionAvailability,
    VertexKind::kActorAvailability,
    VertexKind::kMessageAvailability,
    VertexKind::kComponentAvailability,
    VertexKind::kAttackStep,
    VertexKind::kAttackerProperty,
};

/// Canonical name, e.g. "ActionAvailability".
std::string_view to_string(VertexKind kind);

/// @throws Error  The name is not a vertex kind.
VertexKind vertex_kind_from_string(std::string_view name);

/// Attribute keys a vertex of the given kind must carry, sorted.
const std::vector<std::string>& required_attributes(VertexKind kind);

/// Sorted by key, which is also the canonical order for hashing.
using AttributeMap = std::map<std::string, std::string>;

/// Immutable vertex. Two vertices are the same vertex iff kind and
/// static attributes are equal; the id is a content hash of both.
class Vertex {
 public:
  VertexKind kind() const { return kind_; }
  const AttributeMap& attrs() const { return attrs_; }
  const std::string& id() const { return id_; }

  /// @throws std::out_of_range  No such attribute.
  const std::string& attr(const std::string& key) const {
    return attrs_.at(key);
  }

  bool operator==(const Vertex& other) const {
    return kind_ == other.kind_ && attrs_ == other.attrs_;
  }

 private:
  friend Vertex make_vertex(VertexKind kind, AttributeMap attrs);
  Vertex(VertexKind kind, AttributeMap attrs, std::string id)
      : kind_(kind), attrs_(std::move(attrs)), id_(std::move(id)) {}

  VertexKind kind_;
  AttributeMap attrs_;
  std::string id_;
};

/// Creates a vertex after checking that the attribute keys are exactly the
/// ones required for the kind.
///
/// @throws MissingAttribute  A required key is absent.
/// @throws UnknownAttribute  A key is not defined for the kind.
Vertex make_vertex(VertexKind kind, AttributeMap attrs);

/// Deterministic 64-bit FNV-1a over a length-prefixed encoding of the kind
/// and sorted attributes, passed through a final avalanche mix and rendered
/// as 16 lowercase hex digits.
std::string vertex_id(VertexKind kind, const AttributeMap& attrs);

/// How a vertex combines the values of its incoming neighbors.
enum class Aggregator : std::uint8_t { kAnd, kOr, kAttackDiscount };

std::string_view to_string(Aggregator aggregator);
Aggregator aggregator_from_string(std::string_view name);

/// Which template (and stage) produced the current label.
struct Provenance {
  std::string template_id;
  std::string stage;

  bool operator==(const Provenance&) const = default;
};

/// The mutable part of a vertex.
struct Label {
  Aggregator aggregator = Aggregator::kAnd;
  std::optional<double> prior;  ///< In [0, 1] when present.
  Provenance provenance;
  std::map<std::string, std::string> notes;

  bool operator==(const Label&) const = default;
};

/// Directed dependency: source is a prerequisite of target.
struct Edge {
  std::string source;
  std::string target;

  auto operator<=>(const Edge&) const = default;
};

/// The graph triple. Vertices keep insertion order; edges are a set.
class ArgumentGraph {
 public:
  /// Inserts the vertex with the given label if absent.
  ///
  /// @returns true if the vertex was new.
  ///
  /// @throws IdentityCollision  Same id, different static data.
  /// @throws Error  Label prior outside [0, 1].
  bool add_vertex(const Vertex& vertex, Label label = {});

  /// Duplicate edges collapse.
  ///
  /// @returns true if the edge was new.
  ///
  /// @throws InvalidEdge  Self-loop or a dangling endpoint.
  bool add_edge(const std::string& source, const std::string& target);

  /// @throws std::out_of_range  Unknown vertex.
  void set_label(const std::string& id, Label label);

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  bool contains(const Edge& edge) const { return edges_.count(edge) != 0; }

  /// @throws std::out_of_range  Unknown vertex.
  const Vertex& vertex(const std::string& id) const;
  const Label& label(const std::string& id) const { return labels_.at(id); }

  /// Vertices in insertion order.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::set<Edge>& edges() const { return edges_; }

  /// Incoming neighbors (prerequisites) in edge insertion order.
  const std::vector<std::string>& predecessors(const std::string& id) const;
  /// Outgoing neighbors (dependents) in edge insertion order.
  const std::vector<std::string>& successors(const std::string& id) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Set equality of vertices and edges plus equal labels.
  /// Insertion order does not participate.
  bool operator==(const ArgumentGraph& other) const;

 private:
  std::vector<Vertex> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<std::string, Label> labels_;
  std::set<Edge> edges_;
  std::unordered_map<std::string, std::vector<std::string>> preds_;
  std::unordered_map<std::string, std::vector<std::string>> succs_;
};

/// A matched center vertex together with the star graph to merge at it.
struct LocalExtension {
  Vertex center;
  ArgumentGraph star;
};

/// Result of checking the star-shape rules of a local extension.
struct StarReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks that the center is in the star, at least one other vertex is
/// present, every other vertex has exactly one edge and it points at the
/// center, and that nothing else is connected.
StarReport validate_star(const LocalExtension& ext);

/// Merges the star into a copy of the graph. The center and vertices new to
/// the graph take the star's labels; vertices already present keep theirs.
///
/// @throws CenterNotInGraph
/// @throws StarInvalid
ArgumentGraph apply_extension(const ArgumentGraph& graph,
                              const LocalExtension& ext);

/// In-place variant for callers that hold the graph exclusively.
/// Validates before touching the graph.
///
/// @returns Ids of vertices added to the graph, in star insertion order.
std::vector<std::string> apply_extension_in_place(ArgumentGraph& graph,
                                                  const LocalExtension& ext);

/// Kahn's algorithm over prerequisite->dependent edges. Among ready vertices
/// the earliest inserted comes first.
///
/// @throws CyclicGraph
std::vector<std::string> topological_order(const ArgumentGraph& graph);

bool is_acyclic(const ArgumentGraph& graph);

}  // namespace sagen

#endif  // SAGEN_GRAPH_H_

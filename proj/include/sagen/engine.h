/// @file engine.h
/// Extension templates and the fixpoint generation loop.
///
/// A template pairs a matching function, scoring how well it applies to a
/// vertex, with a generator producing the local extension for that vertex.
/// Generation visits vertices in insertion order (new vertices are queued at
/// the back), applies the best-scoring unapplied template, and repeats until
/// no (vertex, template) pair is left.

#ifndef SAGEN_ENGINE_H_
#define SAGEN_ENGINE_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sagen/environment.h"
#include "sagen/graph.h"

namespace sagen {

/// Non-negative rational matching score. Zero means "not applicable".
class Score {
 public:
  constexpr Score() = default;
  constexpr Score(std::uint32_t numerator, std::uint32_t denominator = 1)
      : num_(numerator), den_(denominator == 0 ? 1 : denominator) {}

  constexpr bool positive() const { return num_ != 0; }
  constexpr std::uint32_t numerator() const { return num_; }
  constexpr std::uint32_t denominator() const { return den_; }

  friend constexpr std::strong_ordering operator<=>(Score a, Score b) {
    return std::uint64_t{a.num_} * b.den_ <=> std::uint64_t{b.num_} * a.den_;
  }
  friend constexpr bool operator==(Score a, Score b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::uint32_t num_ = 0;
  std::uint32_t den_ = 1;
};

class ExtensionTemplate {
 public:
  virtual ~ExtensionTemplate() = default;

  virtual const std::string& id() const = 0;
  virtual Score match(const Vertex& vertex, const Environment& env) const = 0;
  /// Only called when match() is positive. The result must be a valid star
  /// centered on `vertex`.
  virtual LocalExtension generate(const Vertex& vertex,
                                  const Environment& env) const = 0;
};

using TemplatePtr = std::shared_ptr<const ExtensionTemplate>;

/// Ordered set of templates with unique ids.
class TemplateSet {
 public:
  TemplateSet() = default;
  /// @throws ConfigError  Duplicate template id.
  explicit TemplateSet(std::vector<TemplatePtr> templates);

  const std::vector<TemplatePtr>& templates() const { return templates_; }
  bool empty() const { return templates_.empty(); }
  std::size_t size() const { return templates_.size(); }

  /// Keeps only the templates the config enables.
  TemplateSet filtered(const RunConfig& config) const;

 private:
  std::vector<TemplatePtr> templates_;
};

/// (vertex id, template id) pairs already applied during one run.
class AppliedRecord {
 public:
  bool contains(const std::string& vertex_id,
                const std::string& template_id) const {
    return pairs_.count({vertex_id, template_id}) != 0;
  }
  void insert(const std::string& vertex_id, const std::string& template_id) {
    pairs_.emplace(vertex_id, template_id);
  }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

struct TemplateMatch {
  TemplatePtr tmpl;
  Score score;
};

/// Applicable, not-yet-applied templates for the vertex, by descending
/// score, then ascending template id.
std::vector<TemplateMatch> match_templates(const Vertex& vertex,
                                           const TemplateSet& templates,
                                           const Environment& env,
                                           const AppliedRecord& applied);

struct GenerationOptions {
  std::string stage;  ///< Stamped into label provenance.
  std::size_t max_applications = 10000;
};

/// What a run did, in application order.
struct GenerationTrace {
  std::vector<std::pair<std::string, std::string>> applications;
};

/// Runs the generation loop to a fixpoint on a copy of `graph`.
///
/// @throws StarInvalid  A template produced a malformed extension.
/// @throws NonTermination  More than options.max_applications applications.
/// @throws CyclicGraph  The result is not acyclic.
ArgumentGraph generate_graph(const ArgumentGraph& graph,
                             const TemplateSet& templates,
                             const Environment& env,
                             const GenerationOptions& options = {},
                             GenerationTrace* trace = nullptr);

/// Goal syntax "<property>:<workflow_id>"; only "availability" is supported.
///
/// @throws ConfigError
Vertex parse_goal(const std::string& spec);

/// Starting graph: the goal vertex alone.
ArgumentGraph initial_graph(const Vertex& goal);

struct PipelineResult {
  ArgumentGraph g;
  ArgumentGraph gs;
  ArgumentGraph gsa;

  const ArgumentGraph& at(Stage stage) const;
};

/// G from the goal with {T1,T2,T3}, GS from G with {T4,T5}, GSA from GS
/// with {T6,T7}. Each stage set is filtered by env.config; stages after
/// env.config.stage run with no templates.
///
/// @throws EmptyWorkflow
/// @throws UnknownWorkflow  Goal subject is not the environment's workflow.
PipelineResult run_pipeline(const Vertex& goal, const Environment& env);

}  // namespace sagen

#endif  // SAGEN_ENGINE_H_

// Shared helpers for the test binaries.

#ifndef SAGEN_TESTS_SUPPORT_H_
#define SAGEN_TESTS_SUPPORT_H_

#include <fstream>
#include <sstream>
#include <string>

#include "sagen/engine.h"
#include "sagen/environment.h"
#include "sagen/graph.h"
#include "sagen/models.h"

namespace sagen::test {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(SAGEN_FIXTURE_DIR) + "/" + name;
}

inline std::string data_path(const std::string& name) {
  return std::string(SAGEN_TEST_DATA_DIR) + "/" + name;
}

struct Models {
  WorkflowModel workflow;
  SystemModel system;
  AttackerModel attacker;
};

inline Models fixture_models() {
  return {parse_workflow(read_text(fixture_path("workflow.json"))),
          parse_system(read_text(fixture_path("system.json"))),
          parse_attacker(read_text(fixture_path("attacker.json")))};
}

inline Environment fixture_env(RunConfig config = {}) {
  Models m = fixture_models();
  return validate_environment(std::move(m.workflow), std::move(m.system),
                              std::move(m.attacker), std::move(config));
}

inline Vertex fixture_goal() {
  return make_vertex(VertexKind::kGoal,
                     {{"property", "availability"}, {"subject", "wf-volt-ctrl"}});
}

inline Vertex action(const std::string& step, const std::string& act,
                     const std::string& actor) {
  return make_vertex(VertexKind::kActionAvailability,
                     {{"action", act}, {"actor", actor}, {"step_id", step}});
}

inline Vertex actor(const std::string& name) {
  return make_vertex(VertexKind::kActorAvailability, {{"actor", name}});
}

inline Vertex component(const std::string& device, const std::string& type,
                        const std::string& path) {
  return make_vertex(VertexKind::kComponentAvailability,
                     {{"component", path},
                      {"component_type", type},
                      {"device", device}});
}

inline Vertex attack_step(const std::string& attack, const std::string& device) {
  return make_vertex(VertexKind::kAttackStep,
                     {{"attack", attack}, {"device", device}});
}

inline Vertex attacker_property(const std::string& property) {
  return make_vertex(VertexKind::kAttackerProperty, {{"property", property}});
}

inline Vertex message(const std::string& msg, const std::string& sender,
                      const std::string& receiver) {
  return make_vertex(VertexKind::kMessageAvailability,
                     {{"message", msg}, {"receiver", receiver}, {"sender", sender}});
}

inline Label label_with_prior(double prior,
                              Aggregator aggregator = Aggregator::kAnd) {
  Label l;
  l.aggregator = aggregator;
  l.prior = prior;
  return l;
}

}  // namespace sagen::test

#endif  // SAGEN_TESTS_SUPPORT_H_

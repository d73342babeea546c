#include <doctest.h>

#include "sagen/error.h"
#include "sagen/templates.h"
#include "support.h"

using namespace sagen;
using namespace sagen::test;

namespace {

/// Non-center vertices of a star.
std::vector<Vertex> leaves(const LocalExtension& ext) {
  std::vector<Vertex> out;
  for (const auto& v : ext.star.vertices()) {
    if (v.id() != ext.center.id())
      out.push_back(v);
  }
  return out;
}

std::set<std::string> leaf_ids(const LocalExtension& ext) {
  std::set<std::string> out;
  for (const auto& v : leaves(ext))
    out.insert(v.id());
  return out;
}

Environment single_step_env() {
  WorkflowModel wf = parse_workflow(R"({
    "format_version": 1, "workflow_id": "wf-one",
    "steps": [{"step_id": "only", "action": "trip-breaker", "actor": "DMS"}]})");
  Models m = fixture_models();
  return validate_environment(wf, m.system, m.attacker);
}

/// One sample vertex per kind, chosen so every built-in template could
/// plausibly fire on its own kind.
std::vector<Vertex> samples() {
  return {fixture_goal(),
          action("s3", "evaluate-voltage", "DMS"),
          actor("DMS"),
          message("m1", "RTU-1", "DMS"),
          component("RTU-1", "RTU", "root"),
          component("RTU-1", "RTU", "root/power"),
          attack_step("physical-tampering", "RTU-1"),
          attacker_property("physical-access-substation")};
}

}  // namespace

TEST_CASE("T1 goal to workflow") {
  Environment env = fixture_env();
  auto t1 = make_goal_to_workflow();
  CHECK(t1->match(fixture_goal(), env) == Score(1));
  LocalExtension ext = t1->generate(fixture_goal(), env);
  CHECK(validate_star(ext).ok());
  CHECK(leaf_ids(ext) ==
        std::set<std::string>{action("s5", "actuate-der", "RTU-2").id()});

  Vertex other = make_vertex(VertexKind::kGoal,
                             {{"property", "availability"}, {"subject", "wf-nope"}});
  CHECK_FALSE(t1->match(other, env).positive());

  Environment one = single_step_env();
  Vertex goal_one = make_vertex(VertexKind::kGoal,
                                {{"property", "availability"}, {"subject", "wf-one"}});
  CHECK(leaf_ids(t1->generate(goal_one, one)) ==
        std::set<std::string>{action("only", "trip-breaker", "DMS").id()});
}

TEST_CASE("T2 previous steps") {
  Environment env = fixture_env();
  auto t2 = make_previous_steps();
  Vertex s5 = action("s5", "actuate-der", "RTU-2");
  CHECK(t2->match(s5, env).positive());
  CHECK(leaf_ids(t2->generate(s5, env)) ==
        std::set<std::string>{action("s4", "send-setpoint", "DMS").id()});
  CHECK_FALSE(t2->match(action("s1", "request-measurement", "DMS"), env).positive());
  // Attribute mismatch with the workflow step is not a step of this workflow.
  CHECK_FALSE(t2->match(action("s5", "actuate-der", "RTU-1"), env).positive());
}

TEST_CASE("T3 actor requirements") {
  Environment env = fixture_env();
  auto t3 = make_actor_requirements();

  Vertex meter = action("s1", "MeterReading", "Utility");
  REQUIRE(t3->match(meter, env).positive());
  CHECK(leaf_ids(t3->generate(meter, env)) == std::set<std::string>{actor("Utility").id()});

  Vertex s3 = action("s3", "evaluate-voltage", "DMS");
  CHECK(leaf_ids(t3->generate(s3, env)) ==
        std::set<std::string>{actor("DMS").id(), message("m1", "RTU-1", "DMS").id()});

  // Two actions by the same actor share one ActorAvailability vertex.
  ArgumentGraph g;
  Vertex s1 = action("s1", "request-measurement", "DMS");
  g.add_vertex(s1);
  g.add_vertex(s3);
  g = apply_extension(g, t3->generate(s1, env));
  g = apply_extension(g, t3->generate(s3, env));
  CHECK(g.successors(actor("DMS").id()).size() == 2);
  CHECK(g.vertex_count() == 4);
}

TEST_CASE("T4 actor to devices") {
  Environment env = fixture_env();
  auto t4 = make_actor_to_devices();
  CHECK(leaf_ids(t4->generate(actor("DMS"), env)) ==
        std::set<std::string>{component("DMS-A", "server", "root").id()});
  CHECK(leaf_ids(t4->generate(actor("RTU-1"), env)) ==
        std::set<std::string>{component("RTU-1", "RTU", "root").id()});
  CHECK_FALSE(t4->match(actor("Utility"), env).positive());

  Models m = fixture_models();
  m.system.actor_map["RTU-1"] = {"RTU", {}};  // every RTU
  Environment wide = validate_environment(m.workflow, m.system, m.attacker);
  CHECK(leaves(t4->generate(actor("RTU-1"), wide)).size() == 2);
}

TEST_CASE("T5 decompose component") {
  Environment env = fixture_env();
  auto t5 = make_decompose_component();

  Vertex rtu = component("RTU-1", "RTU", "root");
  CHECK(leaf_ids(t5->generate(rtu, env)) ==
        std::set<std::string>{component("RTU-1", "RTU", "root/hardware").id(),
                              component("RTU-1", "RTU", "root/software").id(),
                              component("RTU-1", "RTU", "root/network").id(),
                              component("RTU-1", "RTU", "root/power").id()});

  Vertex dms = component("DMS-A", "server", "root");
  LocalExtension ext = t5->generate(dms, env);
  CHECK(leaves(ext).size() == 4);
  CHECK(ext.star.label(dms.id()).notes.at("composition_owner") == "computer");
  CHECK(leaf_ids(t5->generate(component("DMS-A", "server", "root/software"), env)) ==
        std::set<std::string>{component("DMS-A", "server", "root/software/os").id(),
                              component("DMS-A", "server", "root/software/applications").id()});

  CHECK_FALSE(t5->match(component("RTU-1", "RTU", "root/power"), env).positive());
  CHECK_FALSE(t5->match(component("RTU-1", "RTU", "root/bogus"), env).positive());
}

TEST_CASE("T6 attacks on leaves") {
  Environment env = fixture_env();
  auto t6 = make_attacks_on_leaves();

  Vertex power = component("RTU-1", "RTU", "root/power");
  LocalExtension ext = t6->generate(power, env);
  CHECK(leaf_ids(ext) == std::set<std::string>{attack_step("physical-tampering", "RTU-1").id()});
  CHECK(ext.star.label(power.id()).aggregator == Aggregator::kAttackDiscount);
  CHECK(ext.star.label(attack_step("physical-tampering", "RTU-1").id()).prior == 0.6);

  CHECK(leaf_ids(t6->generate(component("DMS-A", "server", "root/network"), env)) ==
        std::set<std::string>{attack_step("denial-of-service", "DMS-A").id()});

  CHECK_FALSE(t6->match(component("RTU-1", "RTU", "root"), env).positive());
  CHECK_FALSE(t6->match(component("RTU-1", "RTU", "root/hardware"), env).positive());
}

TEST_CASE("attack target selection") {
  Models m = fixture_models();
  const TypeHierarchy& types = m.system.type_hierarchy;
  AttackPattern p{"x", {"os", "computer"}, 0.5, {}, {}};
  CHECK(attack_targets(p, "root/software/os", "server", types));
  CHECK_FALSE(attack_targets(p, "root/software/os", "RTU", types));
  CHECK_FALSE(attack_targets(p, "root/software/xos", "server", types));
  p.target.component = "software/os";
  CHECK(attack_targets(p, "root/software/os", "server", types));
}

TEST_CASE("T7 attack requirements") {
  Environment env = fixture_env();
  auto t7 = make_attack_requirements();

  Vertex tamper = attack_step("physical-tampering", "RTU-1");
  LocalExtension ext = t7->generate(tamper, env);
  Vertex access = attacker_property("physical-access-substation");
  CHECK(leaf_ids(ext) == std::set<std::string>{access.id()});
  CHECK(ext.star.label(access.id()).prior == 0.3);

  // Shared prerequisite merges into one vertex.
  ArgumentGraph g;
  Vertex dos1 = attack_step("denial-of-service", "RTU-1");
  Vertex dos2 = attack_step("denial-of-service", "RTU-2");
  g.add_vertex(dos1);
  g.add_vertex(dos2);
  g = apply_extension(g, t7->generate(dos1, env));
  g = apply_extension(g, t7->generate(dos2, env));
  CHECK(g.successors(attacker_property("remote-network-access").id()).size() == 2);

  Models m = fixture_models();
  m.attacker.patterns[0].prerequisites.clear();
  Environment bare = validate_environment(m.workflow, m.system, m.attacker);
  CHECK_FALSE(t7->match(tamper, bare).positive());
}

TEST_CASE("kind discipline") {
  Environment env = fixture_env();
  const std::map<std::string, std::set<VertexKind>> allowed = {
      {"T1", {VertexKind::kGoal}},
      {"T2", {VertexKind::kActionAvailability}},
      {"T3", {VertexKind::kActionAvailability}},
      {"T4", {VertexKind::kActorAvailability}},
      {"T5", {VertexKind::kComponentAvailability}},
      {"T6", {VertexKind::kComponentAvailability}},
      {"T7", {VertexKind::kAttackStep}}};
  std::vector<TemplatePtr> all = {
      make_goal_to_workflow(),  make_previous_steps(),      make_actor_requirements(),
      make_actor_to_devices(),  make_decompose_component(), make_attacks_on_leaves(),
      make_attack_requirements()};
  std::set<VertexKind> seen;
  for (const auto& v : samples())
    seen.insert(v.kind());
  CHECK(seen.size() == std::size(kAllVertexKinds));

  for (const auto& t : all) {
    for (const auto& v : samples()) {
      Score s = t->match(v, env);
      if (!allowed.at(t->id()).count(v.kind())) {
        CHECK_MESSAGE(!s.positive(), t->id() << " fired on " << to_string(v.kind()));
      } else if (s.positive()) {
        LocalExtension ext = t->generate(v, env);
        CHECK(ext.center == v);
        CHECK(validate_star(ext).ok());
      }
    }
  }
}

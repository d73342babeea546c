#include <cstdio>
#include <random>
#include <set>
#include <string>

#include <doctest.h>

#include "sagen/error.h"
#include "sagen/graph.h"
#include "support.h"

using namespace sagen;
using namespace sagen::test;

namespace {

LocalExtension star_of(const Vertex& center, Label center_label,
                       const std::vector<std::pair<Vertex, Label>>& leaves) {
  LocalExtension ext{center, {}};
  ext.star.add_vertex(center, center_label);
  for (const auto& [v, l] : leaves) {
    ext.star.add_vertex(v, l);
    ext.star.add_edge(v.id(), center.id());
  }
  return ext;
}

Label tagged(const std::string& tag, double prior = 0.5) {
  Label l;
  l.prior = prior;
  l.provenance = {tag, "test"};
  return l;
}

std::string run_probe() {
  std::string out;
  FILE* pipe = popen(SAGEN_ID_PROBE, "r");
  REQUIRE(pipe != nullptr);
  char buf[128];
  while (std::fgets(buf, sizeof(buf), pipe))
    out += buf;
  REQUIRE(pclose(pipe) == 0);
  return out;
}

}  // namespace

TEST_CASE("make_vertex gives stable ids from static data") {
  Vertex a = action("s1", "MeterReading", "Utility");
  Vertex b = action("s1", "MeterReading", "Utility");
  CHECK(a.id() == b.id());
  CHECK(a == b);
  CHECK(a.id().size() == 16);
  CHECK(a.attr("actor") == "Utility");

  CHECK(actor("Utility").id() != actor("DMS").id());
  // Same attrs, different kind.
  CHECK(make_vertex(VertexKind::kGoal, {{"property", "x"}, {"subject", "y"}}).id() !=
        make_vertex(VertexKind::kAttackerProperty, {{"property", "x"}}).id());
}

TEST_CASE("make_vertex rejects wrong attribute sets") {
  CHECK_THROWS_AS(make_vertex(VertexKind::kActorAvailability, {}), MissingAttribute);
  CHECK_THROWS_AS(make_vertex(VertexKind::kActorAvailability,
                              {{"actor", "DMS"}, {"color", "red"}}),
                  UnknownAttribute);
  try {
    make_vertex(VertexKind::kAttackStep, {{"attack", "dos"}});
    FAIL("expected MissingAttribute");
  } catch (const MissingAttribute& e) {
    CHECK(e.key() == "device");
  }
}

TEST_CASE("vertex kinds and aggregators round-trip through their names") {
  for (VertexKind kind : kAllVertexKinds)
    CHECK(vertex_kind_from_string(to_string(kind)) == kind);
  for (Aggregator a : {Aggregator::kAnd, Aggregator::kOr, Aggregator::kAttackDiscount})
    CHECK(aggregator_from_string(to_string(a)) == a);
  CHECK_THROWS_AS(vertex_kind_from_string("Nope"), Error);
}

TEST_CASE("goal id is identical across processes") {
  std::string first = run_probe();
  std::string second = run_probe();
  CHECK(first.size() == 17);
  CHECK(first == second);
  CHECK(first == fixture_goal().id() + "\n");
}

TEST_CASE("vertex id soundness over random attribute maps") {
  std::mt19937_64 rng(20240611);
  const char alphabet[] = "ab:=/\\\"0";
  auto random_string = [&] {
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> ch(0, sizeof(alphabet) - 2);
    std::string s;
    for (int i = len(rng); i > 0; --i)
      s += alphabet[ch(rng)];
    return s;
  };
  const std::vector<std::string> keys = {"component", "component_type", "device"};
  std::map<std::string, AttributeMap> by_id;
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    AttributeMap attrs;
    for (const auto& k : keys)
      attrs[k] = random_string();
    std::string id = vertex_id(VertexKind::kComponentAvailability, attrs);
    auto [it, inserted] = by_id.emplace(id, attrs);
    if (!inserted)
      CHECK(it->second == attrs);  // equal id only for equal data
    ++checked;
  }
  CHECK(checked == 20000);
  // Boundary shifts between values must not collide.
  CHECK(vertex_id(VertexKind::kComponentAvailability,
                  {{"component", "ab"}, {"component_type", "c"}, {"device", ""}}) !=
        vertex_id(VertexKind::kComponentAvailability,
                  {{"component", "a"}, {"component_type", "bc"}, {"device", ""}}));
}

TEST_CASE("graph rejects bad edges, priors and collisions") {
  ArgumentGraph g;
  Vertex a = actor("A");
  Vertex b = actor("B");
  CHECK(g.add_vertex(a));
  CHECK_FALSE(g.add_vertex(a));
  CHECK_THROWS_AS(g.add_edge(a.id(), a.id()), InvalidEdge);
  CHECK_THROWS_AS(g.add_edge(a.id(), b.id()), InvalidEdge);
  g.add_vertex(b);
  CHECK(g.add_edge(a.id(), b.id()));
  CHECK_FALSE(g.add_edge(a.id(), b.id()));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_vertex(actor("C"), label_with_prior(1.5)), Error);
  CHECK(g.predecessors(b.id()) == std::vector<std::string>{a.id()});
  CHECK(g.successors(a.id()) == std::vector<std::string>{b.id()});
}

TEST_CASE("validate_star") {
  Vertex a = actor("A"), b = actor("B"), c = actor("C");

  SUBCASE("canonical star is ok") {
    CHECK(validate_star(star_of(c, {}, {{a, {}}, {b, {}}})).ok());
  }
  SUBCASE("extra edge between leaves") {
    LocalExtension ext = star_of(c, {}, {{a, {}}, {b, {}}});
    ext.star.add_edge(a.id(), b.id());
    auto report = validate_star(ext);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0] == "extra edge " + a.id() + "->" + b.id());
  }
  SUBCASE("center alone") {
    LocalExtension ext{c, {}};
    ext.star.add_vertex(c);
    auto report = validate_star(ext);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0] == "at least one additional vertex required");
  }
  SUBCASE("edge pointing away from center") {
    LocalExtension ext{c, {}};
    ext.star.add_vertex(c);
    ext.star.add_vertex(a);
    ext.star.add_edge(c.id(), a.id());
    auto report = validate_star(ext);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0] == "wrong direction " + c.id() + "->" + a.id());
  }
  SUBCASE("disconnected leaf") {
    LocalExtension ext = star_of(c, {}, {{a, {}}});
    ext.star.add_vertex(b);
    auto report = validate_star(ext);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].find("has no edge to the center") != std::string::npos);
  }
}

TEST_CASE("apply_extension label cases") {
  Vertex v1 = actor("v1"), v2 = actor("v2"), v3 = actor("v3");

  SUBCASE("minimal application") {
    ArgumentGraph g;
    g.add_vertex(v1, tagged("old"));
    ArgumentGraph r = apply_extension(g, star_of(v1, tagged("new"), {{v2, tagged("leaf")}}));
    CHECK(r.vertex_count() == 2);
    CHECK(r.contains(Edge{v2.id(), v1.id()}));
    CHECK(r.label(v2.id()) == tagged("leaf"));
    CHECK(g.vertex_count() == 1);  // input untouched
  }
  SUBCASE("existing vertex keeps its old label") {
    ArgumentGraph g;
    g.add_vertex(v1);
    g.add_vertex(v3, tagged("old", 0.1));
    ArgumentGraph r = apply_extension(g, star_of(v1, {}, {{v3, tagged("new", 0.9)}}));
    CHECK(r.label(v3.id()) == tagged("old", 0.1));
  }
  SUBCASE("center takes the star label") {
    ArgumentGraph g;
    g.add_vertex(v1, tagged("a", 0.2));
    ArgumentGraph r = apply_extension(g, star_of(v1, tagged("r", 0.7), {{v2, {}}}));
    CHECK(r.label(v1.id()) == tagged("r", 0.7));
  }
  SUBCASE("errors leave the graph untouched") {
    ArgumentGraph g;
    g.add_vertex(v2);
    CHECK_THROWS_AS(apply_extension(g, star_of(v1, {}, {{v2, {}}})), CenterNotInGraph);
    LocalExtension bad{v2, {}};
    bad.star.add_vertex(v2);
    CHECK_THROWS_AS(apply_extension_in_place(g, bad), StarInvalid);
    CHECK(g.vertex_count() == 1);
  }
}

TEST_CASE("apply_extension property suite: merge rule, monotonicity, idempotence") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pool(0, 14);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  int cases = 0;
  for (int trial = 0; trial < 500; ++trial) {
    ArgumentGraph g;
    std::vector<Vertex> present;
    int n = 1 + pool(rng) % 8;
    for (int i = 0; i < n; ++i) {
      Vertex v = actor("a" + std::to_string(pool(rng)));
      if (g.add_vertex(v, tagged("g" + std::to_string(i), prob(rng))))
        present.push_back(v);
    }
    for (int i = 0; i < n; ++i) {
      const Vertex& s = present[pool(rng) % present.size()];
      const Vertex& t = present[pool(rng) % present.size()];
      if (s.id() != t.id())
        g.add_edge(s.id(), t.id());
    }
    Vertex center = present[pool(rng) % present.size()];
    std::vector<std::pair<Vertex, Label>> leaves;
    std::set<std::string> leaf_ids;
    int k = 1 + pool(rng) % 4;
    for (int i = 0; i < k; ++i) {
      Vertex v = actor("a" + std::to_string(pool(rng)));
      if (v.id() == center.id() || !leaf_ids.insert(v.id()).second)
        continue;
      leaves.emplace_back(v, tagged("s" + std::to_string(i), prob(rng)));
    }
    if (leaves.empty())
      continue;
    LocalExtension ext = star_of(center, tagged("center", prob(rng)), leaves);
    ArgumentGraph r = apply_extension(g, ext);

    for (const auto& v : r.vertices()) {
      const Label* expected;
      if (v.id() == center.id() || (leaf_ids.count(v.id()) && !g.contains(v.id())))
        expected = &ext.star.label(v.id());
      else
        expected = &g.label(v.id());
      CHECK(r.label(v.id()) == *expected);
    }
    for (const auto& v : g.vertices())
      CHECK(r.contains(v.id()));
    for (const auto& e : g.edges())
      CHECK(r.contains(e));
    for (const auto& e : ext.star.edges())
      CHECK(r.contains(e));
    CHECK(apply_extension(r, ext) == r);
    ++cases;
  }
  CHECK(cases >= 200);
}

TEST_CASE("topological order and cycles") {
  ArgumentGraph g;
  Vertex a = actor("a"), b = actor("b"), c = actor("c");
  g.add_vertex(c);
  g.add_vertex(b);
  g.add_vertex(a);
  g.add_edge(a.id(), b.id());
  g.add_edge(b.id(), c.id());
  CHECK(topological_order(g) == std::vector<std::string>{a.id(), b.id(), c.id()});
  CHECK(is_acyclic(g));
  g.add_edge(c.id(), a.id());
  CHECK_FALSE(is_acyclic(g));
  CHECK_THROWS_AS(topological_order(g), CyclicGraph);
}

TEST_CASE("graph equality ignores insertion order") {
  Vertex a = actor("a"), b = actor("b");
  ArgumentGraph x, y;
  x.add_vertex(a);
  x.add_vertex(b);
  x.add_edge(a.id(), b.id());
  y.add_vertex(b);
  y.add_vertex(a);
  y.add_edge(a.id(), b.id());
  CHECK(x == y);
  y.set_label(a.id(), tagged("z"));
  CHECK_FALSE(x == y);
}

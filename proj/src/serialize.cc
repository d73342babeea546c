/// @file serialize.cc
/// Canonical-JSON and DOT writers, and the JSON graph reader.

#include "sagen/serialize.h"

#include <algorithm>
#include <sstream>

#include "json_util.h"
#include "sagen/error.h"

namespace sagen {

namespace {

using detail::Json;

std::vector<const Vertex*> sorted_vertices(const ArgumentGraph& graph) {
  std::vector<const Vertex*> out;
  out.reserve(graph.vertex_count());
  for (const auto& v : graph.vertices())
    out.push_back(&v);
  std::sort(out.begin(), out.end(),
            [](const Vertex* a, const Vertex* b) { return a->id() < b->id(); });
  return out;
}

Json label_to_json(const Label& label) {
  Json out = Json::object();
  out["aggregator"] = std::string(to_string(label.aggregator));
  if (label.prior)
    out["prior"] = *label.prior;
  out["provenance"] = {{"template", label.provenance.template_id},
                       {"stage", label.provenance.stage}};
  if (!label.notes.empty())
    out["notes"] = label.notes;
  return out;
}

std::string_view dot_shape(VertexKind kind) {
  switch (kind) {
    case VertexKind::kGoal:
      return "doubleoctagon";
    case VertexKind::kActionAvailability:
      return "box";
    case VertexKind::kActorAvailability:
      return "ellipse";
    case VertexKind::kMessageAvailability:
      return "note";
    case VertexKind::kComponentAvailability:
      return "box3d";
    case VertexKind::kAttackStep:
      return "octagon";
    case VertexKind::kAttackerProperty:
      return "invtriangle";
  }
  return "box";
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

Label label_from_json(const Json& value, const std::string& path) {
  detail::require_object(value, path);
  detail::check_keys(value, path, {"aggregator", "prior", "provenance", "notes"},
                     false);
  Label label;
  try {
    label.aggregator =
        aggregator_from_string(detail::get_string(value, "aggregator", path));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& err) {
    throw SchemaError(path + ".aggregator", err.what());
  }
  if (value.contains("prior")) {
    double prior = detail::get_number(value, "prior", path);
    if (prior < 0.0 || prior > 1.0)
      throw SchemaError(path + ".prior", "must lie in [0, 1]");
    label.prior = prior;
  }
  std::string prov_path = path + ".provenance";
  const Json& prov = detail::require_object(
      detail::require_member(value, "provenance", path), prov_path);
  detail::check_keys(prov, prov_path, {"template", "stage"}, false);
  for (const char* key : {"template", "stage"}) {
    const Json& field = detail::require_member(prov, key, prov_path);
    if (!field.is_string())
      throw SchemaError(prov_path + "." + key, "expected a string");
  }
  label.provenance.template_id = prov["template"].get<std::string>();
  label.provenance.stage = prov["stage"].get<std::string>();
  if (value.contains("notes")) {
    std::string notes_path = path + ".notes";
    const Json& notes = detail::require_object(value["notes"], notes_path);
    for (const auto& [key, note] : notes.items()) {
      if (!note.is_string())
        throw SchemaError(notes_path + "." + key, "expected a string");
      label.notes.emplace(key, note.get<std::string>());
    }
  }
  return label;
}

}  // namespace

std::string export_json(const ArgumentGraph& graph) {
  Json vertices = Json::array();
  for (const Vertex* v : sorted_vertices(graph)) {
    vertices.push_back({{"id", v->id()},
                        {"kind", std::string(to_string(v->kind()))},
                        {"attrs", v->attrs()},
                        {"label", label_to_json(graph.label(v->id()))}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges())
    edges.push_back({{"source", e.source}, {"target", e.target}});
  Json doc = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
  return detail::dump(doc);
}

std::string export_dot(const ArgumentGraph& graph) {
  std::ostringstream out;
  out << "digraph argument_graph {\n"
      << "  rankdir=BT;\n"
      << "  node [fontname=\"Helvetica\", fontsize=10];\n";
  for (const Vertex* v : sorted_vertices(graph)) {
    std::string text(to_string(v->kind()));
    for (const auto& [key, value] : v->attrs())
      text += "\\n" + dot_escape(key) + "=" + dot_escape(value);
    const Label& label = graph.label(v->id());
    if (label.aggregator != Aggregator::kAnd)
      text += "\\n[" + std::string(to_string(label.aggregator)) + "]";
    out << "  \"" << v->id() << "\" [shape=" << dot_shape(v->kind())
        << ", label=\"" << text << "\"";
    if (v->kind() == VertexKind::kAttackStep ||
        v->kind() == VertexKind::kAttackerProperty)
      out << ", color=red";
    out << "];\n";
  }
  for (const auto& e : graph.edges())
    out << "  \"" << e.source << "\" -> \"" << e.target << "\";\n";
  out << "}\n";
  return out.str();
}

std::string export_graph(const ArgumentGraph& graph, GraphFormat format) {
  return format == GraphFormat::kDot ? export_dot(graph) : export_json(graph);
}

ArgumentGraph parse_graph_json(std::string_view text) {
  Json doc = detail::parse_text(text);
  detail::require_object(doc, "");
  detail::check_keys(doc, "", {"vertices", "edges"}, false);
  const Json& vertices = detail::require_array(
      detail::require_member(doc, "vertices", ""), "vertices");
  const Json& edges =
      detail::require_array(detail::require_member(doc, "edges", ""), "edges");

  ArgumentGraph graph;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string path = "vertices[" + std::to_string(i) + "]";
    const Json& item = detail::require_object(vertices[i], path);
    detail::check_keys(item, path, {"id", "kind", "attrs", "label"}, false);
    std::string id = detail::get_string(item, "id", path);
    VertexKind kind;
    try {
      kind = vertex_kind_from_string(detail::get_string(item, "kind", path));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& err) {
      throw SchemaError(path + ".kind", err.what());
    }
    const Json& attrs_json = detail::require_object(
        detail::require_member(item, "attrs", path), path + ".attrs");
    AttributeMap attrs;
    for (const auto& [key, value] : attrs_json.items()) {
      if (!value.is_string())
        throw SchemaError(path + ".attrs." + key, "expected a string");
      attrs.emplace(key, value.get<std::string>());
    }
    Vertex vertex = [&] {
      try {
        return make_vertex(kind, std::move(attrs));
      } catch (const Error& err) {
        throw SchemaError(path + ".attrs", err.what());
      }
    }();
    if (vertex.id() != id)
      throw SchemaError(path + ".id", "does not match the static data (expected " +
                                          vertex.id() + ")");
    Label label =
        label_from_json(detail::require_member(item, "label", path), path + ".label");
    if (!graph.add_vertex(vertex, std::move(label)))
      throw SchemaError(path + ".id", "duplicate vertex");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string path = "edges[" + std::to_string(i) + "]";
    const Json& item = detail::require_object(edges[i], path);
    detail::check_keys(item, path, {"source", "target"}, false);
    try {
      graph.add_edge(detail::get_string(item, "source", path),
                     detail::get_string(item, "target", path));
    } catch (const InvalidEdge& err) {
      throw SchemaError(path, err.what());
    }
  }
  return graph;
}

}  // namespace sagen

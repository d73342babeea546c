/// @file serialize.h
/// Canonical-JSON and DOT output for argument graphs.

#ifndef SAGEN_SERIALIZE_H_
#define SAGEN_SERIALIZE_H_

#include <string>
#include <string_view>

#include "sagen/graph.h"

namespace sagen {

enum class GraphFormat { kDot, kJson };

/// Vertices sorted by id, edges by (source, target), object keys sorted,
/// two-space indent, trailing newline. Equal graphs give equal bytes.
std::string export_json(const ArgumentGraph& graph);

/// DOT digraph with one node shape per vertex kind; arrows run from
/// prerequisite to dependent.
std::string export_dot(const ArgumentGraph& graph);

std::string export_graph(const ArgumentGraph& graph, GraphFormat format);

/// Reads the canonical-JSON format back. Ids are recomputed from the static
/// data and must match. Cycles are accepted here; evaluation rejects them.
///
/// @throws SyntaxError
/// @throws SchemaError
ArgumentGraph parse_graph_json(std::string_view text);

}  // namespace sagen

#endif  // SAGEN_SERIALIZE_H_

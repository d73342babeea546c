// Subcommands of the sagen tool, callable in-process for testing.

#ifndef SAGEN_TOOLS_COMMANDS_H_
#define SAGEN_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>

#include "sagen/environment.h"

namespace sagen::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kCyclicGraph = 4,
};

struct ModelPaths {
  std::string workflow;
  std::string system;
  std::string attacker;
};

struct GenerateRequest {
  ModelPaths models;
  std::string goal;  ///< "availability:<workflow_id>"
  RunConfig config;
  std::string out_dir = ".";
  bool dot = false;
  bool lenient = false;
};

struct EvaluateRequest {
  std::string graph;
  std::optional<std::string> priors;
  /// Defaults to the graph path with ".eval.json" replacing ".json".
  std::optional<std::string> out;
};

/// Reports go to `out`, diagnostics to `err`.
int cmd_validate(const ModelPaths& models, bool lenient, std::ostream& out,
                 std::ostream& err);
int cmd_generate(const GenerateRequest& request, std::ostream& out,
                 std::ostream& err);
int cmd_evaluate(const EvaluateRequest& request, std::ostream& out,
                 std::ostream& err);
/// Writes DOT to `out_path`, or to `out` when the path is empty.
int cmd_export_dot(const std::string& graph_path, const std::string& out_path,
                   std::ostream& out, std::ostream& err);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void write_file_atomically(const std::string& path, const std::string& data);

}  // namespace sagen::cli

#endif  // SAGEN_TOOLS_COMMANDS_H_

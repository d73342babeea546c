#include "commands.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "sagen/engine.h"
#include "sagen/error.h"
#include "sagen/evaluation.h"
#include "sagen/serialize.h"

namespace sagen::cli {

namespace fs = std::filesystem;

namespace {

/// Input file that could not be read; reported like a parse error.
class ReadError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ReadError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
  try {
    return parse(read_file(path));
  } catch (const SyntaxError& e) {
    throw SyntaxError(path + ":" + e.locus(), e.reason());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.field(), e.reason());
  }
}

/// Parses and validates the three models. Returns an exit code other than
/// kOk on failure, after reporting to `err`.
int load_environment(const ModelPaths& models, bool lenient, RunConfig config,
                     std::optional<Environment>& env, std::ostream& err) {
  ParseOptions options{lenient};
  WorkflowModel workflow;
  SystemModel system;
  AttackerModel attacker;
  try {
    workflow = load(models.workflow, [&](const std::string& text) {
      return parse_workflow(text, options);
    });
    system = load(models.system, [&](const std::string& text) {
      return parse_system(text, options);
    });
    attacker = load(models.attacker, [&](const std::string& text) {
      return parse_attacker(text, options);
    });
  } catch (const ReadError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    env = validate_environment(std::move(workflow), std::move(system),
                               std::move(attacker), std::move(config));
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues())
      err << "error: " << issue.locus << ": " << issue.message << "\n";
    return kValidationError;
  }
  for (const auto& warning : env->warnings)
    err << "warning: " << warning << "\n";
  return kOk;
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& data) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write " + tmp.string());
    out << data;
    out.flush();
    if (!out)
      throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot rename into " + path + ": " + ec.message());
  }
}

int cmd_validate(const ModelPaths& models, bool lenient, std::ostream& out,
                 std::ostream& err) {
  std::optional<Environment> env;
  if (int code = load_environment(models, lenient, {}, env, err); code != kOk)
    return code;
  out << "ok: workflow " << env->workflow.workflow_id << " ("
      << env->workflow.steps.size() << " steps), "
      << env->system.devices.size() << " devices, "
      << env->attacker.patterns.size() << " attack patterns\n";
  return kOk;
}

int cmd_generate(const GenerateRequest& request, std::ostream& out,
                 std::ostream& err) {
  try {
    request.config.check();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  std::optional<Environment> env;
  if (int code = load_environment(request.models, request.lenient,
                                  request.config, env, err);
      code != kOk)
    return code;

  PipelineResult result;
  double millis = 0;
  try {
    Vertex goal = parse_goal(request.goal);
    auto start = std::chrono::steady_clock::now();
    result = run_pipeline(goal, *env);
    millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }

  try {
    fs::create_directories(request.out_dir);
    const Stage last = request.config.stage;
    for (Stage stage : {Stage::kG, Stage::kGs, Stage::kGsa}) {
      if (static_cast<int>(stage) > static_cast<int>(last))
        break;
      const ArgumentGraph& graph = result.at(stage);
      std::string name(to_string(stage));
      write_file_atomically((fs::path(request.out_dir) / (name + ".json")).string(),
                            export_json(graph));
      out << name << ": " << graph.vertex_count() << " vertices, "
          << graph.edge_count() << " edges\n";
      if (stage == last && request.dot)
        write_file_atomically(
            (fs::path(request.out_dir) / (name + ".dot")).string(),
            export_dot(graph));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  char timing[64];
  std::snprintf(timing, sizeof(timing), "generation time: %.3f ms\n", millis);
  out << timing;
  return kOk;
}

int cmd_evaluate(const EvaluateRequest& request, std::ostream& out,
                 std::ostream& err) {
  ArgumentGraph graph;
  PriorOverrides overrides;
  try {
    graph = load(request.graph, parse_graph_json);
    if (request.priors)
      overrides = load(*request.priors, parse_overrides);
  } catch (const ReadError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  EvaluationResult result;
  try {
    result = evaluate(graph, overrides);
  } catch (const CyclicGraph& e) {
    err << "error: " << e.what() << "\n";
    return kCyclicGraph;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  for (const auto& warning : result.warnings)
    err << "warning: " << warning << "\n";

  std::string out_path;
  if (request.out) {
    out_path = *request.out;
  } else {
    fs::path p(request.graph);
    p.replace_extension(".eval.json");
    out_path = p.string();
  }
  try {
    write_file_atomically(out_path, result_to_json(result));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  auto goals = goal_vertices(graph);
  if (goals.empty())
    err << "warning: graph has no Goal vertex\n";
  for (const auto& id : goals) {
    char line[64];
    std::snprintf(line, sizeof(line), "%.6f\n", result.values.at(id));
    out << line;
  }
  return kOk;
}

int cmd_export_dot(const std::string& graph_path, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  ArgumentGraph graph;
  try {
    graph = load(graph_path, parse_graph_json);
  } catch (const ReadError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  std::string dot = export_dot(graph);
  if (out_path.empty()) {
    out << dot;
    return kOk;
  }
  try {
    write_file_atomically(out_path, dot);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace sagen::cli

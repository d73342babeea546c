// sagen: builds security argument graphs from workflow, system, and attacker
// models, evaluates them, and exports them.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.h"
#include "sagen/error.h"

namespace {

void add_model_options(CLI::App* cmd, sagen::cli::ModelPaths& paths) {
  cmd->add_option("--workflow", paths.workflow, "Workflow model (JSON)")
      ->required();
  cmd->add_option("--system", paths.system, "System model (JSON)")
      ->required();
  cmd->add_option("--attacker", paths.attacker, "Attacker model (JSON)")
      ->required();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sagen::cli;

  CLI::App app{"Security argument graph generator"};
  app.require_subcommand(1);

  ModelPaths validate_paths;
  bool validate_lenient = false;
  auto* validate = app.add_subcommand("validate", "Parse and cross-check the model files");
  add_model_options(validate, validate_paths);
  validate->add_flag("--lenient", validate_lenient,
                     "Keep unknown fields instead of rejecting them");

  GenerateRequest gen;
  std::string stage = "gsa";
  std::vector<std::string> disabled;
  std::vector<std::string> enable_only;
  auto* generate = app.add_subcommand("generate", "Build the G, GS, and GSA graphs");
  add_model_options(generate, gen.models);
  generate->add_option("--goal", gen.goal, "Assessment goal, availability:<workflow_id>")
      ->required();
  generate->add_option("--stage", stage, "Last stage to build")
      ->check(CLI::IsMember({"g", "gs", "gsa"}))
      ->capture_default_str();
  generate->add_option("--disable-template", disabled, "Template id to skip (repeatable)");
  generate->add_option("--enable-only", enable_only, "Comma-separated template ids to run")
      ->delimiter(',');
  generate->add_option("--out-dir", gen.out_dir, "Output directory")->capture_default_str();
  generate->add_flag("--dot", gen.dot, "Also write DOT for the last stage");
  generate->add_flag("--lenient", gen.lenient, "Keep unknown fields instead of rejecting them");
  generate->add_option("--max-applications", gen.config.max_applications,
                       "Abort after this many template applications")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  EvaluateRequest eval;
  std::string eval_out;
  std::string priors;
  auto* evaluate = app.add_subcommand("evaluate", "Propagate probabilities to the goal");
  evaluate->add_option("graph", eval.graph, "Graph in canonical JSON")->required();
  evaluate->add_option("--priors", priors, "JSON object of vertex id -> prior");
  evaluate->add_option("--out", eval_out, "Result file (default <graph>.eval.json)");

  std::string dot_graph;
  std::string dot_out;
  auto* export_dot = app.add_subcommand("export-dot", "Convert a JSON graph to DOT");
  export_dot->add_option("graph", dot_graph, "Graph in canonical JSON")->required();
  export_dot->add_option("--out", dot_out, "DOT file (default standard output)");

  CLI11_PARSE(app, argc, argv);

  if (*validate)
    return cmd_validate(validate_paths, validate_lenient, std::cout, std::cerr);
  if (*generate) {
    try {
      gen.config.stage = sagen::stage_from_string(stage);
    } catch (const sagen::ConfigError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kFailure;
    }
    gen.config.disabled = {disabled.begin(), disabled.end()};
    if (!enable_only.empty())
      gen.config.enable_only = std::set<std::string>(enable_only.begin(), enable_only.end());
    return cmd_generate(gen, std::cout, std::cerr);
  }
  if (*evaluate) {
    if (!priors.empty())
      eval.priors = priors;
    if (!eval_out.empty())
      eval.out = eval_out;
    return cmd_evaluate(eval, std::cout, std::cerr);
  }
  return cmd_export_dot(dot_graph, dot_out, std::cout, std::cerr);
}

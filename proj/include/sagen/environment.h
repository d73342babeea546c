/// @file environment.h
/// Validated bundle of model inputs handed to the extension templates.

#ifndef SAGEN_ENVIRONMENT_H_
#define SAGEN_ENVIRONMENT_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sagen/models.h"

namespace sagen {

enum class Stage { kG, kGs, kGsa };

std::string_view to_string(Stage stage);
/// Accepts "g", "gs", "gsa".
///
/// @throws ConfigError
Stage stage_from_string(std::string_view name);

/// Ids of the built-in templates, T1 through T7.
const std::vector<std::string>& builtin_template_ids();

struct RunConfig {
  Stage stage = Stage::kGsa;
  std::set<std::string> disabled;
  std::optional<std::set<std::string>> enable_only;
  std::size_t max_applications = 10000;

  /// @throws ConfigError  An id outside T1..T7.
  void check() const;
  bool is_enabled(const std::string& template_id) const;
};

struct Environment {
  WorkflowModel workflow;
  SystemModel system;
  AttackerModel attacker;
  RunConfig config;
  /// Non-fatal findings, e.g. attacker properties with no stated prior.
  std::vector<std::string> warnings;
};

/// Cross-checks the three models. Every violation is collected before
/// throwing, not just the first.
///
/// @throws ValidationError
Environment validate_environment(WorkflowModel workflow, SystemModel system,
                                 AttackerModel attacker,
                                 RunConfig config = {});

}  // namespace sagen

#endif  // SAGEN_ENVIRONMENT_H_

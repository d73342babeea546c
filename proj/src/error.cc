#include "sagen/error.h"

namespace sagen {

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  std::string msg = std::to_string(issues.size()) + " validation error(s)";
  for (const auto& issue : issues)
    msg += "\n  " + issue.locus + ": " + issue.message;
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(summarize(issues)), issues_(std::move(issues)) {}

}  // namespace sagen

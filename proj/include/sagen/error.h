/// @file error.h
/// Exception hierarchy shared by the graph, model, and engine layers.

#ifndef SAGEN_ERROR_H_
#define SAGEN_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace sagen {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Static attribute required by a vertex kind is absent.
class MissingAttribute : public Error {
 public:
  explicit MissingAttribute(const std::string& key)
      : Error("missing attribute '" + key + "'"), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Static attribute not defined for a vertex kind.
class UnknownAttribute : public Error {
 public:
  explicit UnknownAttribute(const std::string& key)
      : Error("unknown attribute '" + key + "'"), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Two vertices with different static data hashed to the same id.
class IdentityCollision : public Error {
 public:
  using Error::Error;
};

/// Edge or label refers to a vertex that is not in the graph,
/// or an edge is a self-loop.
class InvalidEdge : public Error {
 public:
  using Error::Error;
};

class CenterNotInGraph : public Error {
 public:
  using Error::Error;
};

class StarInvalid : public Error {
 public:
  using Error::Error;
};

class CyclicGraph : public Error {
 public:
  using Error::Error;
};

/// Generation exceeded the configured application ceiling.
class NonTermination : public Error {
 public:
  using Error::Error;
};

class UnknownWorkflow : public Error {
 public:
  using Error::Error;
};

class EmptyWorkflow : public Error {
 public:
  using Error::Error;
};

class WorkflowHasNoUniqueFinalStep : public Error {
 public:
  using Error::Error;
};

class UnknownType : public Error {
 public:
  using Error::Error;
};

class NoCompositionTreeAnywhere : public Error {
 public:
  using Error::Error;
};

class OverrideOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Bad run configuration (unknown template ids, unsupported goal).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. The locus is "line:column".
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& locus, const std::string& reason)
      : Error("syntax error at " + locus + ": " + reason),
        locus_(locus),
        reason_(reason) {}
  const std::string& locus() const { return locus_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string locus_;
  std::string reason_;
};

/// Well-formed input that violates the model schema.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& reason)
      : Error("schema error at " + field + ": " + reason),
        field_(field),
        reason_(reason) {}
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

/// One cross-reference or invariant violation found during validation.
struct Issue {
  std::string locus;  ///< Model and field, e.g. "workflow.steps[2]".
  std::string message;
};

/// Collects every violation found by environment validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const { return issues_; }

 private:
  std::vector<Issue> issues_;
};

}  // namespace sagen

#endif  // SAGEN_ERROR_H_

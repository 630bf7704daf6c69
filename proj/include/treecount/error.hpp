#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treecount {

enum class ErrorKind {
  SelfLoop,
  UnknownVertex,
  UnknownEdge,
  Parse,
  CapExceeded,
  EmptyEdgeSet,
  NotASubgraph,
  NotAPartition,
  NotCliquePartition,
  NotAForest,
  MNotContained,
  NotRegular,
  Disconnected,
  HypothesisViolated,
  UnknownFormula,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// One named precondition of a theorem, evaluated on a concrete instance.
struct Condition {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Structured outcome of a hypothesis check. Formulas refuse to evaluate
/// unless every condition holds.
class HypothesisReport {
 public:
  void add(std::string name, bool holds, std::string detail = {});

  bool ok() const;
  std::vector<std::string> failed() const;
  const std::vector<Condition>& conditions() const { return conditions_; }

  void append(const HypothesisReport& other);

 private:
  std::vector<Condition> conditions_;
};

class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(HypothesisReport report);

  const HypothesisReport& report() const noexcept { return report_; }

 private:
  HypothesisReport report_;
};

/// Throws HypothesisViolated if any condition of `report` fails.
void require(const HypothesisReport& report);

}  // namespace treecount

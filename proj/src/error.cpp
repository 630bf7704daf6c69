#include "treecount/error.hpp"

#include <utility>

namespace treecount {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorKind::NotASubgraph: return "NotASubgraph";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotCliquePartition: return "NotCliquePartition";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::MNotContained: return "MNotContained";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnknownFormula: return "UnknownFormula";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

void HypothesisReport::add(std::string name, bool holds, std::string detail) {
  conditions_.push_back({std::move(name), holds, std::move(detail)});
}

bool HypothesisReport::ok() const {
  for (const auto& c : conditions_) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<std::string> HypothesisReport::failed() const {
  std::vector<std::string> names;
  for (const auto& c : conditions_) {
    if (!c.holds) names.push_back(c.name);
  }
  return names;
}

void HypothesisReport::append(const HypothesisReport& other) {
  conditions_.insert(conditions_.end(), other.conditions_.begin(), other.conditions_.end());
}

namespace {

std::string describe_failures(const HypothesisReport& report) {
  std::string out;
  for (const auto& c : report.conditions()) {
    if (c.holds) continue;
    if (!out.empty()) out += "; ";
    out += c.name;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
  }
  return out;
}

}  // namespace

HypothesisViolated::HypothesisViolated(HypothesisReport report)
    : Error(ErrorKind::HypothesisViolated, describe_failures(report)), report_(std::move(report)) {}

void require(const HypothesisReport& report) {
  if (!report.ok()) throw HypothesisViolated(report);
}

}  // namespace treecount

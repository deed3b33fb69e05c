#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace heckefill {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  nlohmann::json budgets = nlohmann::json::object();
  double millis = 0;
  int shards = 1;
  int shard = 0;
  bool allPass() const;
  nlohmann::json toJson() const;
};

struct VerifyParams {
  int maxCells = 12;          // theorem1 / corollary1 cell budget
  int shards = 1;
  int shard = 0;
  bool failFast = false;
};

// Named acceptance suites behind the `verify` subcommand.
RunReport verifyFigures();
RunReport verifyTheorem1(const VerifyParams& params);
RunReport verifyCorollary1(const VerifyParams& params);
RunReport verifyCounterexamples();
RunReport verifyConjecture(const VerifyParams& params);

RunReport runSuite(const std::string& name, const VerifyParams& params);

}  // namespace heckefill

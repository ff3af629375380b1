#pragma once

// Self-checks run by `agx verify`: each sweep recomputes a family of results
// up to a size limit and compares them with exact values or reference counts.

#include <string>
#include <vector>

#include "agx/enumeration.hpp"

namespace agx {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 8;                // largest order swept by the enumeration-based checks
  int max_construct_n = 40;     // largest order for the constructor sweep
  int relabelings = 10;         // random relabelings per graph in the property sweep
  EnumOptions enumeration;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace agx

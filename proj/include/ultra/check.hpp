#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ultra {

/// Outcome of one exhaustive or sampled check. `witnesses` holds either
/// supporting examples or, on failure, the first counterexample found in
/// canonical order.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> details;

  CheckResult& detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
};

}  // namespace ultra

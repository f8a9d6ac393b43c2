#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eulermod/cli.hpp"

namespace eulermod::cli {

using Parameters = std::vector<std::pair<std::string, std::int64_t>>;

struct ClaimSpec {
  std::string name;
  std::vector<std::string> params;
  /// Per-value precondition; throws UsageError.
  std::function<void(const std::string& param, std::int64_t value)> validate;
  std::function<std::optional<CheckRecord>(const Parameters&)> evaluate;
  /// Highest Euler / Bernoulli indices a tuple reads, for table pre-extension.
  std::function<std::pair<std::int64_t, std::int64_t>(const Parameters&)> table_needs;
};

const ClaimSpec* find_claim(const std::string& name);
std::vector<std::string> claim_names();

std::int64_t param(const Parameters& p, const std::string& name);

}  // namespace eulermod::cli

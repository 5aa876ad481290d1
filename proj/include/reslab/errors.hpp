// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reslab {

// Malformed textual input (element or polynomial literals, CLI values).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration was refused because it would exceed the configured budget.
// `required` is the work estimate, `budget` the limit it was checked against.
struct BudgetError : std::runtime_error {
  std::string required;
  uint64_t budget;
  BudgetError(std::string required_work, uint64_t limit)
      : std::runtime_error("enumeration needs " + required_work +
                           " entries, budget is " + std::to_string(limit)),
        required(std::move(required_work)),
        budget(limit) {}
};

// Default ceiling for exhaustive enumerations (monic streams, brute-force
// counting). Overridable per call and, for the CLI, via RESLAB_BUDGET.
inline constexpr uint64_t kDefaultBudget = 100'000'000;

}  // namespace reslab

#pragma once

#include <stdexcept>
#include <string>

namespace fg {

/// Thrown by bounded searches when the configured budget runs out before a
/// definite answer is reached. Distinct from precondition violations.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fg

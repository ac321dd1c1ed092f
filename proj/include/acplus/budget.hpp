#pragma once
// Optional wall-clock cap for open-ended searches.  When the environment
// variable DSL_BUDGET_SECONDS is set to a positive number, long-running
// search loops poll a BudgetTimer and abort with Error(not_found) once the
// cap is spent; unset or non-positive means uncapped.

#include <chrono>

namespace acp {

// Parsed from the environment once per process; 0 means uncapped.
double budget_seconds();

class BudgetTimer {
 public:
  BudgetTimer() : start_(std::chrono::steady_clock::now()) {}
  bool exceeded() const;
  // Throws Error(not_found) naming `what` once the budget is spent.
  void check(const char* what) const;

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace acp

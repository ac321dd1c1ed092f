#include "acplus/budget.hpp"

#include <cstdlib>
#include <string>

#include "acplus/errors.hpp"

namespace acp {

double budget_seconds() {
  static const double cached = [] {
    const char* env = std::getenv("DSL_BUDGET_SECONDS");
    if (!env) return 0.0;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    return (end != env && v > 0.0) ? v : 0.0;
  }();
  return cached;
}

bool BudgetTimer::exceeded() const {
  double cap = budget_seconds();
  if (cap <= 0.0) return false;
  auto now = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(now - start_).count() > cap;
}

void BudgetTimer::check(const char* what) const {
  if (exceeded())
    throw Error(ErrorCode::not_found,
                std::string(what) +
                    ": wall-clock budget exhausted (DSL_BUDGET_SECONDS)");
}

}  // namespace acp

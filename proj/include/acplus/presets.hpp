#pragma once
// Named demonstration scenarios ("presets").  Each preset runs a scripted
// experiment against the library and reports its observations as JSON;
// presets tied to a quantitative target also carry an "expected" descriptor
// plus per-check verdicts and an aggregate "pass".  Purely qualitative
// presets report with "expected": null and "pass": null.  The smoke flag
// shrinks grids and budgets for a fast qualitative pass.
//
// Runs are deterministic: no randomness, fixed grids, fixed reduction
// orders, so identical options give byte-identical reports.

#include <optional>
#include <string>
#include <vector>

#include "acplus/json_io.hpp"

namespace acp::presets {

struct PresetOptions {
  bool smoke = false;
  std::optional<double> delta;  // witness preset override
  std::optional<int> count;     // witness preset override
};

// Registered names, in registry order.
std::vector<std::string> preset_names();

// Throws Error(not_found) for an unknown name; errors from the underlying
// experiment propagate unchanged.
jsonio::json run_preset(const std::string& name, const PresetOptions& opt = {});

// {"presets": [...], "all_pass": bool} — all_pass aggregates the presets
// that carry expectations.
jsonio::json run_all(const PresetOptions& opt = {});

}  // namespace acp::presets

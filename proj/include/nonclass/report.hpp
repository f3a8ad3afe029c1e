#pragma once

#include <string>

#include "json.hpp"
#include "nonclass/classify.hpp"
#include "nonclass/spec_io.hpp"

namespace nonclass {

/// Machine-readable form of a verdict (the block printed after "--- json ---").
nlohmann::json verdict_to_json(const StateSpec& spec, const State& state, const Verdict& v,
                               const VerdictConfig& config);

/// Human-readable report, a "# cutoffs c1 c2" line, then the JSON block on one line.
std::string format_report(const StateSpec& spec, const State& state, const Verdict& v,
                          const VerdictConfig& config);

}  // namespace nonclass

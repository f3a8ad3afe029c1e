#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonclass/state.hpp"

namespace nonclass {

/// One state family plus parameters, as read from a JSON spec file:
///   {"family": "squeezed_thermal", "params": {"a": 0.5, "beta": 1}, "cutoffs": "auto"}
/// cutoffs is either "auto" or [c1, c2].
struct StateSpec {
  std::string family;
  std::map<std::string, double> params;
  std::optional<std::pair<int, int>> cutoffs;  // nullopt means auto

  friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

struct SweepRange {
  std::string param;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  double value(int step) const;
  friend bool operator==(const SweepRange&, const SweepRange&) = default;
};

/// A StateSpec plus {"sweep": {"param", "min", "max", "steps"}} and optional
/// "samples" / "seed" for the projection scan.
struct SweepSpec {
  StateSpec base;
  SweepRange sweep;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

/// Families and parameter names accepted in spec files.
const std::vector<std::string>& state_families();
std::vector<std::string> family_params(const std::string& family);

/// Throw ParseError on malformed JSON, unknown families or parameters,
/// missing required parameters, or bad cutoffs.
StateSpec parse_state_spec(const std::string& text);
SweepSpec parse_sweep_spec(const std::string& text);
std::string serialize(const StateSpec& spec);
std::string serialize(const SweepSpec& spec);

std::string read_text_file(const std::string& path);

/// Auto-cutoff search: start per mode, double until the state's tail mass is
/// below target or the cap is reached.
struct CutoffPolicy {
  int start = 20;
  int cap = 120;
  double target = 1e-10;

  /// Default policy with the cap taken from NONCLASS_MAX_CUTOFF when set.
  static CutoffPolicy from_env();
};

/// Builds the state; explicit cutoffs are used as given, auto cutoffs follow
/// the policy. Throws CutoffTooSmall when the cap is not enough.
State build_state(const StateSpec& spec, const CutoffPolicy& policy = CutoffPolicy::from_env());

}  // namespace nonclass

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "nonclass/spec_io.hpp"

namespace nonclass {

struct SweepRow {
  double param_value = 0.0;
  double least_eig = 0.0;
  Eigen::Vector4d diagonal = Eigen::Vector4d::Zero();  // A00, A11, A22, A33
  double min_projection = 0.0;
  double mandel_q_mode1 = 0.0;  // NaN for an empty mode
  double mandel_q_mode2 = 0.0;
  int squeezing_onset_marker = 0;
  int cutoff1 = 0;
  int cutoff2 = 0;
  double tail_mass = 0.0;
};

inline constexpr const char* kSweepHeader =
    "param_value,least_eig,A00,A11,A22,A33,min_projection,mandel_q_mode1,mandel_q_mode2,"
    "squeezing_onset_marker";

/// 1 for squeezed_thermal with a >= ln coth(beta/2) and for squeezed_vacuum
/// with a > 0; 0 otherwise.
int squeezing_onset_marker(const StateSpec& spec);

/// Evaluates every step (in parallel when threads > 1); rows come back in
/// parameter order. threads <= 0 uses the hardware concurrency.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const CutoffPolicy& policy, int threads = 0);

/// %.12g with '.' separator, "-0" printed as "0", NaN as "nan".
std::string format_number(double value);

/// One comment line with the per-row cutoffs, the header, then one line per row.
std::string format_csv(const std::vector<SweepRow>& rows);

}  // namespace nonclass

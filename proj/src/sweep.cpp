#include "nonclass/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include "nonclass/classify.hpp"
#include "nonclass/errors.hpp"
#include "nonclass/oracles.hpp"

namespace nonclass {
namespace {

double param_or(const StateSpec& spec, const char* name, double fallback) {
  const auto it = spec.params.find(name);
  return it == spec.params.end() ? fallback : it->second;
}

SweepRow evaluate_row(const SweepSpec& spec, int step, const CutoffPolicy& policy) {
  StateSpec point = spec.base;
  SweepRow row;
  row.param_value = spec.sweep.value(step);
  point.params[spec.sweep.param] = row.param_value;

  const State state = build_state(point, policy);
  row.cutoff1 = state.space().cutoff1();
  row.cutoff2 = state.space().cutoff2();
  row.tail_mass = state.tail_mass();

  const StokesVector n = stokes_vector(state);
  const FluctuationMatrix a = a_matrix(covariance_matrices(state), n);
  row.least_eig = least_eigenvalue(a);
  row.diagonal = a.a.diagonal();
  row.min_projection =
      min_projection(a, spec.samples.value_or(kDefaultSamples), spec.seed.value_or(kDefaultSeed)).value;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    row.mandel_q_mode1 = mandel_q(state, Mode::one);
  } catch (const VacuumMode&) {
    row.mandel_q_mode1 = nan;
  }
  try {
    row.mandel_q_mode2 = mandel_q(state, Mode::two);
  } catch (const VacuumMode&) {
    row.mandel_q_mode2 = nan;
  }
  row.squeezing_onset_marker = squeezing_onset_marker(point);
  return row;
}

}  // namespace

int squeezing_onset_marker(const StateSpec& spec) {
  if (spec.family == "squeezed_thermal") {
    return param_or(spec, "a", 0.0) >= squeezing_onset(param_or(spec, "beta", 1.0)) ? 1 : 0;
  }
  if (spec.family == "squeezed_vacuum") return param_or(spec, "a", 0.0) > 0.0 ? 1 : 0;
  return 0;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const CutoffPolicy& policy, int threads) {
  const int steps = spec.sweep.steps;
  if (threads <= 0) threads = int(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, steps);

  std::vector<SweepRow> rows(steps);
  std::vector<std::exception_ptr> errors(steps);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int step = next++; step < steps; step = next++) {
      try {
        rows[step] = evaluate_row(spec, step, policy);
      } catch (...) {
        errors[step] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = "# cutoffs:";
  for (const auto& row : rows) {
    out += " " + std::to_string(row.cutoff1) + "x" + std::to_string(row.cutoff2);
  }
  out += "\n";
  out += kSweepHeader;
  out += "\n";
  for (const auto& row : rows) {
    out += format_number(row.param_value) + "," + format_number(row.least_eig);
    for (int k = 0; k < 4; ++k) out += "," + format_number(row.diagonal(k));
    out += "," + format_number(row.min_projection) + "," + format_number(row.mandel_q_mode1) + "," +
           format_number(row.mandel_q_mode2) + "," + std::to_string(row.squeezing_onset_marker) + "\n";
  }
  return out;
}

}  // namespace nonclass

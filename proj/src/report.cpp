#include "nonclass/report.hpp"

#include <cstdio>
#include <sstream>

#include "nonclass/sweep.hpp"

namespace nonclass {
namespace {

using json = nlohmann::json;

json matrix_json(const Eigen::Matrix4d& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json batteries_json(const ModeBatteries& b) {
  json out;
  out["mandel_q"] = b.mandel_q ? json(*b.mandel_q) : json(nullptr);
  out["factorial_violations"] = json::array();
  for (const auto& f : b.factorial) {
    out["factorial_violations"].push_back(
        {{"kind", f.kind == FactorialViolation::Kind::lower ? "lower" : "upper"},
         {"m", f.m},
         {"n", f.n},
         {"lhs", f.lhs},
         {"rhs", f.rhs}});
  }
  out["local_pn_violations"] = json::array();
  for (const auto& l : b.local_pn) {
    out["local_pn_violations"].push_back({{"n0", l.n0}, {"least_eig", l.least_eig}});
  }
  return out;
}

std::string fmt(double v) { return format_number(v); }

void print_matrix(std::ostream& out, const Eigen::Matrix4d& m) {
  for (int r = 0; r < 4; ++r) {
    out << "   ";
    for (int c = 0; c < 4; ++c) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %14.8f", m(r, c));
      out << buf;
    }
    out << "\n";
  }
}

void print_batteries(std::ostream& out, const char* label, const ModeBatteries& b) {
  out << label << ": Q = " << (b.mandel_q ? fmt(*b.mandel_q) : std::string("undefined (empty mode)"))
      << ", factorial violations " << b.factorial.size() << ", local p(n) violations "
      << b.local_pn.size() << "\n";
  for (const auto& f : b.factorial) {
    out << "    " << (f.kind == FactorialViolation::Kind::lower ? "g_m g_n <= g_{m+n}" : "g_{m+n} <= sqrt(g_2m g_2n)")
        << " fails at m=" << f.m << " n=" << f.n << ": " << fmt(f.lhs) << " > " << fmt(f.rhs) << "\n";
  }
  for (const auto& l : b.local_pn) {
    out << "    local window n0=" << l.n0 << " least eigenvalue " << fmt(l.least_eig) << "\n";
  }
}

}  // namespace

json verdict_to_json(const StateSpec& spec, const State& state, const Verdict& v,
                     const VerdictConfig& config) {
  json out;
  out["family"] = spec.family;
  out["params"] = spec.params;
  out["cutoffs"] = {state.space().cutoff1(), state.space().cutoff2()};
  out["tail_mass"] = v.tail_mass;
  out["n"] = {v.n.n(0), v.n.n(1), v.n.n(2), v.n.n(3)};
  out["A"] = matrix_json(v.a.a);
  out["least_eig"] = v.least_eig;
  out["A_psd"] = v.a_psd;
  out["any_state_psd_ok"] = v.any_state_psd_ok;
  out["min_projection"] = {{"value", v.projection.value},
                           {"samples", v.projection.samples},
                           {"seed", config.seed},
                           {"refinement_steps", v.projection.refinement_steps},
                           {"total_number_minimal", !v.projection.argmin.has_value()}};
  out["phase_insensitive_least_eig"] = v.phase_insensitive_least_eig;
  out["lee"] = {{"lhs", v.lee.lhs},
                {"a33", v.lee.a33},
                {"n3", v.lee.n3},
                {"residual_a33", v.lee.residual_a33},
                {"residual_q", v.lee.residual_q},
                {"violated", v.lee.violated},
                {"sharpened_violated", v.lee.sharpened_violated}};
  out["mode1"] = batteries_json(v.mode1);
  out["mode2"] = batteries_json(v.mode2);
  out["strongly_nonclassical_certified"] = v.strongly_nonclassical_certified;
  out["verdict"] = v.verdict_text;
  return out;
}

std::string format_report(const StateSpec& spec, const State& state, const Verdict& v,
                          const VerdictConfig& config) {
  std::ostringstream out;
  out << "state: " << spec.family;
  for (const auto& [key, value] : spec.params) out << " " << key << "=" << fmt(value);
  out << "\n";
  out << "# cutoffs " << state.space().cutoff1() << " " << state.space().cutoff2() << "\n";
  out << "tail mass: " << fmt(v.tail_mass) << "\n";
  out << "n_mu: " << fmt(v.n.n(0)) << " " << fmt(v.n.n(1)) << " " << fmt(v.n.n(2)) << " "
      << fmt(v.n.n(3)) << "\n";
  out << "A:\n";
  print_matrix(out, v.a.a);
  out << "least eigenvalue of A: " << fmt(v.least_eig) << (v.a_psd ? " (A PSD)" : " (A indefinite)")
      << "\n";
  out << "min single-mode projection: " << fmt(v.projection.value) << " over " << v.projection.samples
      << " samples + " << v.projection.refinement_steps << " refinement steps (seed " << config.seed
      << ")\n";
  out << "phase-insensitive 2x2 least eigenvalue: " << fmt(v.phase_insensitive_least_eig) << "\n";
  out << "covariance and anticommutator PSD: " << (v.any_state_psd_ok ? "yes" : "no") << "\n";
  out << "Lee: lhs " << fmt(v.lee.lhs) << ", A33 " << fmt(v.lee.a33) << ", n3 " << fmt(v.lee.n3)
      << ", identity residuals " << fmt(v.lee.residual_a33) << " / " << fmt(v.lee.residual_q)
      << (v.lee.violated ? ", violated" : "") << (v.lee.sharpened_violated ? ", A33 < 0" : "") << "\n";
  print_batteries(out, "mode 1", v.mode1);
  print_batteries(out, "mode 2", v.mode2);
  out << "verdict: " << v.verdict_text << "\n";
  out << "--- json ---\n";
  out << verdict_to_json(spec, state, v, config).dump() << "\n";
  return out.str();
}

}  // namespace nonclass

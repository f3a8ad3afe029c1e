#include "nonclass/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "nonclass/builders.hpp"
#include "nonclass/classify.hpp"
#include "nonclass/errors.hpp"
#include "nonclass/oracles.hpp"
#include "nonclass/spec_io.hpp"
#include "nonclass/su2.hpp"

namespace nonclass {
namespace {

using Check = std::function<std::string()>;

std::string fail_if(bool bad, const std::string& what, double value) {
  if (!bad) return {};
  std::ostringstream msg;
  msg << what << " (" << value << ")";
  return msg.str();
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

std::string coherent_null() {
  const State s = coherent_state(FockSpace(25, 25), {1.0, 0.0}, {0.0, 1.0});
  const double worst = a_matrix(s).a.cwiseAbs().maxCoeff();
  if (auto e = fail_if(worst > 1e-9, "|A|max for coherent state", worst); !e.empty()) return e;
  return fail_if(std::abs(mandel_q(s, Mode::one)) > 1e-9, "coherent Q", mandel_q(s, Mode::one));
}

std::string number_q() {
  const double q = mandel_q(number_state(FockSpace(8, 8), 5, 0), Mode::one);
  return fail_if(std::abs(q + 1.0) > 1e-12, "number state Q != -1", q);
}

std::string thermal_q() {
  const double nbar = 1.0 / (std::exp(1.0) - 1.0);
  const double q = mandel_q(thermal_state(FockSpace(60, 60), 1.0), Mode::one);
  return fail_if(std::abs(q - reference_q(ReferenceKind::thermal, nbar)) > 1e-9, "thermal Q", q);
}

std::string squeezed_vacuum_oracle() {
  const FluctuationMatrix a = a_matrix(squeezed_vacuum(FockSpace(60, 60), 0.5));
  const Eigen::Vector4d want = a_matrix_squeezed_vacuum(0.5).diagonal();
  const Eigen::Matrix4d off = a.a - Eigen::Matrix4d(a.a.diagonal().asDiagonal());
  if (auto e = fail_if(off.cwiseAbs().maxCoeff() > 1e-8, "off-diagonal A", off.cwiseAbs().maxCoeff());
      !e.empty()) {
    return e;
  }
  for (int k = 1; k < 4; ++k) {
    if (rel_err(a.a(k, k), want(k)) > 1e-6) return fail_if(true, "A" + std::to_string(k) + std::to_string(k), a.a(k, k));
  }
  return {};
}

std::string squeezed_thermal_oracle() {
  const FluctuationMatrix a = a_matrix(squeezed_thermal(FockSpace(100, 100), 0.5, 0.0, 1.0));
  const Eigen::Vector4d want = a_matrix_squeezed_thermal(0.5, 1.0).diagonal();
  for (int k = 1; k < 4; ++k) {
    if (rel_err(a.a(k, k), want(k)) > 1e-5) return fail_if(true, "A" + std::to_string(k) + std::to_string(k), a.a(k, k));
  }
  return {};
}

std::string dual_path() {
  const CovarianceMatrix c = covariance_matrices(pair_coherent(FockSpace(40, 40), {2.0, 0.0}, 1));
  return fail_if(c.decomposition_residual > 1e-9, "decomposition residual", c.decomposition_residual);
}

std::string commutators() {
  const double r = commutator_check(coherent_state(FockSpace(25, 25), {1.0, 0.0}, {0.0, 1.0 / std::sqrt(2.0)}));
  return fail_if(r > 1e-9, "commutator residual", r);
}

std::string lee_identity() {
  const LeeReport sv = lee_report(squeezed_vacuum(FockSpace(50, 50), 0.5));
  if (auto e = fail_if(std::max(sv.residual_a33, sv.residual_q) > 1e-9, "Lee residual", sv.residual_a33);
      !e.empty()) {
    return e;
  }
  const LeeReport n11 = lee_report(number_state(FockSpace(4, 4), 1, 1));
  return fail_if(n11.lhs != -2.0 || !n11.violated, "Lee lhs for |1,1>", n11.lhs);
}

std::string equivariance() {
  const FockSpace space(30, 30);
  const State s = coherent_state(space, {0.8, 0.3}, {-0.2, 0.5});
  const U2Element u = beamsplitter(0.3, 0.7);
  const MomentMatrix moved = gamma_moment_matrix(conjugate(s, u2_unitary(space, u)), 2);
  const MomentMatrix rotated = transform_gamma(gamma_moment_matrix(s, 2), u);
  const double err = (moved.gamma - rotated.gamma).cwiseAbs().maxCoeff();
  return fail_if(err > 1e-9, "gamma^(1) equivariance", err);
}

std::string projection_identity() {
  const FockSpace space(40, 40);
  const State s = pair_coherent(space, {2.0, 0.0}, 1);
  const FluctuationMatrix a = a_matrix(s);
  std::mt19937_64 rng(7);
  for (int k = 0; k < 5; ++k) {
    const ModeVector alpha = random_mode_vector(rng);
    const auto [n, n2] = single_mode_number_ops(space, alpha);
    const double mean = expect(s, n).real();
    const double direct = expect(s, n2).real() - mean * mean - mean;
    const double err = std::abs(projection_value(a, alpha) - direct);
    if (err > 1e-9) return fail_if(true, "projection identity", err);
  }
  return {};
}

std::string kerr() {
  const State s = coherent_state(FockSpace(30, 30), {1.5, 0.0}, {0.0, 0.0});
  const State k = kerr_evolve(s, 0.3, M_PI, 1.0);
  const double dp = (s.populations() - k.populations()).cwiseAbs().maxCoeff();
  if (auto e = fail_if(dp > 1e-12, "Kerr population change", dp); !e.empty()) return e;
  return fail_if(std::abs(k.purity() - 1.0) > 1e-10, "Kerr purity", k.purity());
}

std::string pair_coherent_subpoissonian() {
  const State s = pair_coherent(FockSpace(40, 40), {2.0, 0.0}, 0);
  const double q2 = mandel_q(s, Mode::two);
  if (auto e = fail_if(!(q2 < 0.0), "pair-coherent mode-2 Q", q2); !e.empty()) return e;
  const double l = least_eigenvalue(a_matrix(s));
  return fail_if(!(l < 0.0), "pair-coherent least eigenvalue", l);
}

std::string factorial_battery() {
  const auto thermal = factorial_inequality_report(factorial_moments(thermal_state(FockSpace(60, 60), 1.0), Mode::one, 6));
  if (!thermal.empty()) return "thermal state violates a factorial-moment inequality";
  const auto number = factorial_inequality_report(factorial_moments(number_state(FockSpace(6, 6), 3, 0), Mode::one, 2));
  if (number.empty()) return "number state |3,0> shows no factorial-moment violation";
  return {};
}

std::string corrupted_tensor_caught() {
  OrderingTensors bad = OrderingTensors::canonical();
  bad.l[1][1][0] = 0.5;
  try {
    covariance_matrices(coherent_state(FockSpace(20, 20), {1.0, 0.0}, {0.5, 0.0}), bad);
  } catch (const DecompositionMismatch&) {
    return {};
  }
  return "corrupted l tensor was not detected";
}

std::string small_cap_caught() {
  StateSpec spec;
  spec.family = "squeezed_vacuum";
  spec.params["a"] = 1.0;
  CutoffPolicy policy;
  policy.cap = 5;
  try {
    build_state(spec, policy);
  } catch (const CutoffTooSmall&) {
    return {};
  }
  return "cutoff cap 5 accepted for squeezed vacuum a=1";
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"coherent state has A = 0 and Q = 0", coherent_null},
      {"number state Q = -1", number_q},
      {"thermal Q equals mean occupation", thermal_q},
      {"squeezed vacuum A11..A33 match closed form", squeezed_vacuum_oracle},
      {"squeezed thermal A11..A33 match closed form", squeezed_thermal_oracle},
      {"anticommutator decomposition agrees with operator products", dual_path},
      {"number-operator commutators close on the U(2) algebra", commutators},
      {"Lee identity and |1,1> violation", lee_identity},
      {"gamma^(1) transforms with D^(1)", equivariance},
      {"projection equals single-mode variance combination", projection_identity},
      {"Kerr evolution keeps p(n) and purity", kerr},
      {"pair-coherent state is subpoissonian in mode 2", pair_coherent_subpoissonian},
      {"factorial-moment battery", factorial_battery},
      {"negative control: corrupted l tensor", corrupted_tensor_caught},
      {"negative control: cutoff cap too small", small_cap_caught},
  };
  std::vector<SelftestCheck> out;
  for (const auto& [name, check] : checks) {
    SelftestCheck result;
    result.name = name;
    try {
      result.detail = check();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("unexpected error: ") + e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace nonclass

#include "nonclass/classify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

double min_eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (m + m.transpose()),
                                                       Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// xi for alpha = (cos theta/2, e^{i phi} sin theta/2)
Eigen::Vector4d xi_from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return 0.5 * Eigen::Vector4d(1.0, s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

double bare_mode_q(const State& state, Mode mode) {
  const Eigen::VectorXd p = marginal(state, mode);
  double mean = 0.0, second = 0.0;
  for (Index n = 0; n < p.size(); ++n) {
    mean += double(n) * p(n);
    second += double(n) * double(n) * p(n);
  }
  if (mean <= 1e-12) throw VacuumMode("Mandel Q undefined: mode has no photons");
  return (second - mean * mean - mean) / mean;
}

// Total photon number is at most cutoff1 + cutoff2, so c1 + c2 + 2 bounds
// second-order moments of the N_mu on the discarded weight.
double second_order_bound(const State& state) {
  return truncation_bound(state.tail_mass(), state.space().cutoff1() + state.space().cutoff2() + 2, 2);
}

ModeBatteries mode_batteries(const State& state, Mode mode, const VerdictConfig& config) {
  ModeBatteries out;
  const int cutoff = state.space().cutoff(mode);
  const std::vector<double> gammas = factorial_moments(state, mode, std::min(config.m_max, cutoff));
  std::vector<double> uncertainty;
  for (int k = 0; k < int(gammas.size()); ++k) {
    uncertainty.push_back(truncation_bound(state.tail_mass(), cutoff + 1, k));
  }
  out.factorial = factorial_inequality_report(gammas, uncertainty);
  const Eigen::VectorXd p = marginal(state, mode);
  out.local_pn = local_pn_scan(p, config.n0_max, 10.0 * state.tail_mass());
  try {
    out.mandel_q = bare_mode_q(state, mode);
  } catch (const VacuumMode&) {
    out.mandel_q.reset();
  }
  return out;
}

}  // namespace

FluctuationMatrix a_matrix(const CovarianceMatrix& cov, const StokesVector& n,
                           const OrderingTensors& tensors) {
  FluctuationMatrix out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      double ln = 0.0;
      for (int lambda = 0; lambda < 4; ++lambda) ln += tensors.l[mu][nu][lambda] * n.n(lambda);
      out.a(mu, nu) = cov.delta(mu, nu) - ln;
    }
  }
  out.a = 0.5 * (out.a + out.a.transpose()).eval();
  return out;
}

FluctuationMatrix a_matrix(const State& state, const OrderingTensors& tensors) {
  return a_matrix(covariance_matrices(state, tensors), stokes_vector(state), tensors);
}

double least_eigenvalue(const FluctuationMatrix& a) { return min_eig(a.a); }

double psd_floor(const Eigen::MatrixXd& m) {
  return 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

double truncation_bound(double tail_mass, int levels, int order) {
  return 2.0 * tail_mass * std::pow(double(levels), order);
}

bool is_psd(const Eigen::MatrixXd& m) { return min_eig(m) >= -psd_floor(m); }

bool is_psd(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (m + m.adjoint()),
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

double projection_value(const FluctuationMatrix& a, const XiVector& xi) {
  return xi.xi.dot(a.a * xi.xi);
}

double projection_value(const FluctuationMatrix& a, const ModeVector& alpha) {
  return projection_value(a, xi_vector(alpha));
}

ProjectionScan min_projection(const FluctuationMatrix& a, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw InvalidParameter("min_projection needs at least one sample");
  std::mt19937_64 rng(seed);
  auto value_at = [&](double theta, double phi) {
    const Eigen::Vector4d xi = xi_from_angles(theta, phi);
    return xi.dot(a.a * xi);
  };

  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    const Eigen::Vector2cd alpha = random_mode_vector(rng).alpha();
    // rotate away the global phase so alpha_1 is real and non-negative
    const double theta = 2.0 * std::atan2(std::abs(alpha(1)), std::abs(alpha(0)));
    const double phi = std::arg(alpha(1)) - std::arg(alpha(0));
    const double v = value_at(theta, phi);
    if (v < best) {
      best = v;
      best_theta = theta;
      best_phi = phi;
    }
  }

  ProjectionScan out;
  out.samples = n_samples;
  double step = 0.05;
  for (int it = 0; it < 100; ++it) {
    ++out.refinement_steps;
    bool moved = false;
    for (const auto& [dt, dp] : {std::pair{step, 0.0}, std::pair{-step, 0.0}, std::pair{0.0, step},
                                 std::pair{0.0, -step}}) {
      const double v = value_at(best_theta + dt, best_phi + dp);
      if (v < best) {
        best = v;
        best_theta += dt;
        best_phi += dp;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }

  const double total = a.a(0, 0);
  if (total < best) {
    out.value = total;
  } else {
    out.value = best;
    out.argmin = ModeVector::from_angles(best_theta, best_phi);
  }
  return out;
}

double mandel_q(const State& state, Mode mode) { return bare_mode_q(state, mode); }

double mandel_q(const FluctuationMatrix& a, const StokesVector& n, const XiVector& xi) {
  const double mean = xi.xi.dot(n.n);
  if (mean <= 1e-12) throw VacuumMode("Mandel Q undefined: mode has no photons");
  return xi.xi.dot(a.a * xi.xi) / mean;
}

double mandel_q(const State& state, const ModeVector& alpha) {
  const CovarianceMatrix cov = covariance_matrices(state);
  const StokesVector n = stokes_vector(state);
  return mandel_q(a_matrix(cov, n), n, xi_vector(alpha));
}

LeeReport lee_report(const State& state) {
  const StokesVector n = stokes_vector(state);
  return lee_report(state, n, q_matrix(state), a_matrix(covariance_matrices(state), n));
}

LeeReport lee_report(const State& state, const StokesVector& n, const QMatrix& q,
                     const FluctuationMatrix& a) {
  const FockSpace& space = state.space();
  const Eigen::VectorXd p = state.populations();
  LeeReport out;
  for (Index i = 0; i < p.size(); ++i) {
    const auto [n1, n2] = space.occupation(i);
    out.lhs += p(i) * (double(n1) * (n1 - 1) + double(n2) * (n2 - 1) - 2.0 * n1 * n2);
  }
  out.a33 = a.a(3, 3);
  out.n3 = n.n(3);
  out.residual_a33 = std::abs(out.lhs - (out.a33 + out.n3 * out.n3));
  out.residual_q = std::abs(out.lhs - 0.5 * (q.q(0, 0) + q.q(1, 1) - q.q(2, 2)).real());
  const double tol = 1e-7 * std::max(1.0, std::abs(out.lhs));
  if (out.residual_a33 > tol || out.residual_q > tol) {
    std::ostringstream msg;
    msg << "Lee identity residuals " << out.residual_a33 << ", " << out.residual_q;
    throw IdentityMismatch(msg.str());
  }
  const double floor = std::max(1e-9 * std::max(1.0, std::abs(out.lhs)), second_order_bound(state));
  out.violated = out.lhs < -floor;
  out.sharpened_violated = out.a33 < -floor;
  return out;
}

std::vector<FactorialViolation> factorial_inequality_report(const std::vector<double>& gammas,
                                                            const std::vector<double>& uncertainty) {
  if (!uncertainty.empty() && uncertainty.size() != gammas.size()) {
    throw DimensionMismatch("factorial moment uncertainties do not match the moments");
  }
  std::vector<FactorialViolation> out;
  const int top = int(gammas.size()) - 1;
  auto u = [&](int k) { return uncertainty.empty() ? 0.0 : uncertainty[k]; };
  auto exceeds = [](double lhs, double rhs, double slack) {
    return lhs - rhs > 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1e-300}) + slack;
  };
  for (int m = 1; 2 * m <= top; ++m) {
    for (int n = m; 2 * n <= top; ++n) {
      const double product = gammas[m] * gammas[n];
      const double middle = gammas[m + n];
      const double bound = std::sqrt(std::max(0.0, gammas[2 * m] * gammas[2 * n]));
      const double product_slack = (gammas[m] + u(m)) * (gammas[n] + u(n)) - product;
      const double bound_slack =
          std::sqrt(std::max(0.0, (gammas[2 * m] + u(2 * m)) * (gammas[2 * n] + u(2 * n)))) - bound;
      if (exceeds(product, middle, product_slack + u(m + n))) {
        out.push_back({FactorialViolation::Kind::lower, m, n, product, middle});
      }
      if (exceeds(middle, bound, bound_slack + u(m + n))) {
        out.push_back({FactorialViolation::Kind::upper, m, n, middle, bound});
      }
    }
  }
  return out;
}

Eigen::Matrix2d local_pn_matrix(const Eigen::VectorXd& p, int n0) {
  if (n0 < 0 || n0 + 2 >= p.size()) {
    std::ostringstream msg;
    msg << "local p(n) window at n0=" << n0 << " exceeds distribution of length " << p.size();
    throw OutOfRange(msg.str());
  }
  const double k = n0 + 1.0;
  Eigen::Matrix2d m;
  m << p(n0), k * p(n0 + 1), k * p(n0 + 1), k * (k + 1.0) * p(n0 + 2);
  return m;
}

double local_pn_value(const Eigen::VectorXd& p, int n0, double a, double b) {
  const Eigen::Matrix2d m = local_pn_matrix(p, n0);
  const Eigen::Vector2d v(a, b);
  return v.dot(m * v);
}

std::vector<LocalPnViolation> local_pn_scan(const Eigen::VectorXd& p, int n0_max, double floor) {
  std::vector<LocalPnViolation> out;
  const int cutoff = int(p.size()) - 1;
  for (int n0 = 0; n0 <= n0_max && n0 + 2 <= cutoff - 2; ++n0) {
    const Eigen::Matrix2d m = local_pn_matrix(p, n0);
    const double eig = min_eig(m);
    if (eig < -std::max(floor, 1e-9 * m.trace())) out.push_back({n0, eig});
  }
  return out;
}

Verdict verdict(const State& state, const VerdictConfig& config) {
  Verdict v;
  v.tail_mass = state.tail_mass();
  v.n = stokes_vector(state);
  v.q = q_matrix(state);
  v.covariance = covariance_matrices(state);
  v.a = a_matrix(v.covariance, v.n);

  v.any_state_psd_ok = is_psd(Eigen::MatrixXd(v.covariance.delta)) &&
                       is_psd(Eigen::MatrixXd(v.covariance.anticomm)) &&
                       is_psd(Eigen::MatrixXcd(v.q.q));
  v.least_eig = least_eigenvalue(v.a);
  v.floor = std::max(psd_floor(v.a.a), second_order_bound(state));
  const double floor = v.floor;
  v.a_psd = v.least_eig >= -floor;
  v.projection = min_projection(v.a, config.samples, config.seed);

  Eigen::Matrix2d phase_insensitive;
  phase_insensitive << v.a.a(0, 0), v.a.a(0, 3), v.a.a(3, 0), v.a.a(3, 3);
  v.phase_insensitive_least_eig = min_eig(phase_insensitive);

  v.lee = lee_report(state, v.n, v.q, v.a);
  v.mode1 = mode_batteries(state, Mode::one, config);
  v.mode2 = mode_batteries(state, Mode::two, config);

  // Q is compared through its numerator (Delta n)^2 - <n>, a second-order moment.
  auto bare_violation = [&](const ModeBatteries& b, double mean) {
    return !b.factorial.empty() || !b.local_pn.empty() || (b.mandel_q && *b.mandel_q * mean < -floor);
  };
  v.strongly_nonclassical_certified = bare_violation(v.mode1, 0.5 * (v.n.n(0) + v.n.n(3))) ||
                                      bare_violation(v.mode2, 0.5 * (v.n.n(0) - v.n.n(3)));

  const bool excluded = !v.a_psd || v.strongly_nonclassical_certified || v.lee.violated ||
                        v.lee.sharpened_violated || v.projection.value < -floor ||
                        v.phase_insensitive_least_eig < -floor;
  v.verdict_text = excluded ? kVerdictNotSemiI : kVerdictClassicalOrSemiI;
  return v;
}

}  // namespace nonclass

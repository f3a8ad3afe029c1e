#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nonclass/moments.hpp"
#include "nonclass/su2.hpp"

namespace nonclass {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultSamples = 100000;

/// A_mu_nu = Delta(N_mu, N_nu) - l_mu_nu_lambda n_lambda
struct FluctuationMatrix {
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
};

FluctuationMatrix a_matrix(const State& state,
                           const OrderingTensors& tensors = OrderingTensors::canonical());
FluctuationMatrix a_matrix(const CovarianceMatrix& cov, const StokesVector& n,
                           const OrderingTensors& tensors = OrderingTensors::canonical());

double least_eigenvalue(const FluctuationMatrix& a);

/// Eigenvalue floor below which a matrix counts as indefinite: 1e-9 * max(1, |M|max).
double psd_floor(const Eigen::MatrixXd& m);

/// Error bound on an order-k moment from truncation: 2 tail_mass levels^k,
/// with levels the first excluded photon number.
///
/// Cutting a distribution off and renormalizing narrows it, so a truncated
/// coherent state is slightly subpoissonian. Violations smaller than this
/// bound are not reported.
double truncation_bound(double tail_mass, int levels, int order);
bool is_psd(const Eigen::MatrixXd& m);
bool is_psd(const Eigen::MatrixXcd& m);

/// xi(alpha)^T A xi(alpha) = (Delta N(alpha))^2 - <N(alpha)>
double projection_value(const FluctuationMatrix& a, const ModeVector& alpha);
double projection_value(const FluctuationMatrix& a, const XiVector& xi);

struct ProjectionScan {
  double value = 0.0;
  /// Minimizing mode; empty when the total-number projection A00 is lowest.
  std::optional<ModeVector> argmin;
  int samples = 0;
  int refinement_steps = 0;
};

/// Seeded sphere sampling plus coordinate descent in (theta, phi) from the
/// best sample, compared against the total-number value A00. An upper bound
/// on the true minimum over single-mode projections.
ProjectionScan min_projection(const FluctuationMatrix& a, int n_samples = kDefaultSamples,
                              std::uint64_t seed = kDefaultSeed);

/// ((Delta N)^2 - <N>) / <N>. Throws VacuumMode if <N> <= 1e-12.
double mandel_q(const State& state, Mode mode);
double mandel_q(const State& state, const ModeVector& alpha);
/// Contraction form xi A xi / xi.n for precomputed moments.
double mandel_q(const FluctuationMatrix& a, const StokesVector& n, const XiVector& xi);

struct LeeReport {
  double lhs = 0.0;
  /// |lhs - (A33 + n3^2)|
  double residual_a33 = 0.0;
  /// |lhs - 1/2 (q11 + q22 - q33)|
  double residual_q = 0.0;
  double a33 = 0.0;
  double n3 = 0.0;
  bool violated = false;
  bool sharpened_violated = false;
};

/// Throws IdentityMismatch if either residual exceeds 1e-7 * max(1, |lhs|).
/// Violations must exceed 1e-9 * max(1, |lhs|) and the second-order truncation bound.
LeeReport lee_report(const State& state);
/// Same, reusing moments already computed for the state.
LeeReport lee_report(const State& state, const StokesVector& n, const QMatrix& q,
                     const FluctuationMatrix& a);

struct FactorialViolation {
  enum class Kind { lower, upper };
  Kind kind = Kind::lower;
  int m = 0;
  int n = 0;
  /// lower: gamma_m gamma_n vs gamma_{m+n}; upper: gamma_{m+n} vs sqrt(gamma_2m gamma_2n)
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Checks gamma_m gamma_n <= gamma_{m+n} <= sqrt(gamma_2m gamma_2n) for
/// 1 <= m <= n with 2n in range; relative slack 1e-9 plus the propagated
/// absolute uncertainty of each gamma_k when given.
std::vector<FactorialViolation> factorial_inequality_report(const std::vector<double>& gammas,
                                                            const std::vector<double>& uncertainty = {});

/// a^2 p(n0) + 2(n0+1) a b p(n0+1) + (n0+1)(n0+2) b^2 p(n0+2)
double local_pn_value(const Eigen::VectorXd& p, int n0, double a, double b);
Eigen::Matrix2d local_pn_matrix(const Eigen::VectorXd& p, int n0);

struct LocalPnViolation {
  int n0 = 0;
  double least_eig = 0.0;
};

/// n0 = 0 .. n0_max, skipping windows that reach the outermost two levels.
/// A window is violated when its least eigenvalue is below -floor.
std::vector<LocalPnViolation> local_pn_scan(const Eigen::VectorXd& p, int n0_max, double floor);

struct VerdictConfig {
  int samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  int m_max = 6;
  int n0_max = 10;
};

struct ModeBatteries {
  std::vector<FactorialViolation> factorial;
  std::vector<LocalPnViolation> local_pn;
  /// nullopt when the mode is empty
  std::optional<double> mandel_q;
};

struct Verdict {
  StokesVector n;
  QMatrix q;
  CovarianceMatrix covariance;
  FluctuationMatrix a;
  double tail_mass = 0.0;

  bool any_state_psd_ok = false;
  bool a_psd = false;
  double least_eig = 0.0;
  /// Threshold for every second-order test: max(psd_floor(A), truncation bound).
  double floor = 0.0;
  ProjectionScan projection;
  /// least eigenvalue of [[A00, A03], [A30, A33]]
  double phase_insensitive_least_eig = 0.0;
  LeeReport lee;
  ModeBatteries mode1;
  ModeBatteries mode2;

  bool strongly_nonclassical_certified = false;
  std::string verdict_text;
};

inline constexpr const char* kVerdictClassicalOrSemiI = "consistent-with-classical-or-semiI";
inline constexpr const char* kVerdictNotSemiI = "not-classical-not-semiI";

Verdict verdict(const State& state, const VerdictConfig& config = {});

}  // namespace nonclass

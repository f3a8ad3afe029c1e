#include "nonclass/builders.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

void check_tail(const char* what, double tail) {
  if (tail > kTailErrorThreshold) {
    std::ostringstream msg;
    msg << what << ": truncation tail " << tail << " exceeds " << kTailErrorThreshold;
    throw CutoffTooSmall(msg.str(), tail);
  }
}

double combine_tails(double l1, double l2) { return l1 + l2 - l1 * l2; }

struct Truncated {
  Eigen::VectorXcd amplitudes;
  double lost = 0.0;
};

// Single-mode coherent amplitudes e^{-|z|^2/2} z^n / sqrt(n!), plus the exact
// weight beyond the cutoff.
Truncated coherent_amplitudes(int cutoff, cplx z) {
  Truncated out;
  out.amplitudes.resize(cutoff + 1);
  const double intensity = std::norm(z);
  cplx c = std::exp(-0.5 * intensity);
  out.amplitudes(0) = c;
  for (int n = 1; n <= cutoff; ++n) {
    c *= z / std::sqrt(double(n));
    out.amplitudes(n) = c;
  }
  // Poisson tail: keep summing until terms are past the peak and negligible.
  double term = std::norm(c);
  for (int n = cutoff + 1;; ++n) {
    term *= intensity / n;
    out.lost += term;
    if (term == 0.0 || (n > intensity && term < 1e-18 * out.lost)) break;
  }
  return out;
}

Eigen::MatrixXcd thermal_diagonal(int cutoff, double beta, double& lost) {
  const double x = std::exp(-beta);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) rho(n, n) = (1.0 - x) * std::pow(x, n);
  lost = std::pow(x, cutoff + 1);
  return rho;
}

void check_squeeze_parameters(double a, double b) {
  if (!(a >= b && b >= 0.0)) {
    std::ostringstream msg;
    msg << "squeeze parameters must satisfy a >= b >= 0, got a=" << a << " b=" << b;
    throw InvalidParameter(msg.str());
  }
}

}  // namespace

State coherent_state(const FockSpace& space, cplx z1, cplx z2) {
  const Truncated m1 = coherent_amplitudes(space.cutoff1(), z1);
  const Truncated m2 = coherent_amplitudes(space.cutoff2(), z2);
  const double tail = combine_tails(m1.lost, m2.lost);
  check_tail("coherent_state", tail);
  Eigen::VectorXcd psi = Eigen::kroneckerProduct(m1.amplitudes, m2.amplitudes);
  return State::pure(space, std::move(psi), tail);
}

State number_state(const FockSpace& space, int n1, int n2) {
  if (!space.contains(n1, n2)) {
    std::ostringstream msg;
    msg << "number state |" << n1 << "," << n2 << "> outside space with cutoffs ("
        << space.cutoff1() << "," << space.cutoff2() << ")";
    throw OutOfRange(msg.str());
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
  psi(space.index(n1, n2)) = 1.0;
  return State::pure(space, std::move(psi), 0.0);
}

State thermal_state(const FockSpace& space, double beta) {
  if (!(beta > 0.0)) throw InvalidParameter("thermal_state requires beta > 0");
  double l1 = 0.0, l2 = 0.0;
  Eigen::MatrixXcd rho1 = thermal_diagonal(space.cutoff1(), beta, l1);
  Eigen::MatrixXcd rho2 = thermal_diagonal(space.cutoff2(), beta, l2);
  const double tail = combine_tails(l1, l2);
  check_tail("thermal_state", tail);
  return State::product(space, std::move(rho1), std::move(rho2), tail);
}

Eigen::MatrixXcd single_mode_squeezer(int cutoff, double r) {
  const Eigen::MatrixXd a = single_mode_annihilator(cutoff).real();
  const Eigen::MatrixXd generator = 0.5 * r * (a.transpose() * a.transpose() - a * a);
  return generator.exp().cast<cplx>();
}

MatrixOperator squeeze_unitary(const FockSpace& space, double a, double b) {
  check_squeeze_parameters(a, b);
  return MatrixOperator(space, single_mode_squeezer(space.cutoff1(), a - b),
                        single_mode_squeezer(space.cutoff2(), a + b));
}

State squeezed_vacuum(const FockSpace& space, double a, double b) {
  const MatrixOperator u = squeeze_unitary(space, a, b);
  const Eigen::VectorXcd psi =
      Eigen::kroneckerProduct(u.kron().mode1.col(0), u.kron().mode2.col(0)).eval();
  State out = State::pure(space, psi, 0.0);
  const double tail = out.edge_weight();
  check_tail("squeezed_vacuum", tail);
  return out.with_tail_mass(tail);
}

State squeezed_thermal(const FockSpace& space, double a, double b, double beta) {
  if (!(beta > 0.0)) throw InvalidParameter("squeezed_thermal requires beta > 0");
  const MatrixOperator u = squeeze_unitary(space, a, b);
  double l1 = 0.0, l2 = 0.0;
  const Eigen::MatrixXcd th1 = thermal_diagonal(space.cutoff1(), beta, l1);
  const Eigen::MatrixXcd th2 = thermal_diagonal(space.cutoff2(), beta, l2);
  const auto& k = u.kron();
  State out = State::product(space, k.mode1 * th1 * k.mode1.adjoint(),
                             k.mode2 * th2 * k.mode2.adjoint(), 0.0);
  const double tail = combine_tails(l1, l2) + out.edge_weight();
  check_tail("squeezed_thermal", tail);
  return out.with_tail_mass(tail);
}

double pair_coherent_norm_series(double zeta_abs, int q) {
  if (q < 0) throw OutOfRange("pair-coherent q must be >= 0");
  const double x = zeta_abs * zeta_abs;
  double term = 1.0 / std::tgamma(q + 1.0);
  double sum = term;
  for (int n = 0;; ++n) {
    const double ratio = x / ((n + 1.0) * (n + q + 1.0));
    term *= ratio;
    sum += term;
    if (term == 0.0 || (ratio < 1.0 && term < 1e-16 * sum)) break;
  }
  return sum;
}

State pair_coherent(const FockSpace& space, cplx zeta, int q) {
  if (q < 0) throw OutOfRange("pair-coherent q must be >= 0");
  if (q > space.cutoff1()) {
    throw CutoffTooSmall("pair_coherent: q exceeds mode-1 cutoff", 1.0);
  }
  const int n_max = std::min(space.cutoff1() - q, space.cutoff2());
  const double r = std::abs(zeta);
  const double theta = std::arg(zeta);
  const double log_norm = std::log(pair_coherent_norm_series(r, q));

  // |c_n|^2 = |zeta|^{2n} / (n! (n+q)! S), evaluated in log space.
  auto log_weight = [&](int n) {
    const double power = n == 0 ? 0.0 : 2.0 * n * std::log(r);
    return power - std::lgamma(n + 1.0) - std::lgamma(n + q + 1.0) - log_norm;
  };

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0 && r == 0.0) break;
    psi(space.index(n + q, n)) = std::exp(0.5 * log_weight(n)) * std::polar(1.0, n * theta);
  }

  double lost = 0.0;
  if (r > 0.0) {
    for (int n = n_max + 1;; ++n) {
      const double w = std::exp(log_weight(n));
      lost += w;
      if (w == 0.0 || (r * r < (n + 1.0) * (n + q + 1.0) && w < 1e-18 * std::max(lost, 1e-300))) {
        break;
      }
    }
  }
  check_tail("pair_coherent", lost);
  return State::pure(space, std::move(psi), lost);
}

State kerr_evolve(const State& state, double alpha_coef, double beta_coef, double t) {
  const FockSpace& space = state.space();
  Eigen::MatrixXcd phases = Eigen::MatrixXcd::Zero(space.levels(Mode::one), space.levels(Mode::one));
  for (int n = 0; n <= space.cutoff1(); ++n) {
    phases(n, n) = std::polar(1.0, -t * (alpha_coef * n + beta_coef * double(n) * n));
  }
  const MatrixOperator evolution(
      space, std::move(phases),
      Eigen::MatrixXcd::Identity(space.levels(Mode::two), space.levels(Mode::two)));
  return conjugate(state, evolution).with_tail_mass(state.tail_mass());
}

}  // namespace nonclass

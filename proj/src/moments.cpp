#include "nonclass/moments.hpp"

#include <cmath>
#include <sstream>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

double coerce_real(cplx v, const char* what) {
  if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v))) {
    std::ostringstream msg;
    msg << what << " has imaginary residue " << v.imag();
    throw ImaginaryResidue(msg.str());
  }
  return v.real();
}

Eigen::MatrixXcd scaled_power(const Eigen::MatrixXcd& a, int power) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  for (int k = 1; k <= power; ++k) out = (a * out) / std::sqrt(double(k));
  return out;
}

}  // namespace

std::array<MatrixOperator, 4> number_operators(const FockSpace& space) {
  const MatrixOperator a1 = annihilator(space, Mode::one);
  const MatrixOperator a2 = annihilator(space, Mode::two);
  const MatrixOperator n1 = a1.adjoint() * a1;
  const MatrixOperator n2 = a2.adjoint() * a2;
  const MatrixOperator hop12 = a1.adjoint() * a2;
  const MatrixOperator hop21 = a2.adjoint() * a1;
  const cplx i{0.0, 1.0};
  return {n1 + n2, hop12 + hop21, (-i) * hop12 + i * hop21, n1 - n2};
}

std::array<MatrixOperator, 3> pair_operators(const FockSpace& space) {
  const MatrixOperator a1 = annihilator(space, Mode::one);
  const MatrixOperator a2 = annihilator(space, Mode::two);
  const MatrixOperator a11 = a1 * a1;
  const MatrixOperator a22 = a2 * a2;
  const cplx i{0.0, 1.0};
  return {a11 - a22, i * (a11 + a22), cplx{-2.0} * (a1 * a2)};
}

std::vector<MatrixOperator> spin_monomials(const FockSpace& space, int twice_j) {
  const Eigen::MatrixXcd a1 = single_mode_annihilator(space.cutoff1());
  const Eigen::MatrixXcd a2 = single_mode_annihilator(space.cutoff2());
  std::vector<MatrixOperator> out;
  for (int i = 0; i <= twice_j; ++i) {
    // m = j - i, so j + m = twice_j - i and j - m = i
    out.emplace_back(space, scaled_power(a1, twice_j - i), scaled_power(a2, i));
  }
  return out;
}

StokesVector stokes_vector(const State& state) {
  const auto ops = number_operators(state.space());
  StokesVector out;
  for (int mu = 0; mu < 4; ++mu) out.n(mu) = coerce_real(expect(state, ops[mu]), "n_mu");
  return out;
}

QMatrix q_matrix(const State& state) {
  const auto ops = pair_operators(state.space());
  QMatrix out;
  for (int j = 0; j < 3; ++j) {
    for (int k = j; k < 3; ++k) {
      out.q(j, k) = correlation(state, ops[j], ops[k]);
      out.q(k, j) = std::conj(out.q(j, k));
    }
    out.q(j, j) = coerce_real(out.q(j, j), "q_jj");
  }
  return out;
}

MomentMatrix gamma_moment_matrix(const State& state, int twice_j) {
  if (twice_j < 0) throw OutOfRange("2j must be non-negative");
  const FockSpace& space = state.space();
  if (space.cutoff1() < twice_j || space.cutoff2() < twice_j) {
    std::ostringstream msg;
    msg << "gamma^(j) with 2j=" << twice_j << " needs cutoffs >= " << twice_j;
    throw CutoffTooSmall(msg.str());
  }
  const auto ops = spin_monomials(space, twice_j);
  MomentMatrix out;
  out.twice_j = twice_j;
  out.gamma.resize(twice_j + 1, twice_j + 1);
  for (int r = 0; r <= twice_j; ++r) {
    for (int c = r; c <= twice_j; ++c) {
      out.gamma(r, c) = correlation(state, ops[r], ops[c]);
      out.gamma(c, r) = std::conj(out.gamma(r, c));
    }
    out.gamma(r, r) = coerce_real(out.gamma(r, r), "gamma_mm");
  }
  return out;
}

Eigen::MatrixXd photon_dist(const State& state) {
  const FockSpace& space = state.space();
  const Eigen::VectorXd p = state.populations();
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      p.data(), space.levels(Mode::one), space.levels(Mode::two));
}

Eigen::VectorXd marginal(const State& state, Mode mode) {
  const Eigen::MatrixXd table = photon_dist(state);
  if (mode == Mode::one) return table.rowwise().sum();
  return table.colwise().sum().transpose();
}

std::vector<double> factorial_moments(const State& state, Mode mode, int m_max) {
  const int cutoff = state.space().cutoff(mode);
  if (m_max < 0) throw OutOfRange("m_max must be non-negative");
  if (m_max > cutoff) {
    std::ostringstream msg;
    msg << "factorial moments up to " << m_max << " need cutoff >= " << m_max << ", have " << cutoff;
    throw CutoffTooSmall(msg.str());
  }
  const Eigen::VectorXd p = marginal(state, mode);
  std::vector<double> gammas(m_max + 1, 0.0);
  for (int n = 0; n <= cutoff; ++n) {
    double falling = 1.0;  // n (n-1) ... (n-m+1)
    for (int m = 0; m <= std::min(m_max, n); ++m) {
      gammas[m] += falling * p(n);
      falling *= double(n - m);
    }
  }
  return gammas;
}

Eigen::Matrix4d anticommutator_from_moments(const StokesVector& n, const QMatrix& q,
                                            const OrderingTensors& tensors) {
  Eigen::Matrix4d out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      cplx sum{};
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) sum += tensors.t[mu][nu][j][k] * q.q(j, k);
      }
      for (int lambda = 0; lambda < 4; ++lambda) sum += tensors.l[mu][nu][lambda] * n.n(lambda);
      out(mu, nu) = sum.real();
    }
  }
  return out;
}

Eigen::Matrix4d anticommutator_direct(const State& state) {
  const auto ops = number_operators(state.space());
  Eigen::Matrix4d out;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      out(mu, nu) = out(nu, mu) = correlation(state, ops[mu], ops[nu]).real();
    }
  }
  return out;
}

CovarianceMatrix covariance_matrices(const State& state, const OrderingTensors& tensors) {
  const StokesVector n = stokes_vector(state);
  const QMatrix q = q_matrix(state);
  CovarianceMatrix out;
  out.anticomm = anticommutator_from_moments(n, q, tensors);
  out.anticomm_direct = anticommutator_direct(state);
  out.decomposition_residual = (out.anticomm - out.anticomm_direct).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, out.anticomm_direct.cwiseAbs().maxCoeff());
  if (out.decomposition_residual > 1e-7 * scale) {
    std::ostringstream msg;
    msg << "anticommutator decomposition disagrees with operator products by "
        << out.decomposition_residual;
    throw DecompositionMismatch(msg.str());
  }
  out.delta = out.anticomm - n.n * n.n.transpose();
  return out;
}

double commutator_check(const State& state) {
  const auto ops = number_operators(state.space());
  const StokesVector n = stokes_vector(state);
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      // <[N_mu, N_nu]> = 2i Im <N_mu N_nu>
      const double lhs = 2.0 * correlation(state, ops[mu], ops[nu]).imag();
      double rhs = 0.0;
      for (int lambda = 1; lambda < 4; ++lambda) rhs += 2.0 * levi_civita0(mu, nu, lambda) * n.n(lambda);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

Eigen::Matrix3cd cartesian_from_spherical() {
  const double s = std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  Eigen::Matrix3cd c;
  c << s, 0.0, -s,
       i * s, 0.0, i * s,
       0.0, -2.0, 0.0;
  return c;
}

Eigen::Matrix3cd q_from_gamma1(const MomentMatrix& gamma1) {
  if (gamma1.twice_j != 2) throw DimensionMismatch("q_from_gamma1 needs j = 1");
  const Eigen::Matrix3cd c = cartesian_from_spherical();
  return c.conjugate() * gamma1.gamma * c.transpose();
}

}  // namespace nonclass

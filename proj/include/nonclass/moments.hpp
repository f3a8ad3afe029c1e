#pragma once

#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "nonclass/ordering_tensors.hpp"
#include "nonclass/state.hpp"

namespace nonclass {

/// n_mu = <N_mu>, N_mu = a_r^dag (sigma_mu)_rs a_s.
struct StokesVector {
  Eigen::Vector4d n = Eigen::Vector4d::Zero();
};

/// q_jk = <A_j^dag A_k> with A_j = i a^T sigma_2 sigma_j a.
struct QMatrix {
  Eigen::Matrix3cd q = Eigen::Matrix3cd::Zero();
};

/// gamma^(j), rows and columns ordered m = j, j-1, ..., -j.
struct MomentMatrix {
  int twice_j = 0;
  Eigen::MatrixXcd gamma;

  double j() const { return 0.5 * twice_j; }
  int m_index(double m) const { return int(std::lround(j() - m)); }
};

struct CovarianceMatrix {
  /// Delta(N_mu, N_nu) = 1/2 <{N_mu, N_nu}> - n_mu n_nu
  Eigen::Matrix4d delta = Eigen::Matrix4d::Zero();
  /// 1/2 <{N_mu, N_nu}> from t.q + l.n
  Eigen::Matrix4d anticomm = Eigen::Matrix4d::Zero();
  /// Same matrix from operator products.
  Eigen::Matrix4d anticomm_direct = Eigen::Matrix4d::Zero();
  /// max |anticomm - anticomm_direct|
  double decomposition_residual = 0.0;
};

/// N_0 .. N_3 as sparse operators.
std::array<MatrixOperator, 4> number_operators(const FockSpace& space);
/// A_1 .. A_3 as sparse operators.
std::array<MatrixOperator, 3> pair_operators(const FockSpace& space);
/// a1^{j+m} a2^{j-m} / sqrt((j+m)!(j-m)!) for m = j .. -j, Kronecker form.
std::vector<MatrixOperator> spin_monomials(const FockSpace& space, int twice_j);

StokesVector stokes_vector(const State& state);
QMatrix q_matrix(const State& state);
MomentMatrix gamma_moment_matrix(const State& state, int twice_j);

/// gamma_m = <a^dag^m a^m> for m = 0 .. m_max of one mode.
std::vector<double> factorial_moments(const State& state, Mode mode, int m_max);

/// p(n1, n2) as a (cutoff1+1) x (cutoff2+1) table.
Eigen::MatrixXd photon_dist(const State& state);
/// Single-mode photon-number distribution.
Eigen::VectorXd marginal(const State& state, Mode mode);

/// t.q + l.n contracted into a 4x4 matrix (real part; the imaginary part cancels).
Eigen::Matrix4d anticommutator_from_moments(const StokesVector& n, const QMatrix& q,
                                            const OrderingTensors& tensors);
/// Re <N_mu N_nu> from operator products.
Eigen::Matrix4d anticommutator_direct(const State& state);

/// Throws DecompositionMismatch if the two routes differ by more than
/// 1e-7 * max(1, |anticomm|max).
CovarianceMatrix covariance_matrices(const State& state,
                                     const OrderingTensors& tensors = OrderingTensors::canonical());

/// max |<[N_mu, N_nu]> - 2i eps_{0 mu nu lambda} n_lambda|
double commutator_check(const State& state);

/// Rows map (m = 1, 0, -1) moments to Cartesian pair operators: A_j = C_jm B_m.
Eigen::Matrix3cd cartesian_from_spherical();
/// q = conj(C) gamma^(1) C^T
Eigen::Matrix3cd q_from_gamma1(const MomentMatrix& gamma1);

}  // namespace nonclass

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nonclass/builders.hpp"
#include "nonclass/errors.hpp"
#include "nonclass/moments.hpp"
#include "nonclass/su2.hpp"
#include "support/reference.hpp"

using namespace nonclass;

namespace {

const cplx I{0.0, 1.0};

// N_mu and the pair operators rebuilt from loop-constructed ladders.
struct DenseOps {
  std::array<Eigen::MatrixXcd, 4> n;
  std::array<Eigen::MatrixXcd, 3> pair;
};

DenseOps dense_ops(int c1, int c2) {
  const Eigen::MatrixXcd a1 = ref::dense_ladder(c1, c2, 1), a2 = ref::dense_ladder(c1, c2, 2);
  const std::array<Eigen::MatrixXcd, 2> a = {a1, a2};
  DenseOps out;
  for (int mu = 0; mu < 4; ++mu) {
    const Eigen::Matrix2cd s = ref::pauli(mu);
    out.n[mu] = Eigen::MatrixXcd::Zero(a1.rows(), a1.cols());
    for (int r = 0; r < 2; ++r) {
      for (int t = 0; t < 2; ++t) out.n[mu] += s(r, t) * a[r].adjoint() * a[t];
    }
  }
  out.pair[0] = a1 * a1 - a2 * a2;
  out.pair[1] = I * (a1 * a1 + a2 * a2);
  out.pair[2] = -2.0 * a1 * a2;
  return out;
}

// Random density matrix supported on n1, n2 <= c - 2, so every quadratic
// product stays inside the truncated space.
State random_interior_state(std::mt19937_64& rng, int c) {
  std::normal_distribution<double> g;
  const FockSpace space(c, c);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  for (int n1 = 0; n1 <= c - 2; ++n1) {
    for (int n2 = 0; n2 <= c - 2; ++n2) {
      for (Index k = 0; k < 4; ++k) m(space.index(n1, n2), k) = cplx(g(rng), g(rng));
    }
  }
  return State::dense(space, m * m.adjoint(), 0.0);
}

}  // namespace

TEST(OrderingTensors, Symmetries) {
  const OrderingTensors t = OrderingTensors::canonical();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          EXPECT_EQ(t.t[mu][nu][j][k], t.t[nu][mu][j][k]);
          EXPECT_EQ(t.t[mu][nu][j][k], std::conj(t.t[mu][nu][k][j]));
        }
      }
      for (int l = 0; l < 4; ++l) EXPECT_EQ(t.l[mu][nu][l], t.l[nu][mu][l]);
    }
  }
  EXPECT_EQ(t.l[0][0][0], 1.0);
  EXPECT_EQ(t.l[1][1][0], 1.0);
  EXPECT_EQ(t.l[0][2][2], 1.0);
  EXPECT_EQ(t.l[1][2][0], 0.0);
  EXPECT_EQ(levi_civita0(1, 2, 3), 1);
  EXPECT_EQ(levi_civita0(2, 1, 3), -1);
  EXPECT_EQ(levi_civita0(1, 1, 3), 0);
}

TEST(Operators, MatchLoopBuiltOperators) {
  const FockSpace space(5, 4);
  const DenseOps want = dense_ops(5, 4);
  const auto n = number_operators(space);
  const auto pair = pair_operators(space);
  for (int mu = 0; mu < 4; ++mu) EXPECT_LT((n[mu].to_dense() - want.n[mu]).cwiseAbs().maxCoeff(), 1e-14);
  for (int j = 0; j < 3; ++j) EXPECT_LT((pair[j].to_dense() - want.pair[j]).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Stokes, Examples) {
  EXPECT_EQ(stokes_vector(number_state(FockSpace(4, 4), 0, 0)).n, Eigen::Vector4d::Zero());
  EXPECT_LT((stokes_vector(number_state(FockSpace(4, 4), 1, 0)).n - Eigen::Vector4d(1, 0, 0, 1)).norm(), 1e-15);
  const StokesVector c = stokes_vector(coherent_state(FockSpace(30, 30), 1.0, 1.0));
  EXPECT_LT((c.n - Eigen::Vector4d(2, 2, 0, 0)).norm(), 1e-12);
  const StokesVector ci = stokes_vector(coherent_state(FockSpace(30, 30), 1.0, I));
  // n_mu = z^dag sigma_mu z
  EXPECT_LT((ci.n - Eigen::Vector4d(2, 0, 2, 0)).norm(), 1e-12);
}

TEST(Stokes, RejectsNonHermitianInput) {
  const FockSpace space(2, 2);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(space.dim(), space.dim());
  rho(space.index(1, 0), space.index(1, 0)) = 0.5;
  rho(space.index(0, 1), space.index(0, 1)) = 0.5;
  rho(space.index(1, 0), space.index(0, 1)) = I;
  rho(space.index(0, 1), space.index(1, 0)) = I;
  EXPECT_THROW(stokes_vector(State::dense(space, rho, 0.0)), ImaginaryResidue);
}

TEST(QMatrix, Examples) {
  EXPECT_LT(q_matrix(number_state(FockSpace(4, 4), 0, 0)).q.norm(), 1e-15);
  const QMatrix q11 = q_matrix(number_state(FockSpace(4, 4), 1, 1));
  EXPECT_NEAR(std::abs(q11.q(2, 2) - 4.0), 0.0, 1e-14);
  const Eigen::Matrix3cd q = q_matrix(squeezed_vacuum(FockSpace(40, 40), 0.5)).q;
  EXPECT_LT((q - q.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd>(q).eigenvalues().minCoeff(), -1e-10);
}

TEST(QMatrix, MatchesDenseTrace) {
  std::mt19937_64 rng(11);
  const DenseOps ops = dense_ops(5, 5);
  for (int k = 0; k < 3; ++k) {
    const State s = random_interior_state(rng, 5);
    const Eigen::MatrixXcd rho = s.density_matrix();
    const QMatrix q = q_matrix(s);
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) {
        const cplx want = (rho * ops.pair[j].adjoint() * ops.pair[l]).trace();
        EXPECT_NEAR(std::abs(q.q(j, l) - want), 0.0, 1e-12);
      }
    }
  }
}

TEST(Gamma, LowOrders) {
  const State s = coherent_state(FockSpace(30, 30), {0.7, 0.1}, {-0.4, 0.3});
  const MomentMatrix g0 = gamma_moment_matrix(s, 0);
  ASSERT_EQ(g0.gamma.rows(), 1);
  EXPECT_NEAR(std::abs(g0.gamma(0, 0) - 1.0), 0.0, 1e-12);
  // j = 1/2: gamma_{m m'} = <a_r^dag a_s>, m = 1/2 -> mode 1.
  const MomentMatrix g = gamma_moment_matrix(s, 1);
  const cplx z1{0.7, 0.1}, z2{-0.4, 0.3};
  Eigen::Matrix2cd want;
  want << std::conj(z1) * z1, std::conj(z1) * z2, std::conj(z2) * z1, std::conj(z2) * z2;
  EXPECT_LT((g.gamma - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(g.m_index(0.5), 0);
  EXPECT_EQ(g.m_index(-0.5), 1);
  EXPECT_LT(gamma_moment_matrix(number_state(FockSpace(4, 4), 0, 0), 2).gamma.norm(), 1e-15);
  EXPECT_THROW(gamma_moment_matrix(number_state(FockSpace(1, 1), 0, 0), 4), CutoffTooSmall);
}

TEST(Gamma, CartesianRelationToQ) {
  std::mt19937_64 rng(5);
  for (const State& s : {squeezed_vacuum(FockSpace(40, 40), 0.4, 0.1),
                         pair_coherent(FockSpace(30, 30), {1.2, 0.3}, 1), random_interior_state(rng, 6)}) {
    const MomentMatrix g1 = gamma_moment_matrix(s, 2);
    EXPECT_LT((q_from_gamma1(g1) - q_matrix(s).q).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(g1.gamma).eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(FactorialMoments, KnownDistributions) {
  const auto vac = factorial_moments(number_state(FockSpace(6, 6), 0, 0), Mode::one, 3);
  EXPECT_EQ(vac, (std::vector<double>{1.0, 0.0, 0.0, 0.0}));
  const auto coh = factorial_moments(coherent_state(FockSpace(40, 40), 1.0, 0.0), Mode::one, 6);
  for (double g : coh) EXPECT_NEAR(g, 1.0, 1e-11);
  // Thermal: gamma_m = m! nbar^m
  const double nbar = ref::thermal_nbar(1.0);
  const auto th = factorial_moments(thermal_state(FockSpace(90, 90), 1.0), Mode::two, 6);
  for (int m = 0; m <= 6; ++m) EXPECT_NEAR(th[m] / (std::tgamma(m + 1.0) * std::pow(nbar, m)), 1.0, 1e-10);
  const auto n3 = factorial_moments(number_state(FockSpace(5, 5), 3, 0), Mode::one, 4);
  EXPECT_EQ(n3, (std::vector<double>{1.0, 3.0, 6.0, 6.0, 0.0}));
  EXPECT_THROW(factorial_moments(number_state(FockSpace(3, 3), 0, 0), Mode::one, 5), CutoffTooSmall);
}

TEST(PhotonDist, Examples) {
  const Eigen::MatrixXd p = photon_dist(number_state(FockSpace(3, 4), 2, 1));
  EXPECT_EQ(p.rows(), 4);
  EXPECT_EQ(p.cols(), 5);
  EXPECT_EQ(p(2, 1), 1.0);
  EXPECT_EQ(p.sum(), 1.0);
  const Eigen::MatrixXd pc = photon_dist(pair_coherent(FockSpace(20, 20), 1.0, 1));
  for (int n1 = 0; n1 <= 20; ++n1) {
    for (int n2 = 0; n2 <= 20; ++n2) {
      if (n1 - n2 != 1) EXPECT_EQ(pc(n1, n2), 0.0);
    }
  }
}

TEST(Covariance, SimpleStates) {
  EXPECT_LT(covariance_matrices(number_state(FockSpace(4, 4), 0, 0)).delta.norm(), 1e-15);
  const CovarianceMatrix n11 = covariance_matrices(number_state(FockSpace(4, 4), 1, 1));
  EXPECT_NEAR(n11.delta(0, 0), 0.0, 1e-14);
  EXPECT_NEAR(n11.delta(3, 3), 0.0, 1e-14);
  EXPECT_NEAR(n11.delta(1, 1), 4.0, 1e-14);  // <N1^2> = <n1(n2+1) + n2(n1+1)>
  EXPECT_NEAR(n11.delta(2, 2), 4.0, 1e-14);
  // Coherent states: Delta = l.n
  const State c = coherent_state(FockSpace(30, 30), {0.8, 0.2}, {0.1, -0.5});
  const CovarianceMatrix cc = covariance_matrices(c);
  const StokesVector n = stokes_vector(c);
  const OrderingTensors t = OrderingTensors::canonical();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      double ln = 0.0;
      for (int l = 0; l < 4; ++l) ln += t.l[mu][nu][l] * n.n(l);
      EXPECT_NEAR(cc.delta(mu, nu), ln, 1e-10);
    }
  }
  EXPECT_LT((cc.delta - cc.delta.transpose()).norm(), 1e-14);
}

TEST(Covariance, DualPathOnRandomInteriorStates) {
  std::mt19937_64 rng(19);
  const DenseOps ops = dense_ops(6, 6);
  for (int k = 0; k < 5; ++k) {
    const State s = random_interior_state(rng, 6);
    const Eigen::MatrixXcd rho = s.density_matrix();
    const CovarianceMatrix c = covariance_matrices(s);
    EXPECT_LT(c.decomposition_residual, 1e-12);
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        const Eigen::MatrixXcd anti = ops.n[mu] * ops.n[nu] + ops.n[nu] * ops.n[mu];
        EXPECT_NEAR(c.anticomm(mu, nu), 0.5 * (rho * anti).trace().real(), 1e-11);
      }
    }
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(c.delta).eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(Covariance, CorruptedTensorDetected) {
  OrderingTensors bad = OrderingTensors::canonical();
  bad.l[1][1][0] = 0.5;
  EXPECT_THROW(covariance_matrices(coherent_state(FockSpace(20, 20), 1.0, 0.5), bad), DecompositionMismatch);
  OrderingTensors bad_t = OrderingTensors::canonical();
  bad_t.t[1][1][0][0] += 0.3;
  EXPECT_THROW(covariance_matrices(squeezed_vacuum(FockSpace(30, 30), 0.4), bad_t), DecompositionMismatch);
}

TEST(Commutators, CloseOnU2Algebra) {
  EXPECT_LT(commutator_check(coherent_state(FockSpace(25, 25), 1.0, {0.0, 0.7})), 1e-9);
  EXPECT_LT(commutator_check(number_state(FockSpace(4, 4), 1, 0)), 1e-12);
  EXPECT_LT(commutator_check(pair_coherent(FockSpace(30, 30), 1.5, 2)), 1e-9);
}

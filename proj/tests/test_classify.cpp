#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "nonclass/builders.hpp"
#include "nonclass/classify.hpp"
#include "nonclass/errors.hpp"
#include "nonclass/moments.hpp"
#include "nonclass/oracles.hpp"
#include "nonclass/spec_io.hpp"
#include "nonclass/su2.hpp"
#include "support/reference.hpp"

using namespace nonclass;

namespace {

double max_abs(const Eigen::Matrix4d& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(AMatrix, CoherentStatesVanish) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 5; ++k) {
    const State s = coherent_state(FockSpace(30, 30), {u(rng), u(rng)}, {u(rng), u(rng)});
    EXPECT_LT(max_abs(a_matrix(s).a), 1e-9);
  }
}

TEST(AMatrix, SqueezedVacuumMatchesGaussianMoments) {
  for (double a : {0.1, 0.5, 1.0}) {
    const FluctuationMatrix got = a_matrix(squeezed_vacuum(FockSpace(110, 110), a));
    const Eigen::Matrix4d want = ref::squeezed_product_a(a, 0.0, 0.0);
    EXPECT_LT(max_abs(got.a - want), 1e-8 * std::max(1.0, max_abs(want))) << a;
    EXPECT_NEAR(got.a(2, 2), -2.0 * std::pow(std::sinh(a), 2), 1e-9);
  }
}

TEST(AMatrix, SqueezedVacuumPrintedEntriesBeyondA00) {
  const FluctuationMatrix got = a_matrix(squeezed_vacuum(FockSpace(60, 60), 0.5));
  const Eigen::Vector4d printed = a_matrix_squeezed_vacuum(0.5).diagonal();
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(got.a(k, k) / printed(k), 1.0, 1e-9) << k;
  // The total-number entry equals A11 = A33 = 2 cosh 2a sinh^2 a.
  EXPECT_NEAR(got.a(0, 0), got.a(1, 1), 1e-9);
}

TEST(AMatrix, AsymmetricSqueezingMatchesGaussianMoments) {
  const FluctuationMatrix got = a_matrix(squeezed_vacuum(FockSpace(80, 80), 0.6, 0.25));
  const Eigen::Matrix4d want = ref::squeezed_product_a(0.6, 0.25, 0.0);
  EXPECT_LT(max_abs(got.a - want), 1e-8);
  EXPECT_GT(std::abs(got.a(0, 3)), 0.1);
}

TEST(AMatrix, SqueezedThermalMatchesGaussianMoments) {
  for (double beta : {1.0, 2.0}) {
    for (double a : {0.0, 0.3, 0.6}) {
      const FluctuationMatrix got = a_matrix(squeezed_thermal(FockSpace(120, 120), a, 0.0, beta));
      const Eigen::Matrix4d want = ref::squeezed_product_a(a, 0.0, beta);
      EXPECT_LT(max_abs(got.a - want), 1e-8 * std::max(1.0, max_abs(want))) << beta << " " << a;
    }
  }
}

TEST(AMatrix, PairCoherentMatchesSeries) {
  for (auto [zeta, q] : std::vector<std::pair<double, int>>{{1.0, 0}, {2.0, 1}, {3.0, 2}}) {
    const ref::PairCoherent want = ref::pair_coherent(zeta, q);
    const FluctuationMatrix got = a_matrix(pair_coherent(FockSpace(50, 50), zeta, q));
    EXPECT_LT(max_abs(got.a - want.a), 1e-9) << zeta << " " << q;
  }
}

TEST(AMatrix, NumberStates) {
  // |1,1>: Delta = diag(0, 4, 4, 0), l.n = diag(2, 2, 2, 2)
  const FluctuationMatrix a = a_matrix(number_state(FockSpace(4, 4), 1, 1));
  EXPECT_LT(max_abs(a.a - Eigen::Vector4d(-2, 2, 2, -2).asDiagonal().toDenseMatrix()), 1e-14);
  EXPECT_NEAR(least_eigenvalue(a), -2.0, 1e-14);
}

TEST(LeastEigenvalue, Examples) {
  FluctuationMatrix id;
  id.a = Eigen::Matrix4d::Identity();
  EXPECT_NEAR(least_eigenvalue(id), 1.0, 1e-15);
  const FluctuationMatrix sv = a_matrix(squeezed_vacuum(FockSpace(60, 60), 0.5));
  EXPECT_NEAR(least_eigenvalue(sv), -0.5430806348, 1e-9);
  EXPECT_FALSE(is_psd(Eigen::MatrixXd(sv.a)));
  EXPECT_TRUE(is_psd(Eigen::MatrixXd(Eigen::Matrix4d::Zero())));
  Eigen::Matrix2d tiny;
  tiny << -1e-12, 0, 0, 1;
  EXPECT_TRUE(is_psd(Eigen::MatrixXd(tiny)));
}

TEST(Projection, Examples) {
  FluctuationMatrix id;
  id.a = Eigen::Matrix4d::Identity();
  // |xi|^2 = 1/2 for any normalized alpha.
  EXPECT_NEAR(projection_value(id, ModeVector(Eigen::Vector2cd(1, 0))), 0.5, 1e-15);
  EXPECT_NEAR(projection_value(id, total_number_xi()), 1.0, 1e-15);
  const FluctuationMatrix sv = a_matrix(squeezed_vacuum(FockSpace(60, 60), 0.5));
  const ProjectionScan scan = min_projection(sv);
  EXPECT_GE(scan.value, -1e-9);
  EXPECT_EQ(scan.samples, kDefaultSamples);
  EXPECT_LT(least_eigenvalue(sv), -1e-3);
  const ProjectionScan again = min_projection(sv);
  EXPECT_EQ(scan.value, again.value);
}

TEST(Projection, FindsSubpoissonianMode) {
  const FluctuationMatrix pc = a_matrix(pair_coherent(FockSpace(40, 40), 2.0, 0));
  const double at_mode2 = projection_value(pc, ModeVector(Eigen::Vector2cd(0, 1)));
  EXPECT_LT(at_mode2, 0.0);
  const ProjectionScan scan = min_projection(pc, 2000, 5);
  EXPECT_LE(scan.value, at_mode2 + 1e-12);
  ASSERT_TRUE(scan.argmin.has_value());
  EXPECT_NEAR(projection_value(pc, *scan.argmin), scan.value, 1e-12);
}

TEST(Projection, EqualsSingleModeVarianceCombination) {
  std::mt19937_64 rng(21);
  const FockSpace space(40, 40);
  for (const State& s : {squeezed_vacuum(space, 0.4, 0.1), pair_coherent(space, {1.3, 0.5}, 2),
                         thermal_state(space, 1.5)}) {
    const FluctuationMatrix a = a_matrix(s);
    for (int k = 0; k < 10; ++k) {
      const ModeVector alpha = random_mode_vector(rng);
      const auto [n, n2] = single_mode_number_ops(space, alpha);
      const double mean = expect(s, n).real();
      EXPECT_NEAR(projection_value(a, alpha), expect(s, n2).real() - mean * mean - mean, 1e-9);
    }
    // Total-number projection from populations alone.
    const Eigen::MatrixXd p = photon_dist(s);
    double m1 = 0.0, m2 = 0.0;
    for (int n1 = 0; n1 < p.rows(); ++n1) {
      for (int n2 = 0; n2 < p.cols(); ++n2) {
        m1 += (n1 + n2) * p(n1, n2);
        m2 += double(n1 + n2) * (n1 + n2) * p(n1, n2);
      }
    }
    EXPECT_NEAR(projection_value(a, total_number_xi()), m2 - m1 * m1 - m1, 1e-9);
  }
}

TEST(Projection, PhaseShiftLeavesSpectrumUnchanged) {
  const FockSpace space(40, 40);
  const State s = squeezed_vacuum(space, 0.4, 0.1);
  const State moved = conjugate(s, u2_unitary(space, phase_shift(0.7, -0.2)));
  EXPECT_NEAR(least_eigenvalue(a_matrix(s)), least_eigenvalue(a_matrix(moved)), 1e-9);
}

TEST(Projection, ClassicalStatesStayNonnegative) {
  const FluctuationMatrix th = a_matrix(thermal_state(FockSpace(60, 60), 1.0));
  EXPECT_TRUE(is_psd(Eigen::MatrixXd(th.a)));
  EXPECT_GE(min_projection(th, 5000).value, -1e-9);
}

TEST(MandelQ, Examples) {
  const FockSpace space(40, 40);
  EXPECT_NEAR(mandel_q(coherent_state(space, 1.0, 0.0), Mode::one), 0.0, 1e-12);
  EXPECT_NEAR(mandel_q(thermal_state(space, 1.0), Mode::one), ref::thermal_nbar(1.0), 1e-10);
  EXPECT_NEAR(mandel_q(number_state(space, 4, 0), Mode::one), -1.0, 1e-14);
  EXPECT_THROW(mandel_q(number_state(space, 4, 0), Mode::two), VacuumMode);
  const State pc = pair_coherent(space, 2.0, 1);
  EXPECT_NEAR(mandel_q(pc, Mode::two), ref::pair_coherent(2.0, 1).q_mode2, 1e-10);
  EXPECT_NEAR(mandel_q(pc, ModeVector(Eigen::Vector2cd(0, 1))), mandel_q(pc, Mode::two), 1e-10);
  const Verdict v = verdict(pc, {.samples = 1000});
  const XiVector xi = xi_vector(ModeVector(Eigen::Vector2cd(0, 1)));
  EXPECT_NEAR(mandel_q(v.a, v.n, xi), mandel_q(pc, Mode::two), 1e-10);
}

TEST(Lee, Examples) {
  const LeeReport n11 = lee_report(number_state(FockSpace(4, 4), 1, 1));
  EXPECT_EQ(n11.lhs, -2.0);
  EXPECT_TRUE(n11.violated);
  EXPECT_TRUE(n11.sharpened_violated);
  const LeeReport coh = lee_report(coherent_state(FockSpace(30, 30), 1.0, 0.5));
  EXPECT_NEAR(coh.lhs, std::pow(1.0 - 0.25, 2), 1e-10);
  EXPECT_FALSE(coh.violated);
  EXPECT_FALSE(coh.sharpened_violated);
  // Squeezed thermal at b = 0 has n3 = 0, so both forms coincide.
  const LeeReport st = lee_report(squeezed_thermal(FockSpace(100, 100), 0.5, 0.0, 1.0));
  EXPECT_NEAR(st.n3, 0.0, 1e-12);
  EXPECT_NEAR(st.lhs, st.a33, 1e-9);
  EXPECT_LT(std::max(st.residual_a33, st.residual_q), 1e-9);
}

TEST(FactorialBattery, ClassicalAndNumberStates) {
  EXPECT_TRUE(factorial_inequality_report(factorial_moments(coherent_state(FockSpace(40, 40), 1.3, 0.0), Mode::one, 6))
                  .empty());
  EXPECT_TRUE(factorial_inequality_report(factorial_moments(thermal_state(FockSpace(80, 80), 1.0), Mode::one, 6)).empty());
  const auto n3 = factorial_inequality_report(factorial_moments(number_state(FockSpace(6, 6), 3, 0), Mode::one, 2));
  ASSERT_FALSE(n3.empty());
  EXPECT_EQ(n3[0].kind, FactorialViolation::Kind::lower);
  EXPECT_EQ(n3[0].lhs, 9.0);
  EXPECT_EQ(n3[0].rhs, 6.0);
}

TEST(LocalPn, Windows) {
  Eigen::VectorXd poisson(30);
  for (int n = 0; n < 30; ++n) poisson(n) = std::exp(-2.0 + n * std::log(2.0) - std::lgamma(n + 1.0));
  EXPECT_TRUE(local_pn_scan(poisson, 10, 1e-15).empty());
  EXPECT_NEAR(local_pn_value(poisson, 0, 1.0, 0.0), poisson(0), 1e-15);

  // |n=2>: the n0 = 1 window is [[p1, 2 p2], [2 p2, 6 p3]] = [[0, 2], [2, 0]].
  Eigen::VectorXd two = Eigen::VectorXd::Zero(8);
  two(2) = 1.0;
  const Eigen::Matrix2d w = local_pn_matrix(two, 1);
  EXPECT_EQ(w(0, 1), 2.0);
  EXPECT_NEAR(Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(w).eigenvalues()(0), -2.0, 1e-14);
  const auto v = local_pn_scan(two, 10, 0.0);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].n0, 1);
  EXPECT_THROW(local_pn_matrix(two, 7), OutOfRange);

  const Eigen::VectorXd sq = marginal(squeezed_vacuum(FockSpace(60, 60), 0.5), Mode::one);
  EXPECT_FALSE(local_pn_scan(sq, 10, 1e-12).empty());
}

TEST(Verdict, Examples) {
  const VerdictConfig cfg{.samples = 20000};
  const Verdict coh = verdict(coherent_state(FockSpace(30, 30), 1.0, 1.0), cfg);
  EXPECT_EQ(coh.verdict_text, kVerdictClassicalOrSemiI);
  EXPECT_TRUE(coh.a_psd);
  EXPECT_FALSE(coh.strongly_nonclassical_certified);

  const Verdict sv = verdict(squeezed_vacuum(FockSpace(60, 60), 0.5), cfg);
  EXPECT_EQ(sv.verdict_text, kVerdictNotSemiI);
  EXPECT_FALSE(sv.a_psd);
  EXPECT_GE(sv.projection.value, -1e-9);
  EXPECT_GT(sv.phase_insensitive_least_eig, 0.0);

  const Verdict pc = verdict(pair_coherent(FockSpace(40, 40), 2.0, 0), cfg);
  EXPECT_EQ(pc.verdict_text, kVerdictNotSemiI);
  EXPECT_LT(pc.projection.value, 0.0);
  EXPECT_TRUE(pc.strongly_nonclassical_certified);
  ASSERT_TRUE(pc.mode2.mandel_q.has_value());
  EXPECT_LT(*pc.mode2.mandel_q, 0.0);

  const Verdict th = verdict(thermal_state(FockSpace(60, 60), 1.0), cfg);
  EXPECT_EQ(th.verdict_text, kVerdictClassicalOrSemiI);
  EXPECT_TRUE(th.mode1.factorial.empty());
  EXPECT_TRUE(th.mode1.local_pn.empty());
}

TEST(TruncationBound, Values) {
  EXPECT_EQ(truncation_bound(0.0, 41, 6), 0.0);
  EXPECT_DOUBLE_EQ(truncation_bound(1e-10, 10, 2), 2e-8);
  EXPECT_DOUBLE_EQ(truncation_bound(1e-10, 10, 0), 2e-10);
}

TEST(FactorialBattery, UncertaintyAbsorbsSmallViolations) {
  // gamma_1^2 exceeds gamma_2 by 1e-6.
  const std::vector<double> gammas{1.0, 1.0, 1.0 - 1e-6};
  EXPECT_FALSE(factorial_inequality_report(gammas).empty());
  EXPECT_TRUE(factorial_inequality_report(gammas, {0.0, 1e-6, 1e-6}).empty());
  EXPECT_THROW(factorial_inequality_report(gammas, {0.0, 1.0}), DimensionMismatch);
}

TEST(Verdict, RandomCoherentStatesAtDefaultCutoff) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g(0.0, 0.8);
  const VerdictConfig cfg{.samples = 2000};
  for (int k = 0; k < 60; ++k) {
    StateSpec s;
    s.family = "coherent";
    s.params = {{"z1_re", g(rng)}, {"z1_im", g(rng)}, {"z2_re", g(rng)}, {"z2_im", g(rng)}};
    const State st = build_state(s, CutoffPolicy{});
    const Verdict v = verdict(st, cfg);
    EXPECT_EQ(v.verdict_text, kVerdictClassicalOrSemiI) << k << " tail " << st.tail_mass();
    EXPECT_GE(v.floor, truncation_bound(st.tail_mass(), st.space().cutoff1() + st.space().cutoff2() + 2, 2));
  }
}

#pragma once

#include <random>
#include <utility>

#include <Eigen/Dense>

#include "nonclass/moments.hpp"

namespace nonclass {

/// Normalized mode-mixing vector alpha; a(alpha) = alpha^dag a.
class ModeVector {
 public:
  /// Throws InvalidParameter unless |alpha| = 1 to 1e-12.
  explicit ModeVector(const Eigen::Vector2cd& alpha);
  /// Normalizes (a1, a2); throws InvalidParameter for the zero vector.
  static ModeVector normalized(cplx a1, cplx a2);
  /// (cos theta/2, e^{i phi} sin theta/2)
  static ModeVector from_angles(double theta, double phi);

  const Eigen::Vector2cd& alpha() const { return alpha_; }

 private:
  Eigen::Vector2cd alpha_;
};

/// xi_mu = 1/2 alpha^dag sigma_mu alpha, or the total-number vector (1,0,0,0).
struct XiVector {
  Eigen::Vector4d xi = Eigen::Vector4d::Zero();
};

class U2Element {
 public:
  /// Throws NonUnitaryInput unless u^dag u = I to 1e-12.
  explicit U2Element(const Eigen::Matrix2cd& u);
  const Eigen::Matrix2cd& u() const { return u_; }

 private:
  Eigen::Matrix2cd u_;
};

/// [[cos t, -e^{-i phi} sin t], [e^{i phi} sin t, cos t]]; t = pi/4 is 50:50.
U2Element beamsplitter(double theta, double phi = 0.0);
U2Element phase_shift(double phi1, double phi2);
/// Rz(alpha) Ry(beta) Rz(gamma), Rz(x) = diag(e^{-ix/2}, e^{ix/2}).
U2Element euler_zyz(double alpha, double beta, double gamma);
/// Haar-distributed element of U(2).
U2Element random_u2(std::mt19937_64& rng);
U2Element random_su2(std::mt19937_64& rng);
/// Uniform on the unit 3-sphere (normalized complex Gaussian pair).
ModeVector random_mode_vector(std::mt19937_64& rng);

/// Operator U(u) with U a_r U^-1 = u_sr a_s, built by exponentiating the
/// quadratic generator a^dag X a, X = -(log u)^T, in each total-number sector.
MatrixOperator u2_unitary(const FockSpace& space, const U2Element& u);

/// Matrix of the spin-j representation carried by degree-2j polynomials:
/// e_m(M x) = sum_m' T_{m m'}(M) e_m'(x), e_m = x1^{j+m} x2^{j-m} / sqrt((j+m)!(j-m)!).
/// For unitary M this is the usual D^(j)(M); T(M) = M at j = 1/2.
Eigen::MatrixXcd symmetric_power(int twice_j, const Eigen::Matrix2cd& m);

/// D^(j)(a) for a in SU(2). Throws InvalidParameter if det(a) != 1 to 1e-12.
Eigen::MatrixXcd wigner_d(int twice_j, const Eigen::Matrix2cd& a);

/// D gamma D^dag, the moments of U(a) rho U(a)^dag.
MomentMatrix transform_gamma(const MomentMatrix& gamma, const U2Element& a);

XiVector xi_vector(const ModeVector& alpha);
XiVector total_number_xi();

/// N(alpha) = a(alpha)^dag a(alpha) and its square.
std::pair<MatrixOperator, MatrixOperator> single_mode_number_ops(const FockSpace& space,
                                                                 const ModeVector& alpha);

}  // namespace nonclass

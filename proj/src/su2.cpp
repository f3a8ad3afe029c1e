#include "nonclass/su2.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

const cplx kI{0.0, 1.0};

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

cplx ipow(cplx base, int power) {
  cplx out{1.0};
  for (int i = 0; i < power; ++i) out *= base;
  return out;
}

}  // namespace

ModeVector::ModeVector(const Eigen::Vector2cd& alpha) : alpha_(alpha) {
  if (std::abs(alpha.squaredNorm() - 1.0) > 1e-12) {
    throw InvalidParameter("mode vector is not normalized");
  }
}

ModeVector ModeVector::normalized(cplx a1, cplx a2) {
  Eigen::Vector2cd v(a1, a2);
  const double norm = v.norm();
  if (!(norm > 0.0)) throw InvalidParameter("mode vector is zero");
  return ModeVector(v / norm);
}

ModeVector ModeVector::from_angles(double theta, double phi) {
  return ModeVector(Eigen::Vector2cd(std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)));
}

U2Element::U2Element(const Eigen::Matrix2cd& u) : u_(u) {
  const double err = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (err > 1e-12) {
    std::ostringstream msg;
    msg << "matrix is not unitary (|u^dag u - I|max = " << err << ")";
    throw NonUnitaryInput(msg.str());
  }
}

U2Element beamsplitter(double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2cd u;
  u << c, -std::polar(s, -phi), std::polar(s, phi), c;
  return U2Element(u);
}

U2Element phase_shift(double phi1, double phi2) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::polar(1.0, phi1);
  u(1, 1) = std::polar(1.0, phi2);
  return U2Element(u);
}

U2Element euler_zyz(double alpha, double beta, double gamma) {
  auto rz = [](double x) {
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    r(0, 0) = std::polar(1.0, -0.5 * x);
    r(1, 1) = std::polar(1.0, 0.5 * x);
    return r;
  };
  Eigen::Matrix2cd ry;
  ry << std::cos(0.5 * beta), -std::sin(0.5 * beta), std::sin(0.5 * beta), std::cos(0.5 * beta);
  return U2Element(rz(alpha) * ry * rz(gamma));
}

U2Element random_u2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd z;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) z(r, c) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phases of R's diagonal so Q is Haar distributed
  for (int c = 0; c < 2; ++c) q.col(c) *= r(c, c) / std::abs(r(c, c));
  // project back onto U(2) to scrub rounding before the 1e-12 check
  const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(q, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return U2Element(svd.matrixU() * svd.matrixV().adjoint());
}

U2Element random_su2(std::mt19937_64& rng) {
  const Eigen::Matrix2cd u = random_u2(rng).u();
  return U2Element(u / std::sqrt(u.determinant()));
}

ModeVector random_mode_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const cplx a1(gauss(rng), gauss(rng));
    const cplx a2(gauss(rng), gauss(rng));
    if (std::norm(a1) + std::norm(a2) > 1e-24) return ModeVector::normalized(a1, a2);
  }
}

MatrixOperator u2_unitary(const FockSpace& space, const U2Element& u) {
  const Eigen::Matrix2cd x = -Eigen::Matrix2cd(u.u().log()).transpose();
  const int c1 = space.cutoff1(), c2 = space.cutoff2();
  std::vector<Eigen::Triplet<cplx>> triplets;

  for (int total = 0; total <= c1 + c2; ++total) {
    const int lo = std::max(0, total - c2);
    const int hi = std::min(c1, total);
    const int size = hi - lo + 1;
    // generator restricted to the sector, basis |n1, total - n1>
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(size, size);
    for (int n1 = lo; n1 <= hi; ++n1) {
      const int n2 = total - n1;
      const int col = n1 - lo;
      k(col, col) = x(0, 0) * double(n1) + x(1, 1) * double(n2);
      if (n1 < hi) k(col + 1, col) = x(0, 1) * std::sqrt((n1 + 1.0) * n2);
      if (n1 > lo) k(col - 1, col) = x(1, 0) * std::sqrt(n1 * (n2 + 1.0));
    }
    // K is anti-Hermitian: K = iH
    const Eigen::MatrixXcd h = -kI * k;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (h + h.adjoint()));
    const Eigen::VectorXcd phases =
        solver.eigenvalues().unaryExpr([](double e) { return std::polar(1.0, e); });
    const Eigen::MatrixXcd block =
        solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        triplets.emplace_back(space.index(lo + r, total - lo - r), space.index(lo + c, total - lo - c),
                              block(r, c));
      }
    }
  }
  SparseMatrix m(space.dim(), space.dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return MatrixOperator(space, std::move(m));
}

Eigen::MatrixXcd symmetric_power(int twice_j, const Eigen::Matrix2cd& m) {
  if (twice_j < 0) throw OutOfRange("2j must be non-negative");
  const int size = twice_j + 1;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(size, size);
  for (int row = 0; row < size; ++row) {
    const int p = twice_j - row;  // j + m
    const int q = row;            // j - m
    for (int k = 0; k <= p; ++k) {
      for (int l = 0; l <= q; ++l) {
        const int x1_power = k + l;  // j + m'
        const int col = twice_j - x1_power;
        const cplx term = binomial(p, k) * binomial(q, l) * ipow(m(0, 0), k) * ipow(m(0, 1), p - k) *
                          ipow(m(1, 0), l) * ipow(m(1, 1), q - l);
        t(row, col) += term;
      }
    }
    for (int col = 0; col < size; ++col) {
      const int pc = twice_j - col, qc = col;
      t(row, col) *= std::exp(0.5 * (std::lgamma(pc + 1.0) + std::lgamma(qc + 1.0) -
                                     std::lgamma(p + 1.0) - std::lgamma(q + 1.0)));
    }
  }
  return t;
}

Eigen::MatrixXcd wigner_d(int twice_j, const Eigen::Matrix2cd& a) {
  if (std::abs(a.determinant() - 1.0) > 1e-12) {
    throw InvalidParameter("wigner_d needs det(a) = 1");
  }
  U2Element checked(a);
  return symmetric_power(twice_j, checked.u());
}

MomentMatrix transform_gamma(const MomentMatrix& gamma, const U2Element& a) {
  const Eigen::MatrixXcd d = symmetric_power(gamma.twice_j, a.u());
  if (d.rows() != gamma.gamma.rows()) throw DimensionMismatch("moment matrix size does not match j");
  MomentMatrix out;
  out.twice_j = gamma.twice_j;
  out.gamma = d * gamma.gamma * d.adjoint();
  return out;
}

XiVector xi_vector(const ModeVector& mode) {
  const Eigen::Vector2cd& a = mode.alpha();
  const cplx cross = std::conj(a(0)) * a(1);
  XiVector out;
  out.xi << 0.5 * (std::norm(a(0)) + std::norm(a(1))), cross.real(), cross.imag(),
      0.5 * (std::norm(a(0)) - std::norm(a(1)));
  return out;
}

XiVector total_number_xi() {
  XiVector out;
  out.xi << 1.0, 0.0, 0.0, 0.0;
  return out;
}

std::pair<MatrixOperator, MatrixOperator> single_mode_number_ops(const FockSpace& space,
                                                                 const ModeVector& mode) {
  const Eigen::Vector2cd& a = mode.alpha();
  const MatrixOperator lowered = std::conj(a(0)) * annihilator(space, Mode::one) +
                                 std::conj(a(1)) * annihilator(space, Mode::two);
  MatrixOperator n = lowered.adjoint() * lowered;
  MatrixOperator n2 = n * n;
  return {std::move(n), std::move(n2)};
}

}  // namespace nonclass

#pragma once

// Independent reference values used only by the tests. Nothing here calls
// into the library's moment or classification code.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace ref {

using cplx = std::complex<double>;

// Single-mode squeezed thermal state S(r) rho_th S(r)^dag with mean thermal
// occupation nbar: zero mean, <a^dag a> = N, <a^2> = M (Gaussian moments).
struct GaussianMode {
  double n = 0.0;
  double m = 0.0;
};

inline GaussianMode squeezed_thermal_mode(double r, double nbar) {
  const double t = nbar + 0.5;
  return {t * std::cosh(2.0 * r) - 0.5, t * std::sinh(2.0 * r)};
}

inline double thermal_nbar(double beta) { return 1.0 / (std::exp(beta) - 1.0); }

// A for a product of two zero-mean Gaussian modes, from Isserlis' theorem:
// Var(n) - <n> = N^2 + M^2 per mode, <N1^2> and <N2^2> from pair contractions.
inline Eigen::Matrix4d gaussian_product_a(const GaussianMode& g1, const GaussianMode& g2) {
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  const double v1 = g1.n * g1.n + g1.m * g1.m;
  const double v2 = g2.n * g2.n + g2.m * g2.m;
  a(0, 0) = v1 + v2;
  a(3, 3) = v1 + v2;
  a(0, 3) = a(3, 0) = v1 - v2;
  a(1, 1) = 2.0 * (g1.n * g2.n + g1.m * g2.m);
  a(2, 2) = 2.0 * (g1.n * g2.n - g1.m * g2.m);
  return a;
}

// Squeeze magnitudes a - b on mode 1 and a + b on mode 2; beta <= 0 means vacuum.
inline Eigen::Matrix4d squeezed_product_a(double a, double b, double beta) {
  const double nbar = beta > 0.0 ? thermal_nbar(beta) : 0.0;
  return gaussian_product_a(squeezed_thermal_mode(a - b, nbar), squeezed_thermal_mode(a + b, nbar));
}

// Pair-coherent |zeta, q>: weights on |n+q, n> and the moments that follow.
struct PairCoherent {
  std::vector<double> weights;  // w_n, normalized
  double n0 = 0.0;
  double mean2 = 0.0;
  double q_mode2 = 0.0;
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
};

inline PairCoherent pair_coherent(double zeta_abs, int q, int terms = 200) {
  PairCoherent out;
  double total = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double logw = 2.0 * n * std::log(std::max(zeta_abs, 1e-300)) - std::lgamma(n + 1.0) -
                        std::lgamma(n + q + 1.0);
    const double w = (zeta_abs == 0.0 && n > 0) ? 0.0 : std::exp(logw);
    out.weights.push_back(w);
    total += w;
  }
  for (double& w : out.weights) w /= total;

  double n0sq = 0.0, mode2sq = 0.0, hop = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double w = out.weights[n];
    const double n1 = n + q, n2 = n;
    out.n0 += w * (n1 + n2);
    n0sq += w * (n1 + n2) * (n1 + n2);
    out.mean2 += w * n2;
    mode2sq += w * n2 * n2;
    hop += w * (n1 * (n2 + 1.0) + n2 * (n1 + 1.0));
  }
  out.q_mode2 = (mode2sq - out.mean2 * out.mean2 - out.mean2) / out.mean2;
  out.a(0, 0) = n0sq - out.n0 * out.n0 - out.n0;
  out.a(1, 1) = hop - out.n0;
  out.a(2, 2) = hop - out.n0;
  out.a(3, 3) = -out.n0;
  out.a(0, 3) = out.a(3, 0) = -double(q);
  return out;
}

// Dense ladder operator on the (c1+1)(c2+1) basis, index n1*(c2+1)+n2.
inline Eigen::MatrixXcd dense_ladder(int c1, int c2, int mode) {
  const int dim = (c1 + 1) * (c2 + 1);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n1 = 0; n1 <= c1; ++n1) {
    for (int n2 = 0; n2 <= c2; ++n2) {
      const int col = n1 * (c2 + 1) + n2;
      if (mode == 1 && n1 > 0) a((n1 - 1) * (c2 + 1) + n2, col) = std::sqrt(double(n1));
      if (mode == 2 && n2 > 0) a(n1 * (c2 + 1) + n2 - 1, col) = std::sqrt(double(n2));
    }
  }
  return a;
}

// Pauli matrices sigma_0 .. sigma_3.
inline Eigen::Matrix2cd pauli(int mu) {
  const cplx i{0.0, 1.0};
  Eigen::Matrix2cd s;
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

// Standard spin-1 rotation d^1(beta) about y, rows and columns m = 1, 0, -1.
inline Eigen::Matrix3d small_d1(double beta) {
  const double c = std::cos(beta), s = std::sin(beta), r = std::sqrt(2.0);
  Eigen::Matrix3d d;
  d << (1 + c) / 2, -s / r, (1 - c) / 2,
       s / r, c, -s / r,
       (1 - c) / 2, s / r, (1 + c) / 2;
  return d;
}

}  // namespace ref

#pragma once

#include "nonclass/state.hpp"

namespace nonclass {

/// |z1, z2>, truncated and renormalized.
State coherent_state(const FockSpace& space, cplx z1, cplx z2);

/// |n1, n2><n1, n2|
State number_state(const FockSpace& space, int n1, int n2);

/// (1 - e^-beta)^2 exp[-beta (n1 + n2)]
State thermal_state(const FockSpace& space, double beta);

/// exp[(a-b)/2 (a1^dag^2 - a1^2)] exp[(a+b)/2 (a2^dag^2 - a2^2)]
///
/// Mode 1 is squeezed by magnitude a-b and mode 2 by a+b, so b = 0 gives two
/// equally squeezed modes with mean photon number sinh^2(a) each. Requires
/// a >= b >= 0.
MatrixOperator squeeze_unitary(const FockSpace& space, double a, double b);

/// exp[(r/2)(a^dag^2 - a^2)] on a single truncated mode.
Eigen::MatrixXcd single_mode_squeezer(int cutoff, double r);

State squeezed_vacuum(const FockSpace& space, double a, double b = 0.0);
State squeezed_thermal(const FockSpace& space, double a, double b, double beta);

/// Pair-coherent state |zeta, q>, eigenstate of a1 a2 with n1 - n2 = q.
State pair_coherent(const FockSpace& space, cplx zeta, int q);

/// Kerr evolution of mode 1 under H = alpha n + beta n^2 for time t.
State kerr_evolve(const State& state, double alpha_coef, double beta_coef, double t);

/// Sum_n |zeta|^{2n} / (n! (n+q)!), summed until the relative term drops below 1e-16.
double pair_coherent_norm_series(double zeta_abs, int q);

}  // namespace nonclass

#pragma once

#include <array>

#include "nonclass/fock_space.hpp"

namespace nonclass {

/// Constant tensors that split the symmetrized product of two number-like
/// operators into a normally ordered quartic part and a quadratic remainder:
///
///   1/2 <{N_mu, N_nu}> = t[mu][nu][j][k] q[j][k] + l[mu][nu][lambda] n[lambda]
///
/// Greek indices run 0..3, Cartesian j,k run 1..3 and are stored at 0..2.
struct OrderingTensors {
  std::array<std::array<std::array<std::array<cplx, 3>, 3>, 4>, 4> t{};
  std::array<std::array<std::array<double, 4>, 4>, 4> l{};
  /// eps0[mu][nu][lambda] = epsilon_{0 mu nu lambda}, epsilon_{0123} = 1.
  std::array<std::array<std::array<double, 4>, 4>, 4> eps0{};

  static OrderingTensors canonical();
};

/// epsilon_{0 mu nu lambda}; zero whenever any index is 0 or repeated.
double levi_civita0(int mu, int nu, int lambda);

}  // namespace nonclass

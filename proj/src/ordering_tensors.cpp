#include "nonclass/ordering_tensors.hpp"

namespace nonclass {
namespace {

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

double levi_civita0(int mu, int nu, int lambda) {
  if (mu == 0 || nu == 0 || lambda == 0) return 0.0;
  if (mu == nu || nu == lambda || mu == lambda) return 0.0;
  // cyclic permutations of (1,2,3) are even
  const int p = (mu - 1) * 9 + (nu - 1) * 3 + (lambda - 1);
  switch (p) {
    case 0 * 9 + 1 * 3 + 2:
    case 1 * 9 + 2 * 3 + 0:
    case 2 * 9 + 0 * 3 + 1:
      return 1.0;
    default:
      return -1.0;
  }
}

OrderingTensors OrderingTensors::canonical() {
  OrderingTensors out;
  const cplx i{0.0, 1.0};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int lambda = 0; lambda < 4; ++lambda) {
        out.eps0[mu][nu][lambda] = levi_civita0(mu, nu, lambda);
        out.l[mu][nu][lambda] = delta(mu, nu) * delta(lambda, 0) + delta(mu, 0) * delta(nu, lambda) +
                                delta(nu, 0) * delta(mu, lambda) -
                                2.0 * delta(mu, 0) * delta(nu, 0) * delta(lambda, 0);
      }
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          out.t[mu][nu][j - 1][k - 1] =
              0.5 * (delta(mu, nu) * delta(j, k) - delta(mu, j) * delta(nu, k) -
                     delta(nu, j) * delta(mu, k) - i * delta(mu, 0) * levi_civita0(nu, j, k) -
                     i * delta(nu, 0) * levi_civita0(mu, j, k));
        }
      }
    }
  }
  return out;
}

}  // namespace nonclass

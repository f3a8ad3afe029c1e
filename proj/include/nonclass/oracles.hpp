#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace nonclass {

/// Closed-form reference values with a short description of where they come from.
struct OracleResult {
  std::vector<std::pair<std::string, double>> values;
  std::string source;

  double at(const std::string& label) const;
  /// The four entries labeled A00 .. A33.
  Eigen::Vector4d diagonal() const;
};

/// Diag(1/2(-3 + 7 cosh 2a) sinh^2 a, 2 cosh 2a sinh^2 a, -2 sinh^2 a, 2 cosh 2a sinh^2 a)
OracleResult a_matrix_squeezed_vacuum(double a);

/// Overall factor in front of the squeezed-thermal diagonal. The printed
/// factor (e^beta - 1)^2 grows without bound as beta -> infinity; the
/// resolved (e^beta - 1)^-2 reproduces the zero-temperature limit and the
/// truncated-Fock numerics.
enum class ThermalPrefactor { as_printed, resolved };

OracleResult a_matrix_squeezed_thermal(double a, double beta,
                                       ThermalPrefactor prefactor = ThermalPrefactor::resolved);

/// ln coth(beta/2): quadrature squeezing sets in for a above this.
double squeezing_onset(double beta);

/// 1/2 arccosh(coth beta): zero of A22 in the squeezed-thermal diagonal.
double subpoissonian_onset(double beta);

enum class ReferenceKind { coherent, thermal, number };

/// Mandel Q: 0 for coherent, nbar for thermal, -1 for a number state.
double reference_q(ReferenceKind kind, double nbar = 0.0);

}  // namespace nonclass

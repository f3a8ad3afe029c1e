#include "nonclass/oracles.hpp"

#include <cmath>

#include "nonclass/errors.hpp"

namespace nonclass {

double OracleResult::at(const std::string& label) const {
  for (const auto& [name, value] : values) {
    if (name == label) return value;
  }
  throw OutOfRange("oracle has no value labeled " + label);
}

Eigen::Vector4d OracleResult::diagonal() const {
  return Eigen::Vector4d(at("A00"), at("A11"), at("A22"), at("A33"));
}

OracleResult a_matrix_squeezed_vacuum(double a) {
  if (!(a >= 0.0)) throw InvalidParameter("squeeze parameter must be >= 0");
  const double s2 = std::pow(std::sinh(a), 2);
  const double c2 = std::cosh(2.0 * a);
  OracleResult out;
  out.values = {{"A00", 0.5 * (-3.0 + 7.0 * c2) * s2},
                {"A11", 2.0 * c2 * s2},
                {"A22", -2.0 * s2},
                {"A33", 2.0 * c2 * s2}};
  out.source = "two-mode squeezed vacuum, closed-form diagonal fluctuation matrix (as printed)";
  return out;
}

OracleResult a_matrix_squeezed_thermal(double a, double beta, ThermalPrefactor prefactor) {
  if (!(a >= 0.0)) throw InvalidParameter("squeeze parameter must be >= 0");
  if (!(beta > 0.0)) throw InvalidParameter("beta must be > 0");
  const double e = std::exp(beta);
  const double e2 = std::exp(2.0 * beta);
  const double c2 = std::cosh(2.0 * a);
  const double c4 = std::cosh(4.0 * a);
  const double scale = prefactor == ThermalPrefactor::as_printed ? std::pow(e - 1.0, 2)
                                                                 : std::pow(e - 1.0, -2);
  const double transverse =
      0.5 * (std::pow(1.0 - e, 2) + 2.0 * (1.0 - e2) * c2 + std::pow(1.0 + e, 2) * c4);
  OracleResult out;
  out.values = {
      {"A00", scale * 0.125 *
                  (13.0 - 14.0 * e + 13.0 * e2 + 20.0 * (1.0 - e2) * c2 + 7.0 * std::pow(1.0 + e, 2) * c4)},
      {"A11", scale * transverse},
      {"A22", scale * (1.0 + e2 + (1.0 - e2) * c2)},
      {"A33", scale * transverse}};
  out.source = prefactor == ThermalPrefactor::as_printed
                   ? "two-mode squeezed thermal state, closed-form diagonal with (e^beta - 1)^2 prefactor"
                   : "two-mode squeezed thermal state, closed-form diagonal with (e^beta - 1)^-2 prefactor";
  return out;
}

double squeezing_onset(double beta) {
  if (!(beta > 0.0)) throw InvalidParameter("beta must be > 0");
  return std::log(1.0 / std::tanh(0.5 * beta));
}

double subpoissonian_onset(double beta) {
  if (!(beta > 0.0)) throw InvalidParameter("beta must be > 0");
  return 0.5 * std::acosh(1.0 / std::tanh(beta));
}

double reference_q(ReferenceKind kind, double nbar) {
  switch (kind) {
    case ReferenceKind::coherent:
      return 0.0;
    case ReferenceKind::thermal:
      if (!(nbar >= 0.0)) throw InvalidParameter("thermal mean must be >= 0");
      return nbar;
    case ReferenceKind::number:
      return -1.0;
  }
  return 0.0;
}

}  // namespace nonclass

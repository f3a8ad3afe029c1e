#pragma once

#include <variant>

#include <Eigen/Dense>

#include "nonclass/matrix_operator.hpp"

namespace nonclass {

/// Probability weight above which a builder refuses a truncation.
inline constexpr double kTailErrorThreshold = 1e-8;

/// Largest dimension for which a dense density matrix is materialized.
inline constexpr Index kDenseLimit = 4096;

/// A normalized two-mode density matrix on a truncated Fock space.
///
/// rho is held in whichever factored form the builder produced:
///   - Product: rho1 (x) rho2, each a single-mode density matrix
///   - Pure:    |psi><psi| with psi over the full basis
///   - Dense:   explicit matrix (small spaces only)
/// All accessors behave as if rho were the explicit matrix.
///
/// tail_mass is the truncation diagnostic: weight discarded before
/// renormalization plus, for unitarily generated states, weight on the
/// outermost two layers.
class State {
 public:
  struct Product {
    Eigen::MatrixXcd mode1;
    Eigen::MatrixXcd mode2;
  };
  struct Pure {
    Eigen::VectorXcd amplitudes;
  };
  struct Dense {
    Eigen::MatrixXcd rho;
  };
  using Representation = std::variant<Product, Pure, Dense>;

  /// Factories renormalize to unit trace.
  static State product(FockSpace space, Eigen::MatrixXcd rho1, Eigen::MatrixXcd rho2,
                       double tail_mass);
  static State pure(FockSpace space, Eigen::VectorXcd amplitudes, double tail_mass);
  static State dense(FockSpace space, Eigen::MatrixXcd rho, double tail_mass);

  const FockSpace& space() const { return space_; }
  double tail_mass() const { return tail_mass_; }
  const Representation& representation() const { return rep_; }
  bool is_pure_vector() const { return std::holds_alternative<Pure>(rep_); }

  /// <row| rho |col>
  cplx element(Index row, Index col) const;
  /// Diagonal of rho, i.e. p(n1,n2) in basis order.
  Eigen::VectorXd populations() const;
  /// Weight on the outermost two layers of the basis.
  double edge_weight() const;
  double trace() const;
  double purity() const;

  /// Explicit matrix. Throws OutOfRange above kDenseLimit.
  Eigen::MatrixXcd density_matrix() const;

  /// Same state with a different diagnostic tail.
  State with_tail_mass(double tail_mass) const;

 private:
  State(FockSpace space, Representation rep, double tail_mass);

  FockSpace space_;
  Representation rep_;
  double tail_mass_;
};

/// Tr(rho op)
cplx expect(const State& state, const MatrixOperator& op);

/// Tr(rho lhs^dagger rhs). Avoids forming the product for pure states.
cplx correlation(const State& state, const MatrixOperator& lhs, const MatrixOperator& rhs);

/// U rho U^dagger. tail_mass becomes input tail + new edge weight.
State conjugate(const State& state, const MatrixOperator& unitary);

/// Trace distance 1/2 ||rho - sigma||_1 (dense; small spaces only).
double trace_distance(const State& lhs, const State& rhs);

/// Hermiticity, trace, and eigenvalue-floor invariants of a State.
struct StateDiagnostics {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
};
StateDiagnostics diagnose(const State& state);

}  // namespace nonclass

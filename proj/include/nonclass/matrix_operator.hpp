#pragma once

#include <variant>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "nonclass/fock_space.hpp"

namespace nonclass {

using SparseMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

/// A linear operator on a truncated two-mode space.
///
/// Stored either as a general sparse matrix over the full basis, or as a
/// Kronecker product M1 (x) M2 of two single-mode matrices. The Kronecker
/// form keeps mode-local unitaries (squeezers, Kerr phases) cheap at cutoffs
/// where the full matrix would not fit in memory.
class MatrixOperator {
 public:
  struct Kron {
    Eigen::MatrixXcd mode1;
    Eigen::MatrixXcd mode2;
  };

  MatrixOperator(FockSpace space, SparseMatrix matrix);
  MatrixOperator(FockSpace space, Eigen::MatrixXcd mode1, Eigen::MatrixXcd mode2);

  static MatrixOperator identity(FockSpace space);

  const FockSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }

  bool is_kron() const { return std::holds_alternative<Kron>(rep_); }
  const Kron& kron() const { return std::get<Kron>(rep_); }
  const SparseMatrix& sparse() const { return std::get<SparseMatrix>(rep_); }

  /// Full sparse matrix (materializes the Kronecker product if needed).
  SparseMatrix to_sparse() const;
  Eigen::MatrixXcd to_dense() const;
  cplx coeff(Index row, Index col) const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  MatrixOperator adjoint() const;

  friend MatrixOperator operator*(const MatrixOperator& lhs, const MatrixOperator& rhs);
  friend MatrixOperator operator+(const MatrixOperator& lhs, const MatrixOperator& rhs);
  friend MatrixOperator operator-(const MatrixOperator& lhs, const MatrixOperator& rhs);
  friend MatrixOperator operator*(cplx scale, const MatrixOperator& op);

 private:
  FockSpace space_;
  std::variant<SparseMatrix, Kron> rep_;
};

/// Ladder operator a_mode on the truncated space; identity on the other mode.
MatrixOperator annihilator(const FockSpace& space, Mode mode);
MatrixOperator annihilator(const FockSpace& space, int mode);
MatrixOperator creator(const FockSpace& space, Mode mode);

/// Single-mode (levels x levels) ladder matrix.
Eigen::MatrixXcd single_mode_annihilator(int cutoff);

}  // namespace nonclass

#include "nonclass/matrix_operator.hpp"

#include <cmath>
#include <vector>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

using RowMajorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void check_same_space(const FockSpace& lhs, const FockSpace& rhs) {
  if (!(lhs == rhs)) throw DimensionMismatch("operators act on different Fock spaces");
}

SparseMatrix kron_to_sparse(const FockSpace& space, const MatrixOperator::Kron& k) {
  std::vector<Eigen::Triplet<cplx>> triplets;
  for (Index i1 = 0; i1 < k.mode1.rows(); ++i1) {
    for (Index j1 = 0; j1 < k.mode1.cols(); ++j1) {
      const cplx x = k.mode1(i1, j1);
      if (x == cplx{}) continue;
      for (Index i2 = 0; i2 < k.mode2.rows(); ++i2) {
        for (Index j2 = 0; j2 < k.mode2.cols(); ++j2) {
          const cplx y = k.mode2(i2, j2);
          if (y == cplx{}) continue;
          triplets.emplace_back(space.index(int(i1), int(i2)), space.index(int(j1), int(j2)), x * y);
        }
      }
    }
  }
  SparseMatrix m(space.dim(), space.dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

}  // namespace

MatrixOperator::MatrixOperator(FockSpace space, SparseMatrix matrix)
    : space_(space), rep_(std::move(matrix)) {
  const auto& m = std::get<SparseMatrix>(rep_);
  if (m.rows() != space_.dim() || m.cols() != space_.dim()) {
    throw DimensionMismatch("operator matrix does not match Fock space dimension");
  }
}

MatrixOperator::MatrixOperator(FockSpace space, Eigen::MatrixXcd mode1, Eigen::MatrixXcd mode2)
    : space_(space), rep_(Kron{std::move(mode1), std::move(mode2)}) {
  const auto& k = std::get<Kron>(rep_);
  if (k.mode1.rows() != space_.levels(Mode::one) || k.mode1.cols() != space_.levels(Mode::one) ||
      k.mode2.rows() != space_.levels(Mode::two) || k.mode2.cols() != space_.levels(Mode::two)) {
    throw DimensionMismatch("Kronecker factors do not match Fock space cutoffs");
  }
}

MatrixOperator MatrixOperator::identity(FockSpace space) {
  SparseMatrix id(space.dim(), space.dim());
  id.setIdentity();
  return MatrixOperator(space, std::move(id));
}

SparseMatrix MatrixOperator::to_sparse() const {
  if (is_kron()) return kron_to_sparse(space_, kron());
  return sparse();
}

Eigen::MatrixXcd MatrixOperator::to_dense() const { return Eigen::MatrixXcd(to_sparse()); }

cplx MatrixOperator::coeff(Index row, Index col) const {
  if (!is_kron()) return sparse().coeff(row, col);
  const auto [r1, r2] = space_.occupation(row);
  const auto [c1, c2] = space_.occupation(col);
  return kron().mode1(r1, c1) * kron().mode2(r2, c2);
}

Eigen::VectorXcd MatrixOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dim()) throw DimensionMismatch("vector length does not match operator");
  if (!is_kron()) return sparse() * v;
  const Index l1 = space_.levels(Mode::one);
  const Index l2 = space_.levels(Mode::two);
  Eigen::Map<const RowMajorMatrix> amplitudes(v.data(), l1, l2);
  RowMajorMatrix out = kron().mode1 * amplitudes * kron().mode2.transpose();
  return Eigen::Map<const Eigen::VectorXcd>(out.data(), out.size());
}

MatrixOperator MatrixOperator::adjoint() const {
  if (is_kron()) return MatrixOperator(space_, kron().mode1.adjoint(), kron().mode2.adjoint());
  return MatrixOperator(space_, SparseMatrix(sparse().adjoint()));
}

MatrixOperator operator*(const MatrixOperator& lhs, const MatrixOperator& rhs) {
  check_same_space(lhs.space_, rhs.space_);
  if (lhs.is_kron() && rhs.is_kron()) {
    return MatrixOperator(lhs.space_, lhs.kron().mode1 * rhs.kron().mode1,
                          lhs.kron().mode2 * rhs.kron().mode2);
  }
  SparseMatrix product = lhs.to_sparse() * rhs.to_sparse();
  product.prune(cplx{});
  return MatrixOperator(lhs.space_, std::move(product));
}

MatrixOperator operator+(const MatrixOperator& lhs, const MatrixOperator& rhs) {
  check_same_space(lhs.space_, rhs.space_);
  return MatrixOperator(lhs.space_, SparseMatrix(lhs.to_sparse() + rhs.to_sparse()));
}

MatrixOperator operator-(const MatrixOperator& lhs, const MatrixOperator& rhs) {
  check_same_space(lhs.space_, rhs.space_);
  return MatrixOperator(lhs.space_, SparseMatrix(lhs.to_sparse() - rhs.to_sparse()));
}

MatrixOperator operator*(cplx scale, const MatrixOperator& op) {
  if (op.is_kron()) return MatrixOperator(op.space_, scale * op.kron().mode1, op.kron().mode2);
  return MatrixOperator(op.space_, SparseMatrix(scale * op.sparse()));
}

Eigen::MatrixXcd single_mode_annihilator(int cutoff) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

MatrixOperator annihilator(const FockSpace& space, Mode mode) {
  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(std::size_t(space.dim()));
  for (int n1 = 0; n1 <= space.cutoff1(); ++n1) {
    for (int n2 = 0; n2 <= space.cutoff2(); ++n2) {
      if (mode == Mode::one && n1 > 0) {
        triplets.emplace_back(space.index(n1 - 1, n2), space.index(n1, n2), std::sqrt(double(n1)));
      } else if (mode == Mode::two && n2 > 0) {
        triplets.emplace_back(space.index(n1, n2 - 1), space.index(n1, n2), std::sqrt(double(n2)));
      }
    }
  }
  SparseMatrix m(space.dim(), space.dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return MatrixOperator(space, std::move(m));
}

MatrixOperator annihilator(const FockSpace& space, int mode) {
  return annihilator(space, mode_from_int(mode));
}

MatrixOperator creator(const FockSpace& space, Mode mode) {
  return annihilator(space, mode).adjoint();
}

}  // namespace nonclass

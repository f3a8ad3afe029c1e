#include "nonclass/state.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

using RowMajorMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_dense_size(const FockSpace& space) {
  if (space.dim() > kDenseLimit) {
    throw OutOfRange("dense density matrix requested for dimension " + std::to_string(space.dim()) +
                     " (limit " + std::to_string(kDenseLimit) + ")");
  }
}

double hermiticity_error(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::pair<double, double> eigen_range(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

}  // namespace

State::State(FockSpace space, Representation rep, double tail_mass)
    : space_(space), rep_(std::move(rep)), tail_mass_(tail_mass) {}

State State::product(FockSpace space, Eigen::MatrixXcd rho1, Eigen::MatrixXcd rho2,
                     double tail_mass) {
  if (rho1.rows() != space.levels(Mode::one) || rho1.cols() != space.levels(Mode::one) ||
      rho2.rows() != space.levels(Mode::two) || rho2.cols() != space.levels(Mode::two)) {
    throw DimensionMismatch("single-mode density matrices do not match cutoffs");
  }
  const double t1 = rho1.trace().real();
  const double t2 = rho2.trace().real();
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw InvalidParameter("density matrix has zero trace");
  rho1 /= t1;
  rho2 /= t2;
  return State(space, Product{std::move(rho1), std::move(rho2)}, tail_mass);
}

State State::pure(FockSpace space, Eigen::VectorXcd amplitudes, double tail_mass) {
  if (amplitudes.size() != space.dim()) throw DimensionMismatch("state vector length mismatch");
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvalidParameter("state vector is zero");
  amplitudes /= norm;
  return State(space, Pure{std::move(amplitudes)}, tail_mass);
}

State State::dense(FockSpace space, Eigen::MatrixXcd rho, double tail_mass) {
  if (rho.rows() != space.dim() || rho.cols() != space.dim()) {
    throw DimensionMismatch("density matrix does not match Fock space dimension");
  }
  const double t = rho.trace().real();
  if (!(t > 0.0)) throw InvalidParameter("density matrix has zero trace");
  rho /= t;
  return State(space, Dense{std::move(rho)}, tail_mass);
}

State State::with_tail_mass(double tail_mass) const { return State(space_, rep_, tail_mass); }

cplx State::element(Index row, Index col) const {
  return std::visit(
      overloaded{
          [&](const Product& p) {
            const auto [r1, r2] = space_.occupation(row);
            const auto [c1, c2] = space_.occupation(col);
            return p.mode1(r1, c1) * p.mode2(r2, c2);
          },
          [&](const Pure& p) { return p.amplitudes(row) * std::conj(p.amplitudes(col)); },
          [&](const Dense& d) { return d.rho(row, col); },
      },
      rep_);
}

Eigen::VectorXd State::populations() const {
  return std::visit(
      overloaded{
          [&](const Product& p) {
            Eigen::VectorXd out(space_.dim());
            for (int n1 = 0; n1 <= space_.cutoff1(); ++n1) {
              for (int n2 = 0; n2 <= space_.cutoff2(); ++n2) {
                out(space_.index(n1, n2)) = p.mode1(n1, n1).real() * p.mode2(n2, n2).real();
              }
            }
            return out;
          },
          [&](const Pure& p) -> Eigen::VectorXd { return p.amplitudes.cwiseAbs2(); },
          [&](const Dense& d) -> Eigen::VectorXd { return d.rho.diagonal().real(); },
      },
      rep_);
}

double State::edge_weight() const {
  const Eigen::VectorXd p = populations();
  double weight = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    const auto [n1, n2] = space_.occupation(i);
    if (space_.on_edge(n1, n2)) weight += p(i);
  }
  return weight;
}

double State::trace() const { return populations().sum(); }

double State::purity() const {
  return std::visit(
      overloaded{
          [](const Product& p) { return p.mode1.squaredNorm() * p.mode2.squaredNorm(); },
          [](const Pure& p) { return std::pow(p.amplitudes.squaredNorm(), 2); },
          [](const Dense& d) { return d.rho.squaredNorm(); },
      },
      rep_);
}

Eigen::MatrixXcd State::density_matrix() const {
  require_dense_size(space_);
  return std::visit(
      overloaded{
          [](const Product& p) -> Eigen::MatrixXcd {
            return Eigen::kroneckerProduct(p.mode1, p.mode2).eval();
          },
          [](const Pure& p) -> Eigen::MatrixXcd { return p.amplitudes * p.amplitudes.adjoint(); },
          [](const Dense& d) -> Eigen::MatrixXcd { return d.rho; },
      },
      rep_);
}

cplx expect(const State& state, const MatrixOperator& op) {
  if (!(state.space() == op.space())) {
    throw DimensionMismatch("state and operator live on different Fock spaces");
  }
  const FockSpace& space = state.space();
  return std::visit(
      overloaded{
          [&](const State::Product& p) -> cplx {
            if (op.is_kron()) {
              // Tr(rho M) = sum_ij rho_ij M_ji
              return p.mode1.transpose().cwiseProduct(op.kron().mode1).sum() *
                     p.mode2.transpose().cwiseProduct(op.kron().mode2).sum();
            }
            const SparseMatrix& m = op.sparse();
            cplx sum{};
            for (Index i = 0; i < m.outerSize(); ++i) {
              const auto [i1, i2] = space.occupation(i);
              for (SparseMatrix::InnerIterator it(m, i); it; ++it) {
                const auto [j1, j2] = space.occupation(it.col());
                sum += it.value() * p.mode1(j1, i1) * p.mode2(j2, i2);
              }
            }
            return sum;
          },
          [&](const State::Pure& p) -> cplx { return p.amplitudes.dot(op.apply(p.amplitudes)); },
          [&](const State::Dense& d) -> cplx {
            const SparseMatrix m = op.to_sparse();
            cplx sum{};
            for (Index i = 0; i < m.outerSize(); ++i) {
              for (SparseMatrix::InnerIterator it(m, i); it; ++it) {
                sum += it.value() * d.rho(it.col(), i);
              }
            }
            return sum;
          },
      },
      state.representation());
}

cplx correlation(const State& state, const MatrixOperator& lhs, const MatrixOperator& rhs) {
  if (const auto* p = std::get_if<State::Pure>(&state.representation())) {
    return lhs.apply(p->amplitudes).dot(rhs.apply(p->amplitudes));
  }
  return expect(state, lhs.adjoint() * rhs);
}

State conjugate(const State& state, const MatrixOperator& unitary) {
  if (!(state.space() == unitary.space())) {
    throw DimensionMismatch("state and operator live on different Fock spaces");
  }
  const FockSpace& space = state.space();
  auto finish = [&](State out) {
    return out.with_tail_mass(state.tail_mass() + out.edge_weight());
  };
  if (const auto* p = std::get_if<State::Pure>(&state.representation())) {
    return finish(State::pure(space, unitary.apply(p->amplitudes), 0.0));
  }
  if (const auto* p = std::get_if<State::Product>(&state.representation());
      p != nullptr && unitary.is_kron()) {
    const auto& k = unitary.kron();
    return finish(State::product(space, k.mode1 * p->mode1 * k.mode1.adjoint(),
                                 k.mode2 * p->mode2 * k.mode2.adjoint(), 0.0));
  }
  const Eigen::MatrixXcd rho = state.density_matrix();
  const Eigen::MatrixXcd u = unitary.to_dense();
  return finish(State::dense(space, u * rho * u.adjoint(), 0.0));
}

double trace_distance(const State& lhs, const State& rhs) {
  if (!(lhs.space() == rhs.space())) throw DimensionMismatch("states on different Fock spaces");
  const Eigen::MatrixXcd diff = lhs.density_matrix() - rhs.density_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (diff + diff.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

StateDiagnostics diagnose(const State& state) {
  StateDiagnostics d;
  std::visit(
      overloaded{
          [&](const State::Product& p) {
            d.hermiticity_error = std::max(hermiticity_error(p.mode1), hermiticity_error(p.mode2));
            d.trace_error = std::abs(p.mode1.trace().real() * p.mode2.trace().real() - 1.0);
            const auto [lo1, hi1] = eigen_range(p.mode1);
            const auto [lo2, hi2] = eigen_range(p.mode2);
            d.min_eigenvalue = std::min({lo1 * lo2, lo1 * hi2, hi1 * lo2, hi1 * hi2});
          },
          [&](const State::Pure& p) {
            d.hermiticity_error = 0.0;
            d.trace_error = std::abs(p.amplitudes.squaredNorm() - 1.0);
            d.min_eigenvalue = 0.0;
          },
          [&](const State::Dense& dense) {
            d.hermiticity_error = hermiticity_error(dense.rho);
            d.trace_error = std::abs(dense.rho.trace().real() - 1.0);
            d.min_eigenvalue = eigen_range(dense.rho).first;
          },
      },
      state.representation());
  return d;
}

}  // namespace nonclass

#pragma once

#include <complex>
#include <cstdint>
#include <utility>

#include <Eigen/Core>

namespace nonclass {

using cplx = std::complex<double>;
using Index = Eigen::Index;

enum class Mode : int { one = 1, two = 2 };

/// Validates a 1-based mode number.
Mode mode_from_int(int mode);

/// Truncated two-mode Fock space |n1,n2>, n1 <= cutoff1, n2 <= cutoff2.
///
/// Basis order is lexicographic in (n1, n2): index(n1, n2) = n1*(cutoff2+1) + n2,
/// so a state vector reshaped row-major is the (cutoff1+1) x (cutoff2+1)
/// amplitude table.
class FockSpace {
 public:
  FockSpace(int cutoff1, int cutoff2);

  int cutoff1() const { return cutoff1_; }
  int cutoff2() const { return cutoff2_; }
  int cutoff(Mode mode) const { return mode == Mode::one ? cutoff1_ : cutoff2_; }
  int levels(Mode mode) const { return cutoff(mode) + 1; }

  Index dim() const { return Index(cutoff1_ + 1) * Index(cutoff2_ + 1); }

  Index index(int n1, int n2) const { return Index(n1) * (cutoff2_ + 1) + n2; }
  std::pair<int, int> occupation(Index i) const {
    return {int(i / (cutoff2_ + 1)), int(i % (cutoff2_ + 1))};
  }
  bool contains(int n1, int n2) const {
    return n1 >= 0 && n2 >= 0 && n1 <= cutoff1_ && n2 <= cutoff2_;
  }

  /// True for the outermost two layers, where truncation distorts ladder algebra.
  bool on_edge(int n1, int n2) const { return n1 >= cutoff1_ - 1 || n2 >= cutoff2_ - 1; }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int cutoff1_;
  int cutoff2_;
};

FockSpace make_space(int cutoff1, int cutoff2);

}  // namespace nonclass

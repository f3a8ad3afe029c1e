#include "nonclass/fock_space.hpp"

#include <string>

#include "nonclass/errors.hpp"

namespace nonclass {

Mode mode_from_int(int mode) {
  if (mode == 1) return Mode::one;
  if (mode == 2) return Mode::two;
  throw InvalidMode("mode must be 1 or 2, got " + std::to_string(mode));
}

FockSpace::FockSpace(int cutoff1, int cutoff2) : cutoff1_(cutoff1), cutoff2_(cutoff2) {
  if (cutoff1 < 0 || cutoff2 < 0) {
    throw OutOfRange("cutoffs must be non-negative, got (" + std::to_string(cutoff1) + ", " +
                     std::to_string(cutoff2) + ")");
  }
}

FockSpace make_space(int cutoff1, int cutoff2) { return FockSpace(cutoff1, cutoff2); }

}  // namespace nonclass

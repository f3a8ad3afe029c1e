#pragma once

#include <string>
#include <vector>

namespace nonclass {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant and oracle checks on small states, plus two negative controls
/// (a corrupted ordering tensor and an undersized cutoff cap) that must be caught.
std::vector<SelftestCheck> run_selftest();

}  // namespace nonclass

#ifndef COLORCODE_VERIFY_HPP
#define COLORCODE_VERIFY_HPP

#include <string>
#include <vector>

#include "colorcode/colex.hpp"

namespace colorcode {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double worst = 0;      // worst deviation observed
  double tolerance = 0;
  std::string detail;    // where the worst deviation occurred
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  std::string summary() const;
};

// Brute-force-vs-closed-form verification sweep over a small lattice:
// spectral entropy vs the closed form, Renyi traces vs matrix powers,
// subgroup cardinalities vs the counting formulas, eta representation
// invariance, and density-matrix sanity.  grid_points log-spaced
// temperatures per lambda configuration; seed drives one random connected
// test region.
VerifyReport verify_lattice(const Colex& colex, int grid_points = 12,
                            unsigned seed = 1);

}  // namespace colorcode

#endif

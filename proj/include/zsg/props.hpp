#pragma once

#include <string>
#include <vector>

#include "zsg/augmented.hpp"

namespace zsg {

struct CheckLine {
  std::string name;
  double value = 0.0;
  std::string requirement;  // e.g. "> 1e-6", or "reported" for informational
  bool pass = true;
};

struct VerifierReport {
  std::string title;
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Visitation masses of the uniform behavioral policy on the counterexample:
// every episode passes the root and exactly one of player 1's nodes.
std::vector<MassPoint> counterexample_visit_masses();

// Start-state augmentation shifts the equilibrium: in the flagless beta = 1
// augmented counterexample, (a) player 1 gains strictly by deviating to its
// second action at the original equilibrium, and (b) the augmented game's own
// solution is heavily exploitable in the original game.
VerifierReport verify_prop1(int cfr_iterations = 100000);

// Flag conditioning recovers the original equilibrium: solving the flagged
// beta = 0.5 augmented counterexample and restricting to the root-start flag
// yields an (approximate) equilibrium of the original game.
VerifierReport verify_prop2(int cfr_iterations = 100000);

std::string format_report(const VerifierReport& report);

}  // namespace zsg

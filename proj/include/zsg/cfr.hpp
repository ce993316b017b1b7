#pragma once

#include "zsg/tabular.hpp"
#include "zsg/tree.hpp"

namespace zsg {

// Vanilla counterfactual regret minimization with regret matching on an
// enumerated tree, alternating player updates within each iteration. The
// normalized average strategy converges to a Nash equilibrium.
class CfrSolver {
 public:
  explicit CfrSolver(const GameTree& tree);

  void run(int iterations);
  int iterations_done() const { return iterations_; }

  // Normalized average strategy; uniform at infosets never reached.
  TabularPolicy average_policy() const;

 private:
  double walk(int node, int updating, double reach_own, double reach_other);

  const GameTree& tree_;
  std::array<std::vector<Eigen::VectorXd>, 2> regret_;
  std::array<std::vector<Eigen::VectorXd>, 2> strategy_sum_;
  int iterations_ = 0;
};

// Convenience: run CFR for `iterations` and return the average policy.
TabularPolicy cfr_solve(const GameTree& tree, int iterations);

}  // namespace zsg

#include "zsg/cfr.hpp"

namespace zsg {

namespace {

void regret_matching(const Eigen::VectorXd& regret, Eigen::VectorXd& strategy) {
  double positive = 0;
  for (int i = 0; i < regret.size(); ++i) positive += std::max(regret(i), 0.0);
  if (positive > 0) {
    for (int i = 0; i < regret.size(); ++i) strategy(i) = std::max(regret(i), 0.0) / positive;
  } else {
    strategy.setConstant(1.0 / regret.size());
  }
}

}  // namespace

CfrSolver::CfrSolver(const GameTree& tree) : tree_(tree) {
  for (int p = 0; p < 2; ++p) {
    regret_[p].reserve(tree.infosets(p).size());
    strategy_sum_[p].reserve(tree.infosets(p).size());
    for (const auto& info : tree.infosets(p)) {
      regret_[p].push_back(Eigen::VectorXd::Zero(info.legal.size()));
      strategy_sum_[p].push_back(Eigen::VectorXd::Zero(info.legal.size()));
    }
  }
}

// One traversal updating `updating`'s regrets (and its average-strategy
// weights), with the opponent and chance folded into reach_other. Returns the
// updating player's expected value under the current regret-matched profile.
double CfrSolver::walk(int node, int updating, double reach_own, double reach_other) {
  const auto& n = tree_.nodes()[node];
  if (n.kind == GameTree::Kind::terminal)
    return updating == 0 ? n.util0 : -n.util0;
  if (reach_own <= 0 && reach_other <= 0) return 0.0;
  if (n.kind == GameTree::Kind::chance) {
    double v = 0;
    for (int c = 0; c < n.num_children; ++c)
      v += tree_.child_prob(node, c) *
           walk(tree_.child_node(node, c), updating, reach_own,
                reach_other * tree_.child_prob(node, c));
    return v;
  }
  int p = n.player;
  auto& regret = regret_[p][n.infoset];
  int num_actions = static_cast<int>(regret.size());
  Eigen::VectorXd strategy(num_actions);
  regret_matching(regret, strategy);

  if (p != updating) {
    double v = 0;
    for (int c = 0; c < num_actions; ++c)
      if (strategy(c) > 0 || reach_own > 0)
        v += strategy(c) *
             walk(tree_.child_node(node, c), updating, reach_own, reach_other * strategy(c));
    return v;
  }

  Eigen::VectorXd child_value(num_actions);
  double v = 0;
  for (int c = 0; c < num_actions; ++c) {
    child_value(c) =
        walk(tree_.child_node(node, c), updating, reach_own * strategy(c), reach_other);
    v += strategy(c) * child_value(c);
  }
  if (reach_other > 0) regret += reach_other * (child_value.array() - v).matrix();
  if (reach_own > 0) strategy_sum_[p][n.infoset] += reach_own * strategy;
  return v;
}

void CfrSolver::run(int iterations) {
  for (int t = 0; t < iterations; ++t) {
    walk(0, 0, 1.0, 1.0);
    walk(0, 1, 1.0, 1.0);
    ++iterations_;
  }
}

TabularPolicy CfrSolver::average_policy() const {
  TabularPolicy policy;
  for (int p = 0; p < 2; ++p) {
    const auto& infosets = tree_.infosets(p);
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const auto& sum = strategy_sum_[p][k];
      double total = sum.sum();
      Eigen::VectorXd probs = total > 0
                                  ? Eigen::VectorXd(sum / total)
                                  : Eigen::VectorXd::Constant(sum.size(), 1.0 / sum.size());
      policy.set(infosets[k].key, std::move(probs));
    }
  }
  return policy;
}

TabularPolicy cfr_solve(const GameTree& tree, int iterations) {
  CfrSolver solver(tree);
  solver.run(iterations);
  return solver.average_policy();
}

}  // namespace zsg

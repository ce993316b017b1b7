#include "zsg/tabular.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace zsg {

TabularPolicy uniform_policy(const GameTree& tree) {
  TabularPolicy policy;
  for (int p = 0; p < 2; ++p) {
    for (const auto& info : tree.infosets(p)) {
      int n = static_cast<int>(info.legal.size());
      policy.set(info.key, Eigen::VectorXd::Constant(n, 1.0 / n));
    }
  }
  return policy;
}

void validate_policy(const GameTree& tree, const TabularPolicy& policy, double tol) {
  for (int p = 0; p < 2; ++p) {
    for (const auto& info : tree.infosets(p)) {
      const auto& v = policy.at(info.key);
      ZSG_CHECK(v.size() == static_cast<int>(info.legal.size()),
                "policy size mismatch at " << info.key);
      ZSG_CHECK(std::abs(v.sum() - 1.0) <= tol, "policy at " << info.key << " sums to " << v.sum());
      ZSG_CHECK(v.minCoeff() >= -tol, "negative probability at " << info.key);
    }
  }
}

double expected_value(const GameTree& tree, const TabularPolicy& p0, const TabularPolicy& p1) {
  const auto& nodes = tree.nodes();
  std::vector<double> value(nodes.size(), 0.0);
  for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
    const auto& n = nodes[i];
    switch (n.kind) {
      case GameTree::Kind::terminal: value[i] = n.util0; break;
      case GameTree::Kind::chance: {
        double v = 0;
        for (int c = 0; c < n.num_children; ++c)
          v += tree.child_prob(i, c) * value[tree.child_node(i, c)];
        value[i] = v;
        break;
      }
      case GameTree::Kind::decision: {
        const auto& info = tree.infosets(n.player)[n.infoset];
        const auto& probs = (n.player == 0 ? p0 : p1).at(info.key);
        double v = 0;
        for (int c = 0; c < n.num_children; ++c) v += probs(c) * value[tree.child_node(i, c)];
        value[i] = v;
        break;
      }
    }
  }
  return value[0];
}

BestResponseResult best_response(const GameTree& tree, const TabularPolicy& opponent,
                                 int responder) {
  const auto& nodes = tree.nodes();
  int opp = 1 - responder;
  double sign = responder == 0 ? 1.0 : -1.0;

  // Counterfactual reach: chance and opponent probabilities only.
  std::vector<double> eta(nodes.size(), 0.0);
  eta[0] = 1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.kind == GameTree::Kind::terminal) continue;
    const Eigen::VectorXd* probs = nullptr;
    if (n.kind == GameTree::Kind::decision && n.player == opp)
      probs = &opponent.at(tree.infosets(opp)[n.infoset].key);
    for (int c = 0; c < n.num_children; ++c) {
      double w = n.kind == GameTree::Kind::chance ? tree.child_prob(i, c)
                 : probs                          ? (*probs)(c)
                                                  : 1.0;
      eta[tree.child_node(i, c)] += eta[i] * w;
    }
  }

  std::vector<double> value(nodes.size(), 0.0);
  std::vector<char> valued(nodes.size(), 0);
  std::vector<int> br_action(tree.infosets(responder).size(), -1);

  std::function<double(int)> node_value = [&](int i) -> double {
    if (valued[i]) return value[i];
    const auto& n = nodes[i];
    double v = 0;
    switch (n.kind) {
      case GameTree::Kind::terminal: v = sign * n.util0; break;
      case GameTree::Kind::chance:
        for (int c = 0; c < n.num_children; ++c)
          v += tree.child_prob(i, c) * node_value(tree.child_node(i, c));
        break;
      case GameTree::Kind::decision:
        if (n.player == opp) {
          const auto& probs = opponent.at(tree.infosets(opp)[n.infoset].key);
          for (int c = 0; c < n.num_children; ++c)
            v += probs(c) * node_value(tree.child_node(i, c));
        } else {
          if (br_action[n.infoset] < 0) {
            // Score every action over the whole infoset; descending into the
            // children resolves any deeper responder infosets first.
            const auto& info = tree.infosets(responder)[n.infoset];
            int num_actions = static_cast<int>(info.legal.size());
            Eigen::VectorXd score = Eigen::VectorXd::Zero(num_actions);
            for (int h : info.nodes)
              for (int c = 0; c < num_actions; ++c)
                score(c) += eta[h] * node_value(tree.child_node(h, c));
            int best = 0;
            score.maxCoeff(&best);
            br_action[n.infoset] = best;
          }
          v = node_value(tree.child_node(i, br_action[n.infoset]));
        }
        break;
    }
    valued[i] = 1;
    value[i] = v;
    return v;
  };

  BestResponseResult result;
  result.value = node_value(0);
  const auto& infosets = tree.infosets(responder);
  for (std::size_t k = 0; k < infosets.size(); ++k) {
    int n = static_cast<int>(infosets[k].legal.size());
    Eigen::VectorXd probs = Eigen::VectorXd::Zero(n);
    probs(br_action[k] < 0 ? 0 : br_action[k]) = 1.0;  // unreached: any action
    result.policy.set(infosets[k].key, std::move(probs));
  }
  return result;
}

ExploitabilityReport exploitability(const GameTree& tree, const TabularPolicy& joint) {
  ExploitabilityReport r;
  double u0 = expected_value(tree, joint, joint);
  r.policy_value[0] = u0;
  r.policy_value[1] = -u0;
  r.br_value[0] = best_response(tree, joint, 0).value;
  r.br_value[1] = best_response(tree, joint, 1).value;
  r.nash_conv = r.br_value[0] + r.br_value[1];
  r.exploitability = r.nash_conv / 2.0;
  return r;
}

std::string to_json(const ExploitabilityReport& r) {
  std::ostringstream oss;
  oss.precision(12);
  oss << "{\"best_response_value\":[" << r.br_value[0] << "," << r.br_value[1] << "],"
      << "\"policy_value\":[" << r.policy_value[0] << "," << r.policy_value[1] << "],"
      << "\"nash_conv\":" << r.nash_conv << ",\"exploitability\":" << r.exploitability << "}";
  return oss.str();
}

}  // namespace zsg

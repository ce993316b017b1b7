#pragma once

#include <Eigen/Core>
#include <string>
#include <unordered_map>

#include "zsg/tree.hpp"

namespace zsg {

// Map from infoset key to a probability vector over that infoset's legal
// actions, in the infoset's legal-action order. One table can cover both
// players; keys are player-qualified.
struct TabularPolicy {
  std::unordered_map<std::string, Eigen::VectorXd> table;

  const Eigen::VectorXd& at(const std::string& key) const {
    auto it = table.find(key);
    ZSG_CHECK(it != table.end(), "policy has no entry for infoset " << key);
    return it->second;
  }
  bool contains(const std::string& key) const { return table.count(key) > 0; }
  void set(const std::string& key, Eigen::VectorXd probs) { table[key] = std::move(probs); }
};

// Uniform policy over every infoset of the tree.
TabularPolicy uniform_policy(const GameTree& tree);

// Validates that each entry used by the tree sums to 1 within tol.
void validate_policy(const GameTree& tree, const TabularPolicy& policy, double tol = 1e-9);

// Expected utility of player 0 under (p0, p1); a single joint table may be
// passed for both sides.
double expected_value(const GameTree& tree, const TabularPolicy& p0, const TabularPolicy& p1);

struct BestResponseResult {
  double value = 0.0;  // responder's expected utility at the root
  TabularPolicy policy;
};

// Exact best response against a fixed opponent policy: counterfactual reach
// weights from a full-tree pass, then per-infoset argmax with deeper choices
// resolved first (demand-driven, so mixed-depth infosets are handled).
BestResponseResult best_response(const GameTree& tree, const TabularPolicy& opponent,
                                 int responder);

struct ExploitabilityReport {
  double br_value[2] = {0, 0};      // each responder's own payoff
  double policy_value[2] = {0, 0};  // joint policy's payoff per player
  double nash_conv = 0.0;           // br_value[0] + br_value[1]
  double exploitability = 0.0;      // nash_conv / 2
};

ExploitabilityReport exploitability(const GameTree& tree, const TabularPolicy& joint);

std::string to_json(const ExploitabilityReport& report);

}  // namespace zsg

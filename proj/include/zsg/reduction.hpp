#pragma once

#include <Eigen/Core>
#include <functional>
#include <unordered_map>

#include "zsg/control.hpp"
#include "zsg/rng.hpp"
#include "zsg/tabular.hpp"

namespace zsg {

// One timer layer of a navigation segment: every active cell of one forfeit
// infoset at time-remaining t, as observation columns plus move masks.
struct NavQueryBatch {
  const GameTree::Infoset* infoset = nullptr;  // forfeit-game infoset
  int t = 0;
  std::vector<std::pair<int, int>> cells;
  Eigen::MatrixXf obs;                                   // obs_len x n, flag filled
  Eigen::Array<bool, kNumMoves, Eigen::Dynamic> mask;    // per column
};

// Returns kNumMoves x n move probabilities; columns must sum to 1 with zero
// mass on masked moves.
using ControlPolicyFn = std::function<Eigen::MatrixXf(const NavQueryBatch&)>;

// Forward dynamic program over (cell, timer) for one forfeit infoset: unit
// mass starts at the center with a full timer and flows through the policy's
// move distributions; after the last step the mass on action square k becomes
// the probability of base action k (where legal) and everything else forfeits.
struct InfosetReduction {
  const GameTree::Infoset* infoset = nullptr;
  Eigen::VectorXd sigma;  // forfeit-infoset legal order (base actions, forfeit last)
  // Move distribution per visited (t, cell), kept for Monte Carlo replay.
  std::vector<std::unordered_map<int, std::array<double, kNumMoves>>> layers;
};

InfosetReduction reduce_infoset(const ControlGame& game, const GameTree::Infoset& infoset,
                                const ControlPolicyFn& policy, int eval_flag, bool keep_layers);

// Reduces every infoset of the forfeit tree to a tabular policy on it.
TabularPolicy reduce_control_policy(const ControlGame& game, const GameTree& ff_tree,
                                    const ControlPolicyFn& policy, int eval_flag);

// Samples navigation outcomes from the distributions the reduction cached;
// returns outcome frequencies aligned with sigma.
Eigen::VectorXd mc_outcome_frequencies(const ControlGame& game, const InfosetReduction& reduction,
                                       long samples, Rng& rng);

// Scripted shortest-path navigator used by the behavioral policy and the
// reduction checks: per infoset it heads for the square of the first legal
// base action, rows before columns.
ControlPolicyFn scripted_navigator_policy(const ControlGame& game);

// Uniform distribution over the legal moves of each cell.
ControlPolicyFn uniform_move_policy();

}  // namespace zsg

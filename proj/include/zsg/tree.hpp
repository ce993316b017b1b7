#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsg/game.hpp"

namespace zsg {

// Fully enumerated extensive-form tree of a small game. Simultaneous nodes are
// expanded into two sequential levels (player 0 then player 1); information
// sets merge through the game's infoset keys, so the expansion preserves the
// information structure. Children of a node are stored contiguously and always
// after the node itself.
class GameTree {
 public:
  enum class Kind : std::uint8_t { decision, chance, terminal };

  struct Node {
    Kind kind;
    std::int8_t player = -1;  // decision nodes
    int depth = 0;
    int infoset = -1;  // index into infosets(player)
    int first_child = 0;
    int num_children = 0;
    double util0 = 0.0;  // terminal nodes, player 0's utility
  };

  struct Infoset {
    std::string key;
    int player;
    std::vector<Action> legal;
    std::vector<int> nodes;
    int depth_min = 0;
    int depth_max = 0;
    Eigen::VectorXf obs_core;  // representative observation, flag slot excluded
  };

  static GameTree build(const Game& game);

  const std::vector<Node>& nodes() const { return nodes_; }
  int child_node(int node, int i) const { return child_node_[nodes_[node].first_child + i]; }
  Action child_action(int node, int i) const {
    return child_action_[nodes_[node].first_child + i];
  }
  double child_prob(int node, int i) const { return child_prob_[nodes_[node].first_child + i]; }

  const std::vector<Infoset>& infosets(int player) const { return infosets_[player]; }
  const Infoset& infoset_of(int player, const std::string& key) const;
  int num_infosets(int player) const { return static_cast<int>(infosets_[player].size()); }

  // True when every information set's nodes share one depth (holds for all
  // registry games; augmented games mix depths by construction).
  bool uniform_infoset_depth() const { return uniform_infoset_depth_; }
  int max_depth() const { return max_depth_; }

 private:
  std::vector<Node> nodes_;
  std::vector<int> child_node_;
  std::vector<Action> child_action_;
  std::vector<double> child_prob_;
  std::array<std::vector<Infoset>, 2> infosets_;
  std::array<std::unordered_map<std::string, int>, 2> infoset_index_;
  bool uniform_infoset_depth_ = true;
  int max_depth_ = 0;
};

}  // namespace zsg

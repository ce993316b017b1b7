#include "zsg/tree.hpp"

#include <functional>

namespace zsg {

namespace {

struct TmpNode {
  GameTree::Kind kind;
  int player = -1;
  int depth = 0;
  int infoset = -1;
  double util0 = 0.0;
  std::vector<int> children;
  std::vector<Action> actions;
  std::vector<double> probs;
};

}  // namespace

GameTree GameTree::build(const Game& game) {
  GameTree tree;
  std::vector<TmpNode> tmp;
  int obs_core_len = game.spec().observation_length - 1;

  auto intern_infoset = [&](const State& s, int player, int depth) {
    auto key = s.infoset_key(player);
    auto& index = tree.infoset_index_[player];
    auto it = index.find(key);
    if (it == index.end()) {
      Infoset info;
      info.key = key;
      info.player = player;
      info.legal = s.legal_actions(player);
      info.depth_min = info.depth_max = depth;
      info.obs_core.resize(obs_core_len);
      s.write_obs_core(player, info.obs_core);
      tree.infosets_[player].push_back(std::move(info));
      it = index.emplace(key, static_cast<int>(tree.infosets_[player].size() - 1)).first;
    } else {
      auto& info = tree.infosets_[player][it->second];
      ZSG_CHECK(info.legal == s.legal_actions(player),
                "legal actions differ within infoset " << key);
      info.depth_min = std::min(info.depth_min, depth);
      info.depth_max = std::max(info.depth_max, depth);
      if (info.depth_min != info.depth_max) tree.uniform_infoset_depth_ = false;
    }
    return it->second;
  };

  // Expands a state into the node at index `id`.
  std::function<void(const State&, int)> expand = [&](const State& s, int id) {
    int depth = tmp[id].depth;
    tree.max_depth_ = std::max(tree.max_depth_, depth);
    if (s.is_terminal()) {
      tmp[id].kind = Kind::terminal;
      tmp[id].util0 = s.returns()[0];
      return;
    }
    if (s.is_chance()) {
      tmp[id].kind = Kind::chance;
      for (const auto& o : s.chance_outcomes()) {
        int child = static_cast<int>(tmp.size());
        tmp.push_back({});
        tmp[child].depth = depth + 1;
        tmp[id].children.push_back(child);
        tmp[id].actions.push_back(o.action);
        tmp[id].probs.push_back(o.prob);
        auto next = s.clone();
        next->apply_action(o.action);
        expand(*next, child);
      }
      return;
    }
    if (s.is_simultaneous()) {
      // Two sequential levels; player 1's key hides player 0's pending action.
      tmp[id].kind = Kind::decision;
      tmp[id].player = 0;
      tmp[id].infoset = intern_infoset(s, 0, depth);
      tree.infosets_[0][tmp[id].infoset].nodes.push_back(id);
      for (Action a0 : s.legal_actions(0)) {
        int mid = static_cast<int>(tmp.size());
        tmp.push_back({});
        tmp[mid].kind = Kind::decision;
        tmp[mid].player = 1;
        tmp[mid].depth = depth + 1;
        tmp[mid].infoset = intern_infoset(s, 1, depth + 1);
        tree.infosets_[1][tmp[mid].infoset].nodes.push_back(mid);
        tree.max_depth_ = std::max(tree.max_depth_, depth + 1);
        tmp[id].children.push_back(mid);
        tmp[id].actions.push_back(a0);
        tmp[id].probs.push_back(1.0);
        for (Action a1 : s.legal_actions(1)) {
          int child = static_cast<int>(tmp.size());
          tmp.push_back({});
          tmp[child].depth = depth + 2;
          tmp[mid].children.push_back(child);
          tmp[mid].actions.push_back(a1);
          tmp[mid].probs.push_back(1.0);
          auto next = s.clone();
          next->apply_joint_action(a0, a1);
          expand(*next, child);
        }
      }
      return;
    }
    int player = s.current_player();
    tmp[id].kind = Kind::decision;
    tmp[id].player = player;
    tmp[id].infoset = intern_infoset(s, player, depth);
    tree.infosets_[player][tmp[id].infoset].nodes.push_back(id);
    for (Action a : s.legal_actions(player)) {
      int child = static_cast<int>(tmp.size());
      tmp.push_back({});
      tmp[child].depth = depth + 1;
      tmp[id].children.push_back(child);
      tmp[id].actions.push_back(a);
      tmp[id].probs.push_back(1.0);
      auto next = s.clone();
      next->apply_action(a);
      expand(*next, child);
    }
  };

  auto root = game.new_initial_state();
  tmp.push_back({});
  expand(*root, 0);

  tree.nodes_.resize(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) {
    Node& n = tree.nodes_[i];
    n.kind = tmp[i].kind;
    n.player = static_cast<std::int8_t>(tmp[i].player);
    n.depth = tmp[i].depth;
    n.infoset = tmp[i].infoset;
    n.util0 = tmp[i].util0;
    n.first_child = static_cast<int>(tree.child_node_.size());
    n.num_children = static_cast<int>(tmp[i].children.size());
    for (std::size_t c = 0; c < tmp[i].children.size(); ++c) {
      tree.child_node_.push_back(tmp[i].children[c]);
      tree.child_action_.push_back(tmp[i].actions[c]);
      tree.child_prob_.push_back(tmp[i].probs[c]);
    }
  }
  return tree;
}

const GameTree::Infoset& GameTree::infoset_of(int player, const std::string& key) const {
  auto it = infoset_index_[player].find(key);
  ZSG_CHECK(it != infoset_index_[player].end(), "unknown infoset key " << key);
  return infosets_[player][it->second];
}

}  // namespace zsg

#pragma once

#include <Eigen/Core>
#include <array>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zsg/check.hpp"

namespace zsg {

using Action = int;
using Player = int;  // 0 or 1

inline constexpr int kChancePlayer = -1;
inline constexpr int kSimultaneous = -2;
inline constexpr int kTerminalPlayer = -3;

struct GameSpec {
  int num_players = 2;
  int max_actions = 0;         // upper bound on per-node action count
  int observation_length = 0;  // fixed across all states, flag slot included
  int max_game_length = 0;     // bound on history length
  bool has_simultaneous_nodes = false;
};

struct ChanceOutcome {
  Action action;
  double prob;
};

// A game state identified by its action history. Concrete states keep derived
// fields updated incrementally in apply_action; replaying the history from the
// root must reproduce them exactly.
class State {
 public:
  virtual ~State() = default;
  virtual std::unique_ptr<State> clone() const = 0;

  // Player to act: 0/1, kChancePlayer, kSimultaneous, or kTerminalPlayer.
  virtual int current_player() const = 0;
  bool is_terminal() const { return current_player() == kTerminalPlayer; }
  bool is_chance() const { return current_player() == kChancePlayer; }
  bool is_simultaneous() const { return current_player() == kSimultaneous; }

  // Legal actions for an acting player. Stable ordering across calls.
  virtual std::vector<Action> legal_actions(Player player) const = 0;
  std::vector<Action> legal_actions() const {
    int p = current_player();
    ZSG_CHECK(p == 0 || p == 1, "legal_actions(): not a single-player decision node");
    return legal_actions(p);
  }

  virtual std::vector<ChanceOutcome> chance_outcomes() const = 0;

  // Applies one action at a sequential/chance node.
  virtual void apply_action(Action action) = 0;
  // Applies a joint action at a simultaneous node.
  virtual void apply_joint_action(Action a0, Action a1) = 0;

  // Terminal utilities; u[0] + u[1] == 0 exactly.
  virtual std::array<double, 2> returns() const = 0;

  // Canonical byte-string key of the acting player's information state.
  virtual std::string infoset_key(Player player) const = 0;

  // Observation features without the trailing flag slot.
  virtual void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const = 0;

  // Full observation: core features then the episode-source flag.
  void write_observation(Player player, int flag, Eigen::Ref<Eigen::VectorXf> out) const {
    ZSG_CHECK(flag == 0 || flag == 1, "flag must be 0 or 1");
    write_obs_core(player, out.head(out.size() - 1));
    out(out.size() - 1) = static_cast<float>(flag);
  }
  Eigen::VectorXf observation(Player player, int flag, int obs_len) const {
    Eigen::VectorXf out(obs_len);
    write_observation(player, flag, out);
    return out;
  }

  const std::vector<Action>& history() const { return history_; }

 protected:
  std::vector<Action> history_;
};

class Game {
 public:
  virtual ~Game() = default;
  virtual const GameSpec& spec() const = 0;
  virtual std::string name() const = 0;
  virtual std::unique_ptr<State> new_initial_state() const = 0;
  // Lower bound on any player's terminal utility. Not necessarily attained
  // (Goofspiel's bound is the full prize sum even though tie discards make it
  // unreachable); the forfeit transform builds its payoff from this bound.
  virtual double min_utility() const = 0;

  // Replays an action history from the root. Throws std::invalid_argument
  // naming the first offending index if the prefix is not a valid sequence.
  std::unique_ptr<State> restore_from_history(std::span<const Action> history) const;
};

using GamePtr = std::shared_ptr<const Game>;

}  // namespace zsg

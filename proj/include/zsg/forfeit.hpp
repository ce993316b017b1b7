#pragma once

#include "zsg/game.hpp"

namespace zsg {

// Adds a forfeit action (id = base max_actions) to every decision node. A
// forfeit ends the episode immediately; the forfeiting player receives
// base min_utility - 1 and the opponent the negation. When both players
// forfeit in the same joint action, player 0 is the forfeiter.
class ForfeitGame final : public Game {
 public:
  explicit ForfeitGame(GamePtr base);

  const GameSpec& spec() const override { return spec_; }
  std::string name() const override { return base_->name() + "-ff"; }
  std::unique_ptr<State> new_initial_state() const override;
  double min_utility() const override { return forfeit_payoff_; }

  const Game& base_game() const { return *base_; }
  Action forfeit_action() const { return forfeit_action_; }
  double forfeit_payoff() const { return forfeit_payoff_; }
  // Count of non-forfeit actions the base game can offer at one node.
  int base_max_actions() const { return base_->spec().max_actions; }

 private:
  GamePtr base_;
  GameSpec spec_;
  Action forfeit_action_;
  double forfeit_payoff_;
};

std::shared_ptr<const ForfeitGame> forfeit_wrap(GamePtr base);

}  // namespace zsg

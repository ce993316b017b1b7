#pragma once

#include "zsg/game.hpp"
#include "zsg/tabular.hpp"

namespace zsg {

struct MassPoint {
  std::vector<Action> history;  // non-terminal history of the inner game
  double mass;
};

// Extends a game with a start-distribution chance root: with weight 1 - beta
// play begins at the inner root, with weight beta * mass at the state restored
// from each mass point. With with_flag = true every infoset key is suffixed by
// the episode source (|f0 root branch, |f1 dataset branches), which partitions
// each player's infosets by branch origin; without the flag the inner keys are
// kept, merging information states across branches exactly as a flag-blind
// policy would. Zero-weight branches are dropped.
class AugmentedGame final : public Game {
 public:
  AugmentedGame(GamePtr inner, std::vector<MassPoint> masses, double beta, bool with_flag);

  const GameSpec& spec() const override { return spec_; }
  std::string name() const override;
  std::unique_ptr<State> new_initial_state() const override;
  double min_utility() const override { return inner_->min_utility(); }

  const Game& inner() const { return *inner_; }
  bool with_flag() const { return with_flag_; }
  int num_branches() const { return static_cast<int>(branches_.size()); }
  double branch_prob(int b) const { return branches_[b].prob; }
  int branch_flag(int b) const { return branches_[b].flag; }
  const std::vector<Action>& branch_history(int b) const { return branches_[b].history; }

 private:
  friend class AugmentedState;
  struct Branch {
    double prob;
    int flag;  // 0 root-start, 1 dataset-start
    std::vector<Action> history;
  };
  GamePtr inner_;
  std::vector<Branch> branches_;
  bool with_flag_;
  GameSpec spec_;
};

std::shared_ptr<const AugmentedGame> build_augmented_game(GamePtr inner,
                                                          std::vector<MassPoint> masses,
                                                          double beta, bool with_flag);

// Projects a flagged policy onto one episode source: entries keyed
// "<inner>|fN" become "<inner>". Entries for the other flag are dropped.
TabularPolicy restrict_to_flag(const TabularPolicy& flagged, int flag);

// Closed-form solution of the counterexample game.
struct CounterexampleNe {
  long p_num = 11, p_den = 13;      // both players' probability on action 0
  long value_num = -9, value_den = 13;
  double p() const { return static_cast<double>(p_num) / p_den; }
  double q() const { return p(); }
  double value() const { return static_cast<double>(value_num) / value_den; }
};

CounterexampleNe counterexample_ne();

}  // namespace zsg

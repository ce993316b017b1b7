#include "zsg/augmented.hpp"

#include <cmath>
#include <sstream>

namespace zsg {

class AugmentedState final : public State {
 public:
  explicit AugmentedState(const AugmentedGame* game) : game_(game) {}

  AugmentedState(const AugmentedState& o)
      : game_(o.game_), inner_(o.inner_ ? o.inner_->clone() : nullptr), branch_(o.branch_) {
    history_ = o.history_;
  }

  std::unique_ptr<State> clone() const override { return std::make_unique<AugmentedState>(*this); }

  int current_player() const override {
    return inner_ ? inner_->current_player() : kChancePlayer;
  }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(inner_ != nullptr, "legal_actions before the start branch is drawn");
    return inner_->legal_actions(player);
  }

  std::vector<ChanceOutcome> chance_outcomes() const override {
    if (inner_) return inner_->chance_outcomes();
    std::vector<ChanceOutcome> out;
    for (int b = 0; b < game_->num_branches(); ++b) out.push_back({b, game_->branch_prob(b)});
    return out;
  }

  void apply_action(Action action) override {
    if (!inner_) {
      ZSG_CHECK(action >= 0 && action < game_->num_branches(),
                "invalid start branch " << action);
      branch_ = action;
      inner_ = game_->inner().restore_from_history(game_->branch_history(action));
    } else {
      inner_->apply_action(action);
    }
    history_.push_back(action);
  }

  void apply_joint_action(Action a0, Action a1) override {
    ZSG_CHECK(inner_ != nullptr, "apply_joint_action before the start branch");
    inner_->apply_joint_action(a0, a1);
    history_.push_back(a0);
    history_.push_back(a1);
  }

  std::array<double, 2> returns() const override {
    ZSG_CHECK(inner_ != nullptr, "returns before the start branch");
    return inner_->returns();
  }

  std::string infoset_key(Player player) const override {
    ZSG_CHECK(inner_ != nullptr, "infoset_key before the start branch");
    std::string key = inner_->infoset_key(player);
    if (game_->with_flag()) key += game_->branch_flag(branch_) ? "|f1" : "|f0";
    return key;
  }

  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    ZSG_CHECK(inner_ != nullptr, "observation before the start branch");
    inner_->write_obs_core(player, out);
  }

 private:
  const AugmentedGame* game_;
  std::unique_ptr<State> inner_;
  int branch_ = -1;
};

AugmentedGame::AugmentedGame(GamePtr inner, std::vector<MassPoint> masses, double beta,
                             bool with_flag)
    : inner_(std::move(inner)), with_flag_(with_flag) {
  ZSG_CHECK(beta >= 0.0 && beta <= 1.0, "beta must lie in [0,1]");
  double total = 0;
  for (const auto& m : masses) total += m.mass;
  if (beta > 0 && std::abs(total - 1.0) > 1e-9) {
    std::ostringstream oss;
    oss << "dataset masses sum to " << total << ", expected 1";
    throw std::invalid_argument(oss.str());
  }
  if (1.0 - beta > 0) branches_.push_back({1.0 - beta, 0, {}});
  for (auto& m : masses) {
    double w = beta * m.mass;
    if (w > 0) {
      auto probe = inner_->restore_from_history(m.history);
      ZSG_CHECK(!probe->is_terminal(), "mass point replays to a terminal state");
      branches_.push_back({w, 1, std::move(m.history)});
    }
  }
  ZSG_CHECK(!branches_.empty(), "augmented game has no start branches");
  spec_ = inner_->spec();
  spec_.max_game_length += 1;
}

std::string AugmentedGame::name() const {
  return inner_->name() + (with_flag_ ? "-aug-flagged" : "-aug");
}

std::unique_ptr<State> AugmentedGame::new_initial_state() const {
  return std::make_unique<AugmentedState>(this);
}

std::shared_ptr<const AugmentedGame> build_augmented_game(GamePtr inner,
                                                          std::vector<MassPoint> masses,
                                                          double beta, bool with_flag) {
  return std::make_shared<AugmentedGame>(std::move(inner), std::move(masses), beta, with_flag);
}

TabularPolicy restrict_to_flag(const TabularPolicy& flagged, int flag) {
  std::string suffix = flag ? "|f1" : "|f0";
  TabularPolicy out;
  for (const auto& [key, probs] : flagged.table) {
    if (key.size() >= suffix.size() &&
        key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0) {
      out.set(key.substr(0, key.size() - suffix.size()), probs);
    }
  }
  return out;
}

CounterexampleNe counterexample_ne() { return CounterexampleNe{}; }

}  // namespace zsg

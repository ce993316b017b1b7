#include "zsg/forfeit.hpp"

#include <algorithm>
#include <sstream>

namespace zsg {
namespace {

class ForfeitState final : public State {
 public:
  ForfeitState(const ForfeitGame* game, std::unique_ptr<State> base)
      : game_(game), base_(std::move(base)) {}

  ForfeitState(const ForfeitState& o)
      : game_(o.game_), base_(o.base_->clone()), forfeited_by_(o.forfeited_by_) {
    history_ = o.history_;
  }

  std::unique_ptr<State> clone() const override { return std::make_unique<ForfeitState>(*this); }

  int current_player() const override {
    if (forfeited_by_ >= 0) return kTerminalPlayer;
    return base_->current_player();
  }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(forfeited_by_ < 0, "legal_actions on a forfeited (terminal) state");
    auto out = base_->legal_actions(player);
    out.push_back(game_->forfeit_action());
    return out;
  }

  std::vector<ChanceOutcome> chance_outcomes() const override {
    return base_->chance_outcomes();
  }

  void apply_action(Action action) override {
    ZSG_CHECK(forfeited_by_ < 0, "apply_action on a forfeited state");
    if (base_->is_chance()) {
      base_->apply_action(action);
    } else if (action == game_->forfeit_action()) {
      forfeited_by_ = base_->current_player();
      ZSG_CHECK(forfeited_by_ == 0 || forfeited_by_ == 1, "forfeit outside a decision node");
    } else {
      base_->apply_action(action);
    }
    history_.push_back(action);
  }

  void apply_joint_action(Action a0, Action a1) override {
    ZSG_CHECK(forfeited_by_ < 0, "apply_joint_action on a forfeited state");
    Action ff = game_->forfeit_action();
    check_joint(0, a0);
    check_joint(1, a1);
    if (a0 == ff) {
      forfeited_by_ = 0;  // covers the double-forfeit case
    } else if (a1 == ff) {
      forfeited_by_ = 1;
    } else {
      base_->apply_joint_action(a0, a1);
    }
    history_.push_back(a0);
    history_.push_back(a1);
  }

  std::array<double, 2> returns() const override {
    if (forfeited_by_ >= 0) {
      double fp = game_->forfeit_payoff();
      return forfeited_by_ == 0 ? std::array<double, 2>{fp, -fp}
                                : std::array<double, 2>{-fp, fp};
    }
    return base_->returns();
  }

  std::string infoset_key(Player player) const override { return base_->infoset_key(player); }

  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    base_->write_obs_core(player, out);
  }

  const State& base_state() const { return *base_; }

 private:
  void check_joint(Player p, Action a) const {
    if (a == game_->forfeit_action()) return;
    auto legal = base_->legal_actions(p);
    if (std::find(legal.begin(), legal.end(), a) == legal.end()) {
      std::ostringstream oss;
      oss << "illegal action " << a << " at infoset " << infoset_key(p);
      throw std::logic_error(oss.str());
    }
  }

  const ForfeitGame* game_;
  std::unique_ptr<State> base_;
  int forfeited_by_ = -1;
};

}  // namespace

ForfeitGame::ForfeitGame(GamePtr base) : base_(std::move(base)) {
  forfeit_action_ = base_->spec().max_actions;
  forfeit_payoff_ = base_->min_utility() - 1.0;
  spec_ = base_->spec();
  spec_.max_actions += 1;
}

std::unique_ptr<State> ForfeitGame::new_initial_state() const {
  return std::make_unique<ForfeitState>(this, base_->new_initial_state());
}

std::shared_ptr<const ForfeitGame> forfeit_wrap(GamePtr base) {
  return std::make_shared<ForfeitGame>(std::move(base));
}

}  // namespace zsg

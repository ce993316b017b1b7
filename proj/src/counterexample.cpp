#include "zsg/games/counterexample.hpp"

#include <sstream>

namespace zsg {
namespace {

constexpr double kPayoff[2][2] = {{-1.0, 1.0}, {1.0, -10.0}};

class CounterexampleState final : public State {
 public:
  explicit CounterexampleState(const Game* game) : game_(game) {}

  std::unique_ptr<State> clone() const override {
    return std::make_unique<CounterexampleState>(*this);
  }

  int current_player() const override {
    int n = static_cast<int>(history_.size());
    return n < 2 ? n : kTerminalPlayer;
  }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(current_player() == player,
              "legal_actions: player " << player << " is not acting");
    return {0, 1};
  }

  std::vector<ChanceOutcome> chance_outcomes() const override {
    ZSG_FAIL("counterexample has no chance nodes");
  }

  void apply_action(Action action) override {
    int p = current_player();
    ZSG_CHECK(p == 0 || p == 1, "apply_action on a non-decision state");
    if (action != 0 && action != 1) {
      std::ostringstream oss;
      oss << "illegal action " << action << " at infoset " << infoset_key(p);
      throw std::logic_error(oss.str());
    }
    history_.push_back(action);
  }

  void apply_joint_action(Action, Action) override {
    ZSG_FAIL("counterexample has no simultaneous nodes");
  }

  std::array<double, 2> returns() const override {
    ZSG_CHECK(is_terminal(), "returns() on a non-terminal state");
    double u0 = kPayoff[history_[0]][history_[1]];
    return {u0, -u0};
  }

  std::string infoset_key(Player player) const override {
    ZSG_CHECK(player == 0 || player == 1, "infoset_key: bad player " << player);
    // Player 1 never observes player 0's action: one shared key.
    return player == 0 ? "ce|p0" : "ce|p1";
  }

  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    out.setZero();
    out(player) = 1.0f;
  }

 private:
  const Game* game_;
};

class CounterexampleGame final : public Game {
 public:
  CounterexampleGame() {
    spec_.max_actions = 2;
    spec_.observation_length = 3;  // me(2) + flag
    spec_.max_game_length = 2;
    spec_.has_simultaneous_nodes = false;
  }
  const GameSpec& spec() const override { return spec_; }
  std::string name() const override { return "ce"; }
  std::unique_ptr<State> new_initial_state() const override {
    return std::make_unique<CounterexampleState>(this);
  }
  double min_utility() const override { return -10.0; }

 private:
  GameSpec spec_;
};

}  // namespace

GamePtr make_counterexample() { return std::make_shared<CounterexampleGame>(); }

}  // namespace zsg

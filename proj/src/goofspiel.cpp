#include "zsg/games/goofspiel.hpp"

#include <sstream>

namespace zsg {
namespace {

class GoofspielState final : public State {
 public:
  explicit GoofspielState(const Game* game) : game_(game) {}

  std::unique_ptr<State> clone() const override {
    return std::make_unique<GoofspielState>(*this);
  }

  int current_player() const override {
    if (rounds_done_ == 4) return kTerminalPlayer;
    return current_prize_ < 0 ? kChancePlayer : kSimultaneous;
  }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(is_simultaneous(), "legal_actions: not a bidding node");
    ZSG_CHECK(player == 0 || player == 1, "legal_actions: bad player " << player);
    std::vector<Action> out;
    for (Action a = 0; a < 4; ++a)
      if (hands_[player] & (1 << a)) out.push_back(a);
    return out;
  }

  std::vector<ChanceOutcome> chance_outcomes() const override {
    ZSG_CHECK(is_chance(), "chance_outcomes: not a chance node");
    std::vector<ChanceOutcome> out;
    int remaining = 0;
    for (int z = 0; z < 4; ++z)
      if (prizes_left_ & (1 << z)) ++remaining;
    for (int z = 0; z < 4; ++z)
      if (prizes_left_ & (1 << z)) out.push_back({z, 1.0 / remaining});
    return out;
  }

  void apply_action(Action action) override {
    ZSG_CHECK(is_chance(), "apply_action: Goofspiel decisions are joint");
    ZSG_CHECK(action >= 0 && action < 4 && (prizes_left_ & (1 << action)),
              "invalid prize outcome " << action);
    current_prize_ = action;
    prizes_left_ &= ~(1 << action);
    history_.push_back(action);
  }

  void apply_joint_action(Action a0, Action a1) override {
    ZSG_CHECK(is_simultaneous(), "apply_joint_action: not a bidding node");
    check_bid(0, a0);
    check_bid(1, a1);
    hands_[0] &= ~(1 << a0);
    hands_[1] &= ~(1 << a1);
    int prize_value = current_prize_ + 1;
    if (a0 > a1) points_[0] += prize_value;
    else if (a1 > a0) points_[1] += prize_value;
    rounds_[rounds_done_] = {current_prize_, a0, a1};
    ++rounds_done_;
    current_prize_ = -1;
    history_.push_back(a0);
    history_.push_back(a1);
  }

  std::array<double, 2> returns() const override {
    ZSG_CHECK(is_terminal(), "returns() on a non-terminal state");
    double u0 = points_[0] - points_[1];
    return {u0, -u0};
  }

  std::string infoset_key(Player player) const override {
    ZSG_CHECK(player == 0 || player == 1, "infoset_key: bad player " << player);
    std::ostringstream oss;
    oss << "g4|p" << player << "|h";
    for (int a = 0; a < 4; ++a) oss << ((hands_[player] >> a) & 1);
    oss << "|z" << (current_prize_ < 0 ? -1 : current_prize_) << "|r";
    for (int r = 0; r < rounds_done_; ++r) {
      oss << "(" << rounds_[r].prize << "," << rounds_[r].bid[player] << ","
          << rounds_[r].bid[1 - player] << ")";
    }
    return oss.str();
  }

  // me(2) | hand(4) | current prize(4) | 3 completed rounds x
  // [prize(4), own bid(4), opp bid(4)]
  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    out.setZero();
    out(player) = 1.0f;
    for (int a = 0; a < 4; ++a)
      if (hands_[player] & (1 << a)) out(2 + a) = 1.0f;
    if (current_prize_ >= 0) out(6 + current_prize_) = 1.0f;
    for (int r = 0; r < rounds_done_ && r < 3; ++r) {
      int base = 10 + 12 * r;
      out(base + rounds_[r].prize) = 1.0f;
      out(base + 4 + rounds_[r].bid[player]) = 1.0f;
      out(base + 8 + rounds_[r].bid[1 - player]) = 1.0f;
    }
  }

 private:
  void check_bid(Player p, Action a) const {
    if (a < 0 || a >= 4 || !(hands_[p] & (1 << a))) {
      std::ostringstream oss;
      oss << "illegal bid " << a << " at infoset " << infoset_key(p);
      throw std::logic_error(oss.str());
    }
  }

  struct Round {
    int prize;
    int bid[2];
  };

  const Game* game_;
  int hands_[2] = {0b1111, 0b1111};
  int prizes_left_ = 0b1111;
  int current_prize_ = -1;
  int points_[2] = {0, 0};
  int rounds_done_ = 0;
  Round rounds_[4] = {};
};

class GoofspielGame final : public Game {
 public:
  GoofspielGame() {
    spec_.max_actions = 4;
    spec_.observation_length = 47;  // 46 core + flag
    spec_.max_game_length = 12;     // 4 x (reveal + joint bid)
    spec_.has_simultaneous_nodes = true;
  }
  const GameSpec& spec() const override { return spec_; }
  std::string name() const override { return "goofspiel4"; }
  std::unique_ptr<State> new_initial_state() const override {
    return std::make_unique<GoofspielState>(this);
  }
  double min_utility() const override { return -10.0; }

 private:
  GameSpec spec_;
};

}  // namespace

GamePtr make_goofspiel4() { return std::make_shared<GoofspielGame>(); }

}  // namespace zsg

#include "zsg/games/kuhn.hpp"

#include <sstream>

namespace zsg {
namespace {

constexpr Action kPass = 0;
constexpr Action kBet = 1;

// Ordered deals (card0, card1), outcome id = index.
constexpr int kDeals[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};

class KuhnState final : public State {
 public:
  explicit KuhnState(const Game* game) : game_(game) {}

  std::unique_ptr<State> clone() const override { return std::make_unique<KuhnState>(*this); }

  int current_player() const override {
    if (deal_ < 0) return kChancePlayer;
    switch (n_moves_) {
      case 0: return 0;
      case 1: return 1;
      case 2: return (moves_[0] == kPass && moves_[1] == kBet) ? 0 : kTerminalPlayer;
      default: return kTerminalPlayer;
    }
  }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(current_player() == player,
              "legal_actions: player " << player << " is not acting");
    return {kPass, kBet};
  }

  std::vector<ChanceOutcome> chance_outcomes() const override {
    ZSG_CHECK(is_chance(), "chance_outcomes: not a chance node");
    std::vector<ChanceOutcome> out;
    out.reserve(6);
    for (int d = 0; d < 6; ++d) out.push_back({d, 1.0 / 6.0});
    return out;
  }

  void apply_action(Action action) override {
    if (deal_ < 0) {
      ZSG_CHECK(action >= 0 && action < 6, "invalid deal outcome " << action);
      deal_ = action;
    } else {
      int p = current_player();
      ZSG_CHECK(p == 0 || p == 1, "apply_action on a non-decision Kuhn state");
      if (action != kPass && action != kBet) {
        std::ostringstream oss;
        oss << "illegal action " << action << " at infoset " << infoset_key(p);
        throw std::logic_error(oss.str());
      }
      moves_[n_moves_++] = action;
    }
    history_.push_back(action);
  }

  void apply_joint_action(Action, Action) override {
    ZSG_FAIL("Kuhn has no simultaneous nodes");
  }

  std::array<double, 2> returns() const override {
    ZSG_CHECK(is_terminal(), "returns() on a non-terminal state");
    double u0;
    if (n_moves_ == 2 && moves_[0] == kPass && moves_[1] == kPass) {
      u0 = higher_is_p0() ? 1 : -1;
    } else if (n_moves_ == 2 && moves_[0] == kBet && moves_[1] == kPass) {
      u0 = 1;  // p1 folds
    } else if (n_moves_ == 3 && moves_[2] == kPass) {
      u0 = -1;  // p0 folds after pass-bet
    } else {
      u0 = higher_is_p0() ? 2 : -2;  // called bet
    }
    return {u0, -u0};
  }

  std::string infoset_key(Player player) const override {
    ZSG_CHECK(player == 0 || player == 1, "infoset_key: bad player " << player);
    ZSG_CHECK(deal_ >= 0, "infoset_key: cards not dealt yet");
    std::string seq;
    for (int i = 0; i < n_moves_; ++i) seq += (moves_[i] == kPass ? 'p' : 'b');
    std::ostringstream oss;
    oss << "k|p" << player << "|c" << kDeals[deal_][player] << "|b" << seq;
    return oss.str();
  }

  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    out.setZero();
    out(player) = 1.0f;
    if (deal_ >= 0) out(2 + kDeals[deal_][player]) = 1.0f;
    for (int i = 0; i < n_moves_ && i < 2; ++i) out(5 + 2 * i + moves_[i]) = 1.0f;
  }

 private:
  bool higher_is_p0() const { return kDeals[deal_][0] > kDeals[deal_][1]; }

  const Game* game_;
  int deal_ = -1;
  int moves_[3] = {-1, -1, -1};
  int n_moves_ = 0;
};

class KuhnGame final : public Game {
 public:
  KuhnGame() {
    spec_.max_actions = 2;
    spec_.observation_length = 10;  // me(2) + card(3) + two visible moves(4) + flag
    spec_.max_game_length = 4;
    spec_.has_simultaneous_nodes = false;
  }
  const GameSpec& spec() const override { return spec_; }
  std::string name() const override { return "kuhn"; }
  std::unique_ptr<State> new_initial_state() const override {
    return std::make_unique<KuhnState>(this);
  }
  double min_utility() const override { return -2.0; }

 private:
  GameSpec spec_;
};

}  // namespace

GamePtr make_kuhn() { return std::make_shared<KuhnGame>(); }

}  // namespace zsg

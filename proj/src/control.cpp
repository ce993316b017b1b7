#include "zsg/control.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zsg {
namespace {

struct NavPos {
  int row = 0;
  int col = 0;
};

class ControlState final : public State {
 public:
  ControlState(const ControlGame* game, std::unique_ptr<State> ff)
      : game_(game), ff_(std::move(ff)) {
    sync();
  }

  ControlState(const ControlState& o)
      : game_(o.game_), ff_(o.ff_->clone()), navigating_(o.navigating_), timer_(o.timer_) {
    pos_[0] = o.pos_[0];
    pos_[1] = o.pos_[1];
    history_ = o.history_;
  }

  std::unique_ptr<State> clone() const override { return std::make_unique<ControlState>(*this); }

  int current_player() const override { return ff_->current_player(); }

  std::vector<Action> legal_actions(Player player) const override {
    ZSG_CHECK(navigating_ && acts_now(player),
              "legal_actions: player " << player << " is not navigating");
    auto mask = game_->nav_mask(pos_[player].row, pos_[player].col);
    std::vector<Action> out;
    for (Action m = 0; m < kNumMoves; ++m)
      if (mask[m]) out.push_back(m);
    return out;
  }

  std::vector<ChanceOutcome> chance_outcomes() const override { return ff_->chance_outcomes(); }

  void apply_action(Action action) override {
    if (ff_->is_chance()) {
      ff_->apply_action(action);
      history_.push_back(action);
      sync();
      return;
    }
    int p = ff_->current_player();
    ZSG_CHECK(navigating_ && (p == 0 || p == 1), "apply_action: no pending navigation");
    move(p, action);
    history_.push_back(action);
    if (--timer_ == 0) {
      ff_->apply_action(resolved_base_action(p));
      sync();
    }
  }

  void apply_joint_action(Action m0, Action m1) override {
    ZSG_CHECK(navigating_ && ff_->is_simultaneous(), "apply_joint_action: not a joint segment");
    move(0, m0);
    move(1, m1);
    history_.push_back(m0);
    history_.push_back(m1);
    if (--timer_ == 0) {
      ff_->apply_joint_action(resolved_base_action(0), resolved_base_action(1));
      sync();
    }
  }

  std::array<double, 2> returns() const override { return ff_->returns(); }

  std::string infoset_key(Player player) const override {
    ZSG_CHECK(navigating_ && acts_now(player),
              "infoset_key: player " << player << " is not navigating");
    std::ostringstream oss;
    oss << ff_->infoset_key(player) << "|@" << pos_[player].row << "," << pos_[player].col << ","
        << timer_;
    return oss.str();
  }

  void write_obs_core(Player player, Eigen::Ref<Eigen::VectorXf> out) const override {
    Eigen::VectorXf ff_core(out.size() - 3);
    ff_->write_obs_core(player, ff_core);
    if (navigating_ && acts_now(player)) {
      game_->write_nav_obs(ff_core, pos_[player].row, pos_[player].col, timer_, out);
    } else {
      game_->write_nav_obs(ff_core, 0, 0, 0, out);
      out.head(3).setZero();
    }
  }

 private:
  bool acts_now(Player p) const {
    int cur = ff_->current_player();
    return cur == p || cur == kSimultaneous;
  }

  // Starts a navigation segment whenever the wrapped game is at a decision.
  void sync() {
    int cur = ff_->current_player();
    navigating_ = (cur == 0 || cur == 1 || cur == kSimultaneous);
    if (navigating_) {
      pos_[0] = pos_[1] = {game_->start_row(), game_->start_col()};
      timer_ = game_->travel();
    }
  }

  void move(Player p, Action m) {
    auto mask = game_->nav_mask(pos_[p].row, pos_[p].col);
    if (m < 0 || m >= kNumMoves || !mask[m]) {
      std::ostringstream oss;
      oss << "illegal move " << m << " at infoset " << infoset_key(p);
      throw std::logic_error(oss.str());
    }
    switch (m) {
      case kMoveUp: --pos_[p].row; break;
      case kMoveDown: ++pos_[p].row; break;
      case kMoveLeft: --pos_[p].col; break;
      case kMoveRight: ++pos_[p].col; break;
      default: break;
    }
  }

  Action resolved_base_action(Player p) const {
    int k = game_->square_at(pos_[p].row, pos_[p].col);
    if (k >= 0) {
      auto legal = ff_->legal_actions(p);
      if (std::find(legal.begin(), legal.end(), k) != legal.end()) return k;
    }
    return game_->ff_game().forfeit_action();
  }

  const ControlGame* game_;
  std::unique_ptr<State> ff_;
  bool navigating_ = false;
  NavPos pos_[2];
  int timer_ = 0;
};

}  // namespace

std::vector<std::pair<int, int>> layout_action_squares(int grid, int travel, int k) {
  ZSG_CHECK(grid > 0 && grid % 2 == 1, "grid side must be odd, got " << grid);
  int c = (grid - 1) / 2;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < grid; ++r)
    for (int cc = 0; cc < grid; ++cc)
      if (std::abs(r - c) + std::abs(cc - c) == travel) cells.emplace_back(r, cc);
  if (static_cast<int>(cells.size()) < k) {
    std::ostringstream oss;
    oss << "layout_action_squares: only " << cells.size() << " cells at distance " << travel
        << " inside a " << grid << "x" << grid << " grid, need " << k;
    throw std::invalid_argument(oss.str());
  }
  std::sort(cells.begin(), cells.end(), [c](const auto& a, const auto& b) {
    return std::atan2(a.first - c, a.second - c) < std::atan2(b.first - c, b.second - c);
  });
  std::vector<std::pair<int, int>> out;
  out.reserve(k);
  int n = static_cast<int>(cells.size());
  for (int j = 0; j < k; ++j) out.push_back(cells[static_cast<std::size_t>(j) * n / k]);
  return out;
}

ControlGame::ControlGame(std::shared_ptr<const ForfeitGame> ff, int grid, int travel)
    : ff_(std::move(ff)), grid_(grid), travel_(travel), start_((grid - 1) / 2) {
  squares_ = layout_action_squares(grid_, travel_, ff_->base_max_actions());
  square_index_.assign(grid_ * grid_, -1);
  for (int i = 0; i < static_cast<int>(squares_.size()); ++i)
    square_index_[squares_[i].first * grid_ + squares_[i].second] = i;
  spec_ = ff_->spec();
  spec_.max_actions = kNumMoves;
  spec_.observation_length = ff_->spec().observation_length + 3;
  spec_.max_game_length = ff_->spec().max_game_length * travel_;
}

std::string ControlGame::name() const {
  return ff_->name() + "-t" + std::to_string(travel_);
}

std::unique_ptr<State> ControlGame::new_initial_state() const {
  return std::make_unique<ControlState>(this, ff_->new_initial_state());
}

int ControlGame::square_at(int row, int col) const {
  if (row < 0 || row >= grid_ || col < 0 || col >= grid_) return -1;
  return square_index_[row * grid_ + col];
}

std::array<bool, kNumMoves> ControlGame::nav_mask(int row, int col) const {
  return {row > 0, row < grid_ - 1, col > 0, col < grid_ - 1, true};
}

void ControlGame::write_nav_obs(const Eigen::Ref<const Eigen::VectorXf>& ff_core, int row, int col,
                                int t, Eigen::Ref<Eigen::VectorXf> core_out) const {
  core_out(0) = static_cast<float>(row) / static_cast<float>(grid_ - 1);
  core_out(1) = static_cast<float>(col) / static_cast<float>(grid_ - 1);
  core_out(2) = static_cast<float>(t) / static_cast<float>(travel_);
  core_out.tail(ff_core.size()) = ff_core;
}

std::shared_ptr<const ControlGame> control_wrap(std::shared_ptr<const ForfeitGame> ff, int grid,
                                                int travel) {
  return std::make_shared<ControlGame>(std::move(ff), grid, travel);
}

}  // namespace zsg

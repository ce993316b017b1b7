#pragma once

#include <utility>
#include <vector>

#include "zsg/forfeit.hpp"

namespace zsg {

// Navigation moves.
inline constexpr Action kMoveUp = 0;
inline constexpr Action kMoveDown = 1;
inline constexpr Action kMoveLeft = 2;
inline constexpr Action kMoveRight = 3;
inline constexpr Action kMoveStay = 4;
inline constexpr int kNumMoves = 5;

// Deterministic placement of K action squares on a G x G grid: enumerate the
// in-grid cells at Manhattan distance exactly D from the center, sort them by
// angle around the center, and take K indices evenly spaced through the sorted
// list starting at index 0. Throws if fewer than K candidate cells exist.
std::vector<std::pair<int, int>> layout_action_squares(int grid, int travel, int k);

// Wraps a forfeit game: every decision becomes a travel-step navigation
// segment on an empty grid. The acting player starts at the center with the
// timer equal to the travel distance; each move decrements the timer, moves
// that would leave the grid are illegal, and when the timer reaches zero the
// final cell selects the base action (action square k -> base action k if
// legal there, anything else -> forfeit). At simultaneous base nodes both
// players navigate in lockstep, observing only their own position.
class ControlGame final : public Game {
 public:
  ControlGame(std::shared_ptr<const ForfeitGame> ff, int grid, int travel);

  const GameSpec& spec() const override { return spec_; }
  std::string name() const override;
  std::unique_ptr<State> new_initial_state() const override;
  double min_utility() const override { return ff_->min_utility(); }

  const ForfeitGame& ff_game() const { return *ff_; }
  std::shared_ptr<const ForfeitGame> ff_game_ptr() const { return ff_; }
  int grid() const { return grid_; }
  int travel() const { return travel_; }
  int start_row() const { return start_; }
  int start_col() const { return start_; }
  const std::vector<std::pair<int, int>>& squares() const { return squares_; }

  // Square index at a cell, or -1.
  int square_at(int row, int col) const;

  // Legality of the five moves from a cell.
  std::array<bool, kNumMoves> nav_mask(int row, int col) const;

  // Assembles the control observation core from a forfeit-game observation
  // core: [row, col, t (normalized)] then the base features. The environment,
  // the tabular reduction, and its Monte Carlo check all build rows here.
  void write_nav_obs(const Eigen::Ref<const Eigen::VectorXf>& ff_core, int row, int col, int t,
                     Eigen::Ref<Eigen::VectorXf> core_out) const;

 private:
  std::shared_ptr<const ForfeitGame> ff_;
  GameSpec spec_;
  int grid_;
  int travel_;
  int start_;
  std::vector<std::pair<int, int>> squares_;
  std::vector<int> square_index_;  // grid*grid, -1 where no square
};

std::shared_ptr<const ControlGame> control_wrap(std::shared_ptr<const ForfeitGame> ff, int grid,
                                                int travel);

}  // namespace zsg

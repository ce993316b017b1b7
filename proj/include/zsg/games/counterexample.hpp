#pragma once

#include "zsg/game.hpp"

namespace zsg {

// Two-move sequential game: player 0 picks action 0 or 1, then player 1 picks
// action 0 or 1 without observing player 0's move (both of player 1's nodes
// share one information state). Player 0's payoff matrix is
//   [[-1,  1],
//    [ 1, -10]].
// Its unique Nash equilibrium mixes both actions with probability 11/13 on
// action 0 for both players, for a game value of -9/13 to player 0.
GamePtr make_counterexample();

}  // namespace zsg

#pragma once

#include "zsg/game.hpp"

namespace zsg {

// Kuhn poker, 3 cards (0 < 1 < 2), one bet level. Actions: 0 = pass, 1 = bet.
// The root is a single chance node over the 6 ordered deals; outcome id d maps
// to the d-th pair of the lexicographic enumeration of distinct (card0, card1).
// Fold pays 1 to the folder's opponent, a called showdown pays 2, pass-pass
// shows down for 1.
GamePtr make_kuhn();

}  // namespace zsg

#pragma once

#include "zsg/game.hpp"

namespace zsg {

// 4-card Goofspiel. Chance reveals one prize per round, uniformly over those
// not yet seen (equivalent to a uniform random prize order). Both players then
// bid one held card simultaneously; the strictly higher bid collects the
// prize's point value, tied bids discard it, and both bids are revealed before
// the next round. Payoff is the point differential. Actions 0..3 bid card
// value a+1; chance outcome z reveals prize value z+1.
GamePtr make_goofspiel4();

}  // namespace zsg

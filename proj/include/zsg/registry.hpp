#pragma once

#include <optional>
#include <string>

#include "zsg/control.hpp"
#include "zsg/forfeit.hpp"
#include "zsg/game.hpp"

namespace zsg {

// Game ids: kuhn, goofspiel4, ce. Variants: base, ff, travel10, travel20.
// Travel variants use an 11x11 (kuhn/ce) or 13x13 (goofspiel4) grid at travel
// distance 10, and 21x21 / 25x25 at travel distance 20.
struct VariantConfig {
  std::string game_id;
  std::string variant_id;
  bool is_control = false;
  int grid = 0;
  int travel = 0;
};

GamePtr make_base_game(const std::string& game_id);
VariantConfig variant_config(const std::string& game_id, const std::string& variant_id);

// The playable game for a (game, variant) pair.
GamePtr make_variant(const std::string& game_id, const std::string& variant_id);

// The forfeit game underlying a variant ("ff" returns the game itself;
// control variants return the wrapped forfeit game; "base" has none).
std::shared_ptr<const ForfeitGame> variant_ff_game(const std::string& game_id,
                                                   const std::string& variant_id);

// Non-null only for control variants.
std::shared_ptr<const ControlGame> variant_control_game(const GamePtr& game);

bool is_known_game(const std::string& game_id);
bool is_known_variant(const std::string& variant_id);

}  // namespace zsg

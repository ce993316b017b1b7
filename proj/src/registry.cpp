#include "zsg/registry.hpp"

#include <stdexcept>

#include "zsg/games/counterexample.hpp"
#include "zsg/games/goofspiel.hpp"
#include "zsg/games/kuhn.hpp"

namespace zsg {

bool is_known_game(const std::string& game_id) {
  return game_id == "kuhn" || game_id == "goofspiel4" || game_id == "ce";
}

bool is_known_variant(const std::string& variant_id) {
  return variant_id == "base" || variant_id == "ff" || variant_id == "travel10" ||
         variant_id == "travel20";
}

GamePtr make_base_game(const std::string& game_id) {
  if (game_id == "kuhn") return make_kuhn();
  if (game_id == "goofspiel4") return make_goofspiel4();
  if (game_id == "ce") return make_counterexample();
  throw std::invalid_argument("unknown game id: " + game_id);
}

VariantConfig variant_config(const std::string& game_id, const std::string& variant_id) {
  if (!is_known_game(game_id)) throw std::invalid_argument("unknown game id: " + game_id);
  VariantConfig cfg;
  cfg.game_id = game_id;
  cfg.variant_id = variant_id;
  if (variant_id == "base" || variant_id == "ff") return cfg;
  bool wide = (game_id == "goofspiel4");
  if (variant_id == "travel10") {
    cfg.is_control = true;
    cfg.travel = 10;
    cfg.grid = wide ? 13 : 11;
  } else if (variant_id == "travel20") {
    cfg.is_control = true;
    cfg.travel = 20;
    cfg.grid = wide ? 25 : 21;
  } else {
    throw std::invalid_argument("unknown variant id: " + variant_id);
  }
  return cfg;
}

GamePtr make_variant(const std::string& game_id, const std::string& variant_id) {
  auto cfg = variant_config(game_id, variant_id);
  auto base = make_base_game(game_id);
  if (variant_id == "base") return base;
  auto ff = forfeit_wrap(base);
  if (variant_id == "ff") return ff;
  return control_wrap(ff, cfg.grid, cfg.travel);
}

std::shared_ptr<const ForfeitGame> variant_ff_game(const std::string& game_id,
                                                   const std::string& variant_id) {
  auto game = make_variant(game_id, variant_id);
  if (auto ff = std::dynamic_pointer_cast<const ForfeitGame>(game)) return ff;
  if (auto ctrl = std::dynamic_pointer_cast<const ControlGame>(game))
    return ctrl->ff_game_ptr();
  throw std::invalid_argument("variant " + variant_id + " has no forfeit game");
}

std::shared_ptr<const ControlGame> variant_control_game(const GamePtr& game) {
  return std::dynamic_pointer_cast<const ControlGame>(game);
}

}  // namespace zsg

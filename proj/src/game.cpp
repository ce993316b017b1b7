#include "zsg/game.hpp"

#include <algorithm>
#include <sstream>

namespace zsg {

namespace {

bool is_legal_at(const State& s, int player, Action a) {
  auto legal = s.legal_actions(player);
  return std::find(legal.begin(), legal.end(), a) != legal.end();
}

}  // namespace

std::unique_ptr<State> Game::restore_from_history(std::span<const Action> history) const {
  auto state = new_initial_state();
  std::size_t i = 0;
  while (i < history.size()) {
    if (state->is_terminal()) {
      std::ostringstream oss;
      oss << "restore_from_history: state already terminal at history index " << i;
      throw std::invalid_argument(oss.str());
    }
    if (state->is_chance()) {
      auto outcomes = state->chance_outcomes();
      bool ok = std::any_of(outcomes.begin(), outcomes.end(),
                            [&](const ChanceOutcome& o) { return o.action == history[i]; });
      if (!ok) {
        std::ostringstream oss;
        oss << "restore_from_history: invalid chance outcome " << history[i]
            << " at history index " << i;
        throw std::invalid_argument(oss.str());
      }
      state->apply_action(history[i]);
      ++i;
    } else if (state->is_simultaneous()) {
      if (i + 1 >= history.size()) {
        std::ostringstream oss;
        oss << "restore_from_history: truncated joint action at history index " << i;
        throw std::invalid_argument(oss.str());
      }
      if (!is_legal_at(*state, 0, history[i])) {
        std::ostringstream oss;
        oss << "restore_from_history: illegal action " << history[i] << " for player 0 at index "
            << i;
        throw std::invalid_argument(oss.str());
      }
      if (!is_legal_at(*state, 1, history[i + 1])) {
        std::ostringstream oss;
        oss << "restore_from_history: illegal action " << history[i + 1]
            << " for player 1 at index " << i + 1;
        throw std::invalid_argument(oss.str());
      }
      state->apply_joint_action(history[i], history[i + 1]);
      i += 2;
    } else {
      int p = state->current_player();
      if (!is_legal_at(*state, p, history[i])) {
        std::ostringstream oss;
        oss << "restore_from_history: illegal action " << history[i] << " for player " << p
            << " at index " << i << " (infoset " << state->infoset_key(p) << ")";
        throw std::invalid_argument(oss.str());
      }
      state->apply_action(history[i]);
      ++i;
    }
  }
  return state;
}

}  // namespace zsg

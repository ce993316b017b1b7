#include <doctest.h>

#include <cmath>
#include <set>

#include "test_util.hpp"
#include "zsg/control.hpp"
#include "zsg/forfeit.hpp"
#include "zsg/registry.hpp"
#include "zsg/rng.hpp"

using namespace zsg;

namespace {

double enumerate_min_utility(const Game& game) {
  double u_min = 1e100;
  test::for_all_states(game, [&](const State& s) {
    if (!s.is_terminal()) return;
    auto u = s.returns();
    u_min = std::min({u_min, u[0], u[1]});
  });
  return u_min;
}

// Walks a shortest path from the control start cell to a target, row moves
// first. Returns the move sequence (exactly |dr|+|dc| moves).
std::vector<Action> shortest_path_moves(const ControlGame& g, std::pair<int, int> target) {
  std::vector<Action> moves;
  int r = g.start_row(), c = g.start_col();
  while (r != target.first) moves.push_back(r > target.first ? kMoveUp : kMoveDown), r += (r > target.first ? -1 : 1);
  while (c != target.second) moves.push_back(c > target.second ? kMoveLeft : kMoveRight), c += (c > target.second ? -1 : 1);
  return moves;
}

}  // namespace

TEST_CASE("forfeit payoff is the utility lower bound minus one") {
  for (auto [id, expected] : std::vector<std::pair<std::string, double>>{
           {"kuhn", -3.0}, {"ce", -11.0}, {"goofspiel4", -11.0}}) {
    auto base = make_base_game(id);
    auto ff = forfeit_wrap(base);
    CHECK(ff->forfeit_payoff() == expected);
    // The declared bound never exceeds the attained minimum; for kuhn and ce
    // it is tight.
    CHECK(base->min_utility() <= enumerate_min_utility(*base));
    if (id != "goofspiel4") CHECK(base->min_utility() == enumerate_min_utility(*base));
  }
}

TEST_CASE("forfeit adds one action and terminates immediately") {
  auto ff = variant_ff_game("kuhn", "ff");
  auto s = ff->new_initial_state();
  s->apply_action(0);  // deal
  auto legal = s->legal_actions(0);
  CHECK(legal.size() == 3);  // pass, bet, forfeit
  CHECK(legal.back() == ff->forfeit_action());
  s->apply_action(ff->forfeit_action());
  REQUIRE(s->is_terminal());
  CHECK(s->returns() == std::array<double, 2>{-3.0, 3.0});
}

TEST_CASE("goofspiel-ff: forfeit at a joint node; double forfeit blames player 0") {
  auto ff = variant_ff_game("goofspiel4", "ff");
  auto s = ff->new_initial_state();
  s->apply_action(0);
  CHECK(s->legal_actions(0).size() == 5);  // 4 bids + forfeit

  auto only_p1 = s->clone();
  only_p1->apply_joint_action(0, ff->forfeit_action());
  REQUIRE(only_p1->is_terminal());
  CHECK(only_p1->returns() == std::array<double, 2>{11.0, -11.0});

  auto both = s->clone();
  both->apply_joint_action(ff->forfeit_action(), ff->forfeit_action());
  REQUIRE(both->is_terminal());
  CHECK(both->returns() == std::array<double, 2>{-11.0, 11.0});

  // Last round still offers an explicit decision: one card plus forfeit.
  auto late = ff->new_initial_state();
  late->apply_action(0);
  late->apply_joint_action(0, 1);
  late->apply_action(1);
  late->apply_joint_action(1, 0);
  late->apply_action(2);
  late->apply_joint_action(2, 3);
  late->apply_action(3);
  CHECK(late->legal_actions(0).size() == 2);
}

TEST_CASE("strict dominance certificate: non-forfeit outcomes beat forfeiting") {
  for (const auto& id : {"kuhn", "ce", "goofspiel4"}) {
    auto ff = variant_ff_game(id, "ff");
    double fp = ff->forfeit_payoff();
    test::for_all_states(*ff, [&](const State& s) {
      if (!s.is_terminal()) return;
      auto u = s.returns();
      for (int p = 0; p < 2; ++p) {
        // Any terminal a player reaches without forfeiting pays them at least
        // the base minimum, strictly above the forfeit payoff.
        if (u[p] != fp) CHECK(u[p] >= fp + 1.0);
      }
    });
  }
}

TEST_CASE("layout_action_squares: 11x11 travel 10 selects opposite corners") {
  auto squares = layout_action_squares(11, 10, 2);
  // Oracle: enumerate in-grid cells at Manhattan distance 10 from (5,5).
  std::set<std::pair<int, int>> at10;
  for (int r = 0; r < 11; ++r)
    for (int c = 0; c < 11; ++c)
      if (std::abs(r - 5) + std::abs(c - 5) == 10) at10.insert({r, c});
  CHECK(at10 == std::set<std::pair<int, int>>{{0, 0}, {0, 10}, {10, 0}, {10, 10}});
  REQUIRE(squares.size() == 2);
  CHECK(at10.count(squares[0]) == 1);
  CHECK(at10.count(squares[1]) == 1);
  // Opposite corners of the diamond.
  CHECK(squares[0].first + squares[1].first == 10);
  CHECK(squares[0].second + squares[1].second == 10);
  CHECK(squares == std::vector<std::pair<int, int>>{{0, 0}, {10, 10}});
}

TEST_CASE("layout_action_squares: 13x13 travel 10 gives 4 distinct distance-10 cells") {
  auto squares = layout_action_squares(13, 10, 4);
  REQUIRE(squares.size() == 4);
  std::set<std::pair<int, int>> uniq(squares.begin(), squares.end());
  CHECK(uniq.size() == 4);
  for (auto [r, c] : squares) {
    CHECK(std::abs(r - 6) + std::abs(c - 6) == 10);
    CHECK(r >= 0);
    CHECK(r < 13);
    CHECK(c >= 0);
    CHECK(c < 13);
  }
}

TEST_CASE("layout_action_squares: 21x21 travel 20, and infeasible layouts throw") {
  auto squares = layout_action_squares(21, 20, 2);
  for (auto [r, c] : squares) CHECK(std::abs(r - 10) + std::abs(c - 10) == 20);
  CHECK_THROWS_AS(layout_action_squares(11, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(layout_action_squares(5, 9, 1), std::invalid_argument);
}

TEST_CASE("variant registry matches the published grid sizes") {
  auto t10k = variant_config("kuhn", "travel10");
  CHECK(t10k.grid == 11);
  CHECK(t10k.travel == 10);
  auto t10c = variant_config("ce", "travel10");
  CHECK(t10c.grid == 11);
  auto t10g = variant_config("goofspiel4", "travel10");
  CHECK(t10g.grid == 13);
  auto t20k = variant_config("kuhn", "travel20");
  CHECK(t20k.grid == 21);
  CHECK(t20k.travel == 20);
  auto t20g = variant_config("goofspiel4", "travel20");
  CHECK(t20g.grid == 25);
  auto ctrl = variant_control_game(make_variant("goofspiel4", "travel10"));
  REQUIRE(ctrl);
  CHECK(ctrl->squares().size() == 4);
}

TEST_CASE("control: a shortest path applies the intended base action") {
  auto game = make_variant("kuhn", "travel10");
  auto ctrl = variant_control_game(game);
  REQUIRE(ctrl);
  CHECK(game->spec().max_actions == kNumMoves);
  CHECK(game->spec().observation_length == variant_ff_game("kuhn", "ff")->spec().observation_length + 3);

  auto s = game->new_initial_state();
  REQUIRE(s->is_chance());
  s->apply_action(0);  // deal
  REQUIRE(s->current_player() == 0);
  CHECK(s->legal_actions(0).size() == 5);  // center: all moves legal

  // Navigate player 0 to square 0 => base action 0 (pass).
  for (Action m : shortest_path_moves(*ctrl, ctrl->squares()[0])) s->apply_action(m);
  // Next decision belongs to player 1, whose base infoset shows the pass.
  REQUIRE(s->current_player() == 1);
  CHECK(s->infoset_key(1).find("|bp|@") != std::string::npos);
}

TEST_CASE("control: one wasted move forces a forfeit") {
  auto game = make_variant("kuhn", "travel10");
  auto s = game->new_initial_state();
  s->apply_action(0);
  for (int i = 0; i < 10; ++i) s->apply_action(kMoveStay);
  REQUIRE(s->is_terminal());
  CHECK(s->returns() == std::array<double, 2>{-3.0, 3.0});
}

TEST_CASE("control observation: position, timer, base features, flag") {
  auto game = make_variant("kuhn", "travel10");
  auto ctrl = variant_control_game(game);
  auto s = game->new_initial_state();
  s->apply_action(0);  // deal (0,1): player 0 holds card 0
  int n = game->spec().observation_length;
  auto obs = s->observation(0, 1, n);
  CHECK(obs(0) == 0.5f);  // row 5 of 10
  CHECK(obs(1) == 0.5f);
  CHECK(obs(2) == 1.0f);  // full timer
  CHECK(obs(3) == 1.0f);  // base: me == player 0
  CHECK(obs(5) == 1.0f);  // base: card 0
  CHECK(obs(n - 1) == 1.0f);  // flag

  s->apply_action(kMoveUp);
  obs = s->observation(0, 0, n);
  CHECK(obs(0) == 0.4f);
  CHECK(obs(2) == 0.9f);
  CHECK(obs(n - 1) == 0.0f);

  // Moves that would exit the grid are masked.
  auto corner = game->new_initial_state();
  corner->apply_action(0);
  for (int i = 0; i < 5; ++i) corner->apply_action(kMoveUp);
  auto legal = corner->legal_actions(0);
  CHECK(std::find(legal.begin(), legal.end(), kMoveUp) == legal.end());
  CHECK(legal.size() == 4);
}

TEST_CASE("control travel tightness: squares sit exactly travel away") {
  for (const auto& [gid, vid] : std::vector<std::pair<std::string, std::string>>{
           {"kuhn", "travel10"}, {"ce", "travel10"}, {"goofspiel4", "travel10"},
           {"kuhn", "travel20"}, {"goofspiel4", "travel20"}}) {
    auto ctrl = variant_control_game(make_variant(gid, vid));
    REQUIRE(ctrl);
    for (auto [r, c] : ctrl->squares()) {
      CHECK(std::abs(r - ctrl->start_row()) + std::abs(c - ctrl->start_col()) == ctrl->travel());
    }
  }
}

TEST_CASE("control strategic equivalence on the counterexample") {
  auto game = make_variant("ce", "travel10");
  auto ctrl = variant_control_game(game);
  auto ff = variant_ff_game("ce", "travel10");
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto s = game->new_initial_state();
      for (Action m : shortest_path_moves(*ctrl, ctrl->squares()[i])) s->apply_action(m);
      for (Action m : shortest_path_moves(*ctrl, ctrl->squares()[j])) s->apply_action(m);
      REQUIRE(s->is_terminal());
      auto f = ff->restore_from_history(std::vector<Action>{i, j});
      CHECK(s->returns() == f->returns());
    }
  }
  // Player 1's information state never reveals player 0's choice mid-segment.
  auto sa = game->new_initial_state();
  for (Action m : shortest_path_moves(*ctrl, ctrl->squares()[0])) sa->apply_action(m);
  auto sb = game->new_initial_state();
  for (Action m : shortest_path_moves(*ctrl, ctrl->squares()[1])) sb->apply_action(m);
  CHECK(sa->infoset_key(1) == sb->infoset_key(1));
  int n = game->spec().observation_length;
  CHECK(sa->observation(1, 0, n) == sb->observation(1, 0, n));
}

TEST_CASE("control replay determinism over full episodes") {
  auto game = make_variant("goofspiel4", "travel10");
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = game->new_initial_state();
    while (!s->is_terminal()) {
      if (s->is_chance()) {
        auto outs = s->chance_outcomes();
        s->apply_action(outs[rng.uniform_int((int)outs.size())].action);
      } else if (s->is_simultaneous()) {
        auto l0 = s->legal_actions(0), l1 = s->legal_actions(1);
        s->apply_joint_action(l0[rng.uniform_int((int)l0.size())],
                              l1[rng.uniform_int((int)l1.size())]);
      } else {
        auto l = s->legal_actions();
        s->apply_action(l[rng.uniform_int((int)l.size())]);
      }
    }
    auto r = game->restore_from_history(s->history());
    REQUIRE(r->is_terminal());
    CHECK(r->returns() == s->returns());
  }
}

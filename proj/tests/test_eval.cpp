#include <doctest.h>

#include <cmath>
#include <functional>

#include "zsg/augmented.hpp"
#include "zsg/cfr.hpp"
#include "zsg/games/counterexample.hpp"
#include "zsg/props.hpp"
#include "zsg/reduction.hpp"
#include "zsg/registry.hpp"
#include "zsg/rng.hpp"
#include "zsg/tabular.hpp"

using namespace zsg;

namespace {

TabularPolicy ce_ne_policy() {
  auto ne = counterexample_ne();
  TabularPolicy p;
  p.set("ce|p0", Eigen::Vector2d(ne.p(), 1 - ne.p()));
  p.set("ce|p1", Eigen::Vector2d(ne.q(), 1 - ne.q()));
  return p;
}

TabularPolicy random_policy(const GameTree& tree, Rng& rng) {
  TabularPolicy p;
  for (int pl = 0; pl < 2; ++pl) {
    for (const auto& info : tree.infosets(pl)) {
      Eigen::VectorXd v(info.legal.size());
      for (int i = 0; i < v.size(); ++i) v(i) = rng.uniform() + 1e-3;
      p.set(info.key, v / v.sum());
    }
  }
  return p;
}

}  // namespace

TEST_CASE("counterexample closed form") {
  auto ne = counterexample_ne();
  CHECK(ne.p_num == 11);
  CHECK(ne.p_den == 13);
  CHECK(ne.value_num == -9);
  CHECK(ne.value_den == 13);
  CHECK(ne.p() == doctest::Approx(11.0 / 13.0).epsilon(1e-15));

  // Indifference: both columns give the same payoff against p = 11/13.
  double p = ne.p();
  double col_a1 = p * -1 + (1 - p) * 1;
  double col_a2 = p * 1 + (1 - p) * -10;
  CHECK(col_a1 == doctest::Approx(ne.value()).epsilon(1e-12));
  CHECK(col_a2 == doctest::Approx(ne.value()).epsilon(1e-12));
}

TEST_CASE("tree enumeration: kuhn-ff infosets and depth uniformity") {
  auto tree = GameTree::build(*make_variant("kuhn", "ff"));
  CHECK(tree.num_infosets(0) + tree.num_infosets(1) == 12);
  CHECK(tree.uniform_infoset_depth());
  for (int p = 0; p < 2; ++p)
    for (const auto& info : tree.infosets(p)) CHECK(info.legal.size() == 3);

  auto goof = GameTree::build(*make_variant("goofspiel4", "ff"));
  CHECK(goof.uniform_infoset_depth());
}

TEST_CASE("best response on the counterexample") {
  auto tree = GameTree::build(*make_counterexample());
  auto uniform = uniform_policy(tree);

  auto br1 = best_response(tree, uniform, 1);
  CHECK(br1.value == doctest::Approx(4.5).epsilon(1e-12));  // player 0 gets -9/2
  CHECK(br1.policy.at("ce|p1")(1) == 1.0);                  // pure second action

  auto ne = ce_ne_policy();
  auto v = counterexample_ne().value();
  CHECK(best_response(tree, ne, 0).value == doctest::Approx(v).epsilon(1e-12));
  CHECK(best_response(tree, ne, 1).value == doctest::Approx(-v).epsilon(1e-12));
}

TEST_CASE("exploitability: NE, uniform, non-negativity") {
  auto tree = GameTree::build(*make_counterexample());
  auto ne_report = exploitability(tree, ce_ne_policy());
  CHECK(ne_report.exploitability < 1e-9);
  CHECK(ne_report.exploitability > -1e-9);

  auto uni = exploitability(tree, uniform_policy(tree));
  CHECK(uni.nash_conv == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(uni.exploitability == doctest::Approx(2.25).epsilon(1e-12));

  Rng rng(3);
  auto kuhn_tree = GameTree::build(*make_variant("kuhn", "ff"));
  for (int i = 0; i < 20; ++i) {
    CHECK(exploitability(tree, random_policy(tree, rng)).exploitability >= -1e-9);
    CHECK(exploitability(kuhn_tree, random_policy(kuhn_tree, rng)).exploitability >= -1e-9);
  }
}

TEST_CASE("best response first-order optimality under policy perturbations") {
  Rng rng(11);
  for (const char* id : {"ce", "kuhn"}) {
    auto tree = GameTree::build(*make_variant(id, "ff"));
    auto opp = random_policy(tree, rng);
    for (int responder = 0; responder < 2; ++responder) {
      auto br = best_response(tree, opp, responder);
      double base = responder == 0 ? expected_value(tree, br.policy, opp)
                                   : -expected_value(tree, opp, br.policy);
      CHECK(base == doctest::Approx(br.value).epsilon(1e-12));
      for (const auto& info : tree.infosets(responder)) {
        const auto& probs = br.policy.at(info.key);
        int chosen = 0;
        probs.maxCoeff(&chosen);
        for (int alt = 0; alt < probs.size(); ++alt) {
          if (alt == chosen) continue;
          TabularPolicy perturbed = br.policy;
          Eigen::VectorXd v = probs;
          v(chosen) -= 0.01;
          v(alt) += 0.01;
          perturbed.set(info.key, v);
          double shifted = responder == 0 ? expected_value(tree, perturbed, opp)
                                          : -expected_value(tree, opp, perturbed);
          CHECK(shifted <= base + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("cfr: zero iterations gives the uniform strategy") {
  auto tree = GameTree::build(*make_variant("ce", "ff"));
  auto policy = cfr_solve(tree, 0);
  for (int p = 0; p < 2; ++p)
    for (const auto& info : tree.infosets(p))
      CHECK(policy.at(info.key)(0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("cfr solves ce-ff to the closed form (100k iterations)") {
  auto tree = GameTree::build(*make_variant("ce", "ff"));
  auto policy = cfr_solve(tree, 100000);
  validate_policy(tree, policy);

  double p_target = counterexample_ne().p();
  for (const char* key : {"ce|p0", "ce|p1"}) {
    const auto& v = policy.at(key);
    CHECK(std::abs(v(0) - p_target) < 0.01);
    CHECK(std::abs(v(1) - (1 - p_target)) < 0.01);
    CHECK(v(2) < 1e-3);  // forfeit never survives
  }
  double value = expected_value(tree, policy, policy);
  CHECK(std::abs(value - counterexample_ne().value()) < 1e-3);
  CHECK(exploitability(tree, policy).exploitability < 1e-3);
}

TEST_CASE("cfr solves kuhn-ff: root value -1/18, forfeit dies") {
  auto tree = GameTree::build(*make_variant("kuhn", "ff"));
  auto policy = cfr_solve(tree, 100000);
  double value = expected_value(tree, policy, policy);
  CHECK(std::abs(value - (-1.0 / 18.0)) < 1e-3);
  auto report = exploitability(tree, policy);
  CHECK(report.nash_conv < 1e-3);
  for (int p = 0; p < 2; ++p)
    for (const auto& info : tree.infosets(p))
      CHECK(policy.at(info.key)(info.legal.size() - 1) < 1e-3);
}

TEST_CASE("cfr exploitability trend is non-increasing over smoothed windows") {
  for (const char* id : {"ce", "kuhn", "goofspiel4"}) {
    auto tree = GameTree::build(*make_variant(id, "ff"));
    CfrSolver solver(tree);
    std::vector<double> expl;
    for (int w = 0; w < 8; ++w) {
      solver.run(1000);
      expl.push_back(exploitability(tree, solver.average_policy()).exploitability);
    }
    for (int i = 2; i + 1 < static_cast<int>(expl.size()); i += 2) {
      double prev = (expl[i - 2] + expl[i - 1]) / 2;
      double cur = (expl[i] + expl[i + 1]) / 2;
      CHECK(cur <= prev + 1e-9);
    }
  }
}

TEST_CASE("augmented game with beta=0 degenerates to the base game") {
  auto ce = make_counterexample();
  auto aug = build_augmented_game(ce, counterexample_visit_masses(), 0.0, false);
  auto aug_tree = GameTree::build(*aug);
  auto base_tree = GameTree::build(*ce);
  CHECK(aug_tree.nodes()[0].kind == GameTree::Kind::chance);
  CHECK(aug_tree.nodes()[0].num_children == 1);
  auto uni = uniform_policy(base_tree);
  CHECK(expected_value(aug_tree, uni, uni) ==
        doctest::Approx(expected_value(base_tree, uni, uni)).epsilon(1e-12));
  CHECK(exploitability(aug_tree, uni).exploitability ==
        doctest::Approx(exploitability(base_tree, uni).exploitability).epsilon(1e-12));
}

TEST_CASE("flagless beta=1 augmentation: player 1 faces action 0 with prob 35/52") {
  auto ce = make_counterexample();
  auto aug = build_augmented_game(ce, counterexample_visit_masses(), 1.0, false);
  auto tree = GameTree::build(*aug);
  // With player 1 pure on action 0, u0 = P(face a0)*(-1) + (1-P)*(+1).
  auto ne = ce_ne_policy();
  TabularPolicy pure = ne;
  pure.set("ce|p1", Eigen::Vector2d(1.0, 0.0));
  double u0 = expected_value(tree, ne, pure);
  double faced = (1.0 - u0) / 2.0;
  CHECK(faced == doctest::Approx(35.0 / 52.0).epsilon(1e-12));
}

TEST_CASE("flag conditioning splits every infoset by episode source") {
  auto ce = make_counterexample();
  auto masses = counterexample_visit_masses();
  auto flagless = GameTree::build(*build_augmented_game(ce, masses, 0.5, false));
  auto flagged = GameTree::build(*build_augmented_game(ce, masses, 0.5, true));
  CHECK(flagless.num_infosets(0) == 1);
  CHECK(flagless.num_infosets(1) == 1);
  CHECK(flagged.num_infosets(0) == 2);
  CHECK(flagged.num_infosets(1) == 2);
  CHECK_FALSE(flagged.uniform_infoset_depth());

  TabularPolicy p;
  p.set("ce|p0|f0", Eigen::Vector2d(1, 0));
  p.set("ce|p1|f0", Eigen::Vector2d(0, 1));
  p.set("ce|p0|f1", Eigen::Vector2d(0.5, 0.5));
  auto f0 = restrict_to_flag(p, 0);
  CHECK(f0.at("ce|p0")(0) == 1.0);
  CHECK(f0.at("ce|p1")(1) == 1.0);
  CHECK_FALSE(f0.contains("ce|p0|f1"));
  auto f1 = restrict_to_flag(p, 1);
  CHECK(f1.at("ce|p0")(0) == 0.5);
}

TEST_CASE("augmented game rejects a bad mass distribution") {
  auto ce = make_counterexample();
  CHECK_THROWS_AS(build_augmented_game(ce, {{{}, 0.5}, {{0}, 0.1}}, 1.0, false),
                  std::invalid_argument);
}

TEST_CASE("proposition 1 verifier") {
  auto report = verify_prop1();
  CHECK(report.pass());
  REQUIRE(report.checks.size() == 3);
  // Deviation gain has closed form 135/52 - 9/13 = 99/52.
  CHECK(report.checks[0].value == doctest::Approx(99.0 / 52.0).epsilon(1e-9));
  CHECK(report.checks[1].value < 1e-3);
  CHECK(report.checks[2].value > 0.1);
}

TEST_CASE("proposition 2 verifier") {
  auto report = verify_prop2();
  CHECK(report.pass());
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks[0].value < 1e-3);
  CHECK(report.checks[1].value < 1e-3);
  CHECK(report.checks[2].value > 0.0);  // informational: f=1 policy is biased
}

TEST_CASE("reduction: scripted navigator produces a pure non-forfeit strategy") {
  auto game = variant_control_game(make_variant("kuhn", "travel10"));
  REQUIRE(game);
  auto ff_tree = GameTree::build(game->ff_game());
  auto policy = reduce_control_policy(*game, ff_tree, scripted_navigator_policy(*game), 0);
  for (int p = 0; p < 2; ++p) {
    for (const auto& info : ff_tree.infosets(p)) {
      const auto& sigma = policy.at(info.key);
      CHECK(sigma(0) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(sigma(sigma.size() - 1) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("reduction: the always-stay policy forfeits everywhere") {
  auto game = variant_control_game(make_variant("ce", "travel10"));
  REQUIRE(game);
  auto ff_tree = GameTree::build(game->ff_game());
  ControlPolicyFn stay = [](const NavQueryBatch& batch) {
    Eigen::MatrixXf probs = Eigen::MatrixXf::Zero(kNumMoves, batch.cells.size());
    probs.row(kMoveStay).setOnes();
    return probs;
  };
  auto policy = reduce_control_policy(*game, ff_tree, stay, 0);
  for (int p = 0; p < 2; ++p)
    for (const auto& info : ff_tree.infosets(p))
      CHECK(policy.at(info.key)(info.legal.size() - 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reduction equals exhaustive path enumeration for the uniform mover") {
  auto game = variant_control_game(make_variant("kuhn", "travel10"));
  REQUIRE(game);
  auto ff_tree = GameTree::build(game->ff_game());
  const auto& info = ff_tree.infosets(0).front();
  auto red = reduce_infoset(*game, info, uniform_move_policy(), 0, /*keep_layers=*/true);

  // Oracle: enumerate every move path, multiplying the same cached per-cell
  // distributions the dynamic program consumed.
  int G = game->grid(), D = game->travel();
  std::vector<double> final_mass(G * G, 0.0);
  std::function<void(int, int, int, double)> enumerate = [&](int r, int c, int step, double prob) {
    if (step == D) {
      final_mass[r * G + c] += prob;
      return;
    }
    const auto& dist = red.layers[step].at(r * G + c);
    constexpr int dr[] = {-1, 1, 0, 0, 0};
    constexpr int dc[] = {0, 0, -1, 1, 0};
    for (int mv = 0; mv < kNumMoves; ++mv)
      if (dist[mv] > 0) enumerate(r + dr[mv], c + dc[mv], step + 1, prob * dist[mv]);
  };
  enumerate(game->start_row(), game->start_col(), 0, 1.0);

  double sigma_pass = final_mass[game->squares()[0].first * G + game->squares()[0].second];
  double sigma_bet = final_mass[game->squares()[1].first * G + game->squares()[1].second];
  CHECK(red.sigma(0) == doctest::Approx(sigma_pass).epsilon(1e-12));
  CHECK(red.sigma(1) == doctest::Approx(sigma_bet).epsilon(1e-12));
  CHECK(red.sigma(2) == doctest::Approx(1.0 - sigma_pass - sigma_bet).epsilon(1e-12));
}

TEST_CASE("reduction matches Monte Carlo frequencies for the uniform mover") {
  auto game = variant_control_game(make_variant("kuhn", "travel10"));
  REQUIRE(game);
  auto ff_tree = GameTree::build(game->ff_game());
  Rng rng(17);
  const long samples = 20000;
  const auto& info = ff_tree.infosets(1).front();
  auto red = reduce_infoset(*game, info, uniform_move_policy(), 0, /*keep_layers=*/true);
  auto freq = mc_outcome_frequencies(*game, red, samples, rng);
  for (int i = 0; i < red.sigma.size(); ++i) {
    double se = std::sqrt(red.sigma(i) * (1 - red.sigma(i)) / samples);
    CHECK(std::abs(freq(i) - red.sigma(i)) <= 3 * se + 1e-9);
  }
}

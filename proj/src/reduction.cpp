#include "zsg/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace zsg {

namespace {

constexpr int kRowDelta[kNumMoves] = {-1, 1, 0, 0, 0};
constexpr int kColDelta[kNumMoves] = {0, 0, -1, 1, 0};

}  // namespace

InfosetReduction reduce_infoset(const ControlGame& game, const GameTree::Infoset& infoset,
                                const ControlPolicyFn& policy, int eval_flag, bool keep_layers) {
  const int G = game.grid();
  const int D = game.travel();
  const int obs_len = game.spec().observation_length;
  const int core_len = obs_len - 1;
  ZSG_CHECK(infoset.legal.back() == game.ff_game().forfeit_action(),
            "forfeit is expected last in the legal list of " << infoset.key);

  InfosetReduction out;
  out.infoset = &infoset;
  if (keep_layers) out.layers.resize(D);

  std::vector<double> mass(G * G, 0.0);
  std::vector<double> next(G * G, 0.0);
  mass[game.start_row() * G + game.start_col()] = 1.0;

  NavQueryBatch batch;
  batch.infoset = &infoset;
  for (int t = D; t >= 1; --t) {
    batch.t = t;
    batch.cells.clear();
    for (int idx = 0; idx < G * G; ++idx)
      if (mass[idx] > 0) batch.cells.emplace_back(idx / G, idx % G);
    int n = static_cast<int>(batch.cells.size());
    batch.obs.resize(obs_len, n);
    batch.mask.resize(kNumMoves, n);
    for (int i = 0; i < n; ++i) {
      auto [r, c] = batch.cells[i];
      game.write_nav_obs(infoset.obs_core, r, c, t, batch.obs.col(i).head(core_len));
      batch.obs(obs_len - 1, i) = static_cast<float>(eval_flag);
      auto m = game.nav_mask(r, c);
      for (int mv = 0; mv < kNumMoves; ++mv) batch.mask(mv, i) = m[mv];
    }

    Eigen::MatrixXf probs = policy(batch);
    ZSG_CHECK(probs.rows() == kNumMoves && probs.cols() == n,
              "control policy returned a misshaped distribution");
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      auto [r, c] = batch.cells[i];
      double total = 0;
      for (int mv = 0; mv < kNumMoves; ++mv) {
        double p = probs(mv, i);
        if (!batch.mask(mv, i)) {
          ZSG_CHECK(p <= 1e-9, "control policy puts mass " << p << " on an illegal move at "
                                                           << infoset.key);
          continue;
        }
        total += p;
        if (p > 0) next[(r + kRowDelta[mv]) * G + (c + kColDelta[mv])] += mass[r * G + c] * p;
      }
      ZSG_CHECK(std::abs(total - 1.0) <= 1e-5,
                "control policy column sums to " << total << " at " << infoset.key);
      if (keep_layers) {
        auto& cell_probs = out.layers[D - t][r * G + c];
        for (int mv = 0; mv < kNumMoves; ++mv)
          cell_probs[mv] = batch.mask(mv, i) ? probs(mv, i) : 0.0;
      }
    }
    mass.swap(next);
  }

  int num_legal = static_cast<int>(infoset.legal.size());
  out.sigma = Eigen::VectorXd::Zero(num_legal);
  double assigned = 0;
  const auto& squares = game.squares();
  for (int k = 0; k < static_cast<int>(squares.size()); ++k) {
    auto it = std::find(infoset.legal.begin(), infoset.legal.end(), k);
    if (it == infoset.legal.end()) continue;  // illegal base action: mass forfeits
    double m = mass[squares[k].first * G + squares[k].second];
    out.sigma(it - infoset.legal.begin()) = m;
    assigned += m;
  }
  out.sigma(num_legal - 1) = std::max(0.0, 1.0 - assigned);
  return out;
}

TabularPolicy reduce_control_policy(const ControlGame& game, const GameTree& ff_tree,
                                    const ControlPolicyFn& policy, int eval_flag) {
  TabularPolicy out;
  for (int p = 0; p < 2; ++p) {
    for (const auto& info : ff_tree.infosets(p)) {
      auto red = reduce_infoset(game, info, policy, eval_flag, /*keep_layers=*/false);
      out.set(info.key, std::move(red.sigma));
    }
  }
  return out;
}

Eigen::VectorXd mc_outcome_frequencies(const ControlGame& game, const InfosetReduction& reduction,
                                       long samples, Rng& rng) {
  const int G = game.grid();
  const int D = game.travel();
  const auto& legal = reduction.infoset->legal;
  int num_legal = static_cast<int>(legal.size());
  ZSG_CHECK(static_cast<int>(reduction.layers.size()) == D,
            "reduction was built without cached layers");

  Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_legal);
  for (long s = 0; s < samples; ++s) {
    int r = game.start_row(), c = game.start_col();
    for (int step = 0; step < D; ++step) {
      const auto& probs = reduction.layers[step].at(r * G + c);
      int mv = rng.categorical(probs);
      r += kRowDelta[mv];
      c += kColDelta[mv];
    }
    int outcome = num_legal - 1;  // forfeit
    int k = game.square_at(r, c);
    if (k >= 0) {
      auto it = std::find(legal.begin(), legal.end(), k);
      if (it != legal.end()) outcome = static_cast<int>(it - legal.begin());
    }
    counts(outcome) += 1;
  }
  return counts / static_cast<double>(samples);
}

ControlPolicyFn scripted_navigator_policy(const ControlGame& game) {
  return [&game](const NavQueryBatch& batch) {
    Action target_action = batch.infoset->legal.front();
    auto [tr, tc] = game.squares().at(target_action);
    Eigen::MatrixXf probs = Eigen::MatrixXf::Zero(kNumMoves, batch.cells.size());
    for (int i = 0; i < static_cast<int>(batch.cells.size()); ++i) {
      auto [r, c] = batch.cells[i];
      int mv = kMoveStay;
      if (r > tr) mv = kMoveUp;
      else if (r < tr) mv = kMoveDown;
      else if (c > tc) mv = kMoveLeft;
      else if (c < tc) mv = kMoveRight;
      probs(mv, i) = 1.0f;
    }
    return probs;
  };
}

ControlPolicyFn uniform_move_policy() {
  return [](const NavQueryBatch& batch) {
    int n = static_cast<int>(batch.cells.size());
    Eigen::MatrixXf probs(kNumMoves, n);
    for (int i = 0; i < n; ++i) {
      float legal = static_cast<float>(batch.mask.col(i).count());
      for (int mv = 0; mv < kNumMoves; ++mv)
        probs(mv, i) = batch.mask(mv, i) ? 1.0f / legal : 0.0f;
    }
    return probs;
  };
}

}  // namespace zsg

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "zsg/check.hpp"

namespace zsg {

// Deterministic random source. The engine (mt19937_64) is fully specified by
// the standard; the distributions below are hand-rolled because the standard
// library's are implementation-defined and would break seeded reproducibility
// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Independent stream derived from a master seed and a stream id.
  static Rng substream(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t x = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return Rng(x ^ (x >> 31));
  }

  std::uint64_t bits() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    ZSG_CHECK(n > 0, "uniform_int: n must be positive");
    return static_cast<int>(uniform() * n);
  }

  std::size_t uniform_index(std::size_t n) {
    ZSG_CHECK(n > 0, "uniform_index: empty range");
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Index sampled proportionally to probs (assumed nonnegative, summing ~1).
  template <class Sequence>
  int categorical(const Sequence& probs) {
    double u = uniform();
    double acc = 0.0;
    int last = -1;
    for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
      if (probs[i] <= 0) continue;
      acc += static_cast<double>(probs[i]);
      last = i;
      if (u < acc) return i;
    }
    ZSG_CHECK(last >= 0, "categorical: no positive mass");
    return last;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zsg

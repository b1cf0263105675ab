#pragma once

#include <vector>

#include "pathgames/game.hpp"

namespace pathgames {

/// Per-player payoffs; efficient (sums to v(N)) when produced by a solver.
using PayoffVector = std::vector<ExtRational>;

struct LeastCoreResult {
  ExtRational epsilon1;
  PayoffVector payoff;
  std::vector<Coalition> tight_coalitions;
  int iterations = 0;
};

struct MaxminResult {
  ExtRational value;
  std::vector<ExtRational> strategy;  // per edge or per internal vertex
  std::vector<int> support;           // ids of the min cut used
};

}  // namespace pathgames

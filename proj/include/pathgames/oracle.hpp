#pragma once

#include "pathgames/game.hpp"
#include "pathgames/solve_types.hpp"

namespace pathgames {

/// Explicit characteristic function over all 2^n coalitions, bitmask-indexed.
struct ValueTable {
  int n = 0;
  std::vector<ExtRational> values;  // size 1 << n

  const ExtRational& operator[](std::uint64_t mask) const {
    return values[mask];
  }
  std::uint64_t size() const { return values.size(); }
};

inline constexpr int kDefaultPlayerCap = 16;

/// Materializes every coalition value. Costless unit-reward games take the
/// simple-game route unless force_cost_formula is set. OpenMP-parallel over
/// coalitions; enumerate_values_serial is the reference kernel.
ValueTable enumerate_values(const GameSpec& spec, int cap = kDefaultPlayerCap,
                            bool force_cost_formula = false);
ValueTable enumerate_values_serial(const GameSpec& spec,
                                   int cap = kDefaultPlayerCap,
                                   bool force_cost_formula = false);

/// Exact least-core optimum with every constraint explicit.
LeastCoreResult brute_force_least_core(const ValueTable& t);

/// Nucleolus by the iterated max-min-excess LP scheme, forced coalitions
/// detected exactly.
PayoffVector brute_force_nucleolus(const ValueTable& t);

bool brute_force_core_empty(const ValueTable& t);

}  // namespace pathgames

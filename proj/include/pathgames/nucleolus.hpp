#pragma once

#include <variant>

#include "pathgames/solve_types.hpp"
#include "pathgames/sp.hpp"

namespace pathgames {

/// Per-decomposition-node record of which recursion case fired.
struct NucleolusTraceEntry {
  enum class Case { Base, SeriesUnequal, SeriesEqual, Parallel };
  Case taken = Case::Base;
  int cut_left = 0, cut_right = 0;   // c', c''
  ExtRational alpha;                 // scaling, where applicable
  ExtRational min_left, min_right;   // m', m'' for the series-equal case
};

struct NucleolusResult {
  PayoffVector payoff;  // per edge
  std::vector<NucleolusTraceEntry> trace;  // postorder
};

/// Nucleolus of the costless EPCG on an undirected series-parallel graph,
/// by recursion on the decomposition tree.
std::variant<NucleolusResult, NotSeriesParallel> nucleolus_sp(const Graph& g);

/// flag[e] = does some minimum-cardinality s-t edge cut contain e?
/// Decided by an exact weight perturbation: lowering e's weight to
/// 1 - 1/(2|E|) drops the min cut weight below c iff e is on a min cut.
std::vector<bool> min_cut_membership(const Graph& g);

}  // namespace pathgames

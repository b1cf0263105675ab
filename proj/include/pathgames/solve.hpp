#pragma once

#include <optional>
#include <variant>

#include "pathgames/solve_types.hpp"

namespace pathgames {

struct CoreResult {
  bool nonempty = false;
  std::optional<int> witness;  // veto player id (edge or vertex id)
};

/// Veto-player characterization of core non-emptiness; costs are ignored.
CoreResult core_nonempty(const GameSpec& spec);

struct SeparationFeasible {};
struct SeparationViolated {
  Coalition coalition;
  ExtRational excess;  // x'(S*) - r, the minimum excess
};
using SeparationResult = std::variant<SeparationFeasible, SeparationViolated>;

/// Minimum-excess oracle over weights x'_i = x_i + c_i. Requires x >= 0
/// componentwise; losing coalitions never violate because their excess is
/// x(S) >= 0 >= -eps.
SeparationResult separation_oracle(const GameSpec& spec, const PayoffVector& x,
                                   const ExtRational& eps);

/// Least core by constraint generation against the separation oracle.
LeastCoreResult least_core(const GameSpec& spec);

enum class EpsilonCoreStatus { Member, NotMember, NotEfficient };

EpsilonCoreStatus in_epsilon_core(const GameSpec& spec, const PayoffVector& x,
                                  const ExtRational& eps);

/// Closed form for costless unit-reward EPCG/VPCG: uniform payoff on a
/// minimum-cardinality cut, epsilon1 = 1 - 1/|cut|. Rejects dual families
/// and games with costs.
LeastCoreResult combinatorial_least_core(const GameSpec& spec);

enum class InterceptMode { Edge, Vertex };

/// Maxmin interceptor strategy: min weight cut of the graph re-weighted by
/// 1/p, probabilities proportional to 1/p within the cut. Certified against
/// the exact LP optimum; a mismatch throws.
MaxminResult maxmin_intercept(const Graph& g, InterceptMode mode,
                              const std::vector<ExtRational>& p);

}  // namespace pathgames

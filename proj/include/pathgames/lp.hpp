#pragma once

#include <optional>
#include <vector>

#include "pathgames/rational.hpp"

namespace pathgames {

enum class Rel { Le, Ge, Eq };

/// Exact-rational linear program. Variables default to lower bound 0; a
/// nullopt lower bound makes the variable free. All data must be finite.
struct LinearProgram {
  int num_vars = 0;
  bool maximize = false;
  std::vector<Rat> objective;

  struct Row {
    std::vector<Rat> coeffs;
    Rel rel = Rel::Le;
    Rat rhs;
  };
  std::vector<Row> rows;

  std::vector<std::optional<Rat>> lower;  // size num_vars once touched
  std::vector<std::optional<Rat>> upper;

  static LinearProgram make(int num_vars, bool maximize = false) {
    LinearProgram p;
    p.num_vars = num_vars;
    p.maximize = maximize;
    p.objective.assign(num_vars, Rat(0));
    p.lower.assign(num_vars, Rat(0));
    p.upper.assign(num_vars, std::nullopt);
    return p;
  }

  void add_row(std::vector<Rat> coeffs, Rel rel, Rat rhs) {
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rat> values;  // per variable, Optimal only
  Rat objective;
  std::vector<int> basis;  // basic column ids of the internal tableau
};

/// Two-phase exact simplex with Bland's rule. Internally solves the dual so
/// that programs with many rows and few variables stay cheap; the primal
/// solution is read off the optimal reduced costs.
LpSolution solve_lp(const LinearProgram& p);

}  // namespace pathgames

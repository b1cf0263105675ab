#include "pathgames/oracle.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

#include "pathgames/lp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathgames {

namespace {

bool costless_unit_reward(const GameSpec& spec) {
  if (!(spec.reward == ExtRational(1))) return false;
  for (const auto& c : spec.costs)
    if (!c.is_zero()) return false;
  return true;
}

ValueTable enumerate_impl(const GameSpec& spec, int cap,
                          bool force_cost_formula, bool parallel) {
  int n = spec.player_count();
  if (n > cap)
    throw GameError(GameError::Code::TooManyPlayers,
                    "coalition table over the player cap");
  bool simple_route = !force_cost_formula && costless_unit_reward(spec);
  ValueTable t;
  t.n = n;
  t.values.assign(std::uint64_t{1} << n, ExtRational(0));
  std::int64_t total = std::int64_t{1} << n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
  for (std::int64_t mask = 0; mask < total; ++mask) {
    Coalition s = Coalition::from_mask(n, static_cast<std::uint64_t>(mask));
    t.values[mask] = simple_route ? ExtRational(simple_value(spec, s))
                                  : cost_value(spec, s);
  }
  (void)parallel;
  return t;
}

Rat table_value(const ValueTable& t, std::uint64_t mask) {
  return t.values[mask].value();
}

Rat payoff_sum(const std::vector<Rat>& x, std::uint64_t mask) {
  Rat sum = 0;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) sum += x[i];
  return sum;
}

std::vector<Rat> indicator(int n, std::uint64_t mask) {
  std::vector<Rat> row(n, Rat(0));
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) row[i] = 1;
  return row;
}

// Fully reduced exact linear equality system over the payoff variables,
// used to track which coalition excesses are already pinned.
class EqSystem {
 public:
  explicit EqSystem(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Splits a'x into (residual)'x + forced, relative to the stored rows.
  void reduce(std::vector<Rat>& coeffs, Rat& forced) const {
    forced = 0;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rat& factor = coeffs[pivots_[r]];
      if (factor == 0) continue;
      Rat f = factor;
      for (int j = 0; j < n_; ++j) coeffs[j] -= f * rows_[r][j];
      forced += f * rhs_[r];
    }
  }

  bool implied(const std::vector<Rat>& coeffs, Rat& forced) const {
    std::vector<Rat> c = coeffs;
    reduce(c, forced);
    for (const Rat& v : c)
      if (v != 0) return false;
    return true;
  }

  // Adds a'x = b; returns false (no-op) when the row is dependent.
  bool add(const std::vector<Rat>& coeffs, const Rat& b) {
    std::vector<Rat> c = coeffs;
    Rat forced;
    reduce(c, forced);
    int pivot = -1;
    for (int j = 0; j < n_; ++j) {
      if (c[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      if (forced != b) throw std::logic_error("inconsistent equality system");
      return false;
    }
    Rat inv = 1 / c[pivot];
    for (int j = 0; j < n_; ++j) c[j] *= inv;
    Rat rhs = (b - forced) * inv;
    // Keep the system fully reduced.
    for (size_t r = 0; r < rows_.size(); ++r) {
      Rat f = rows_[r][pivot];
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j) rows_[r][j] -= f * c[j];
      rhs_[r] -= f * rhs;
    }
    rows_.push_back(std::move(c));
    rhs_.push_back(std::move(rhs));
    pivots_.push_back(pivot);
    return true;
  }

  // Valid once rank == n.
  std::vector<Rat> solve() const {
    assert(rank() == n_);
    std::vector<Rat> x(n_, Rat(0));
    for (size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = rhs_[r];
    return x;
  }

 private:
  int n_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<int> pivots_;
};

}  // namespace

ValueTable enumerate_values(const GameSpec& spec, int cap,
                            bool force_cost_formula) {
  return enumerate_impl(spec, cap, force_cost_formula, true);
}

ValueTable enumerate_values_serial(const GameSpec& spec, int cap,
                                   bool force_cost_formula) {
  return enumerate_impl(spec, cap, force_cost_formula, false);
}

LeastCoreResult brute_force_least_core(const ValueTable& t) {
  int n = t.n;
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Variables x_0..x_{n-1}, epsilon.
  LinearProgram p = LinearProgram::make(n + 1);
  p.objective[n] = 1;
  {
    std::vector<Rat> eff(n + 1, Rat(1));
    eff[n] = 0;
    p.add_row(std::move(eff), Rel::Eq, table_value(t, full));
  }
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    std::vector<Rat> row = indicator(n, mask);
    row.push_back(Rat(1));  // + epsilon
    p.add_row(std::move(row), Rel::Ge, table_value(t, mask));
  }
  LpSolution sol = solve_lp(p);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("least-core LP must be solvable");

  LeastCoreResult res;
  res.epsilon1 = ExtRational(sol.values[n]);
  for (int i = 0; i < n; ++i) res.payoff.push_back(ExtRational(sol.values[i]));
  res.iterations = 1;
  std::vector<Rat> x(sol.values.begin(), sol.values.begin() + n);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (payoff_sum(x, mask) - table_value(t, mask) == -sol.values[n])
      res.tight_coalitions.push_back(Coalition::from_mask(n, mask));
  }
  return res;
}

bool brute_force_core_empty(const ValueTable& t) {
  return brute_force_least_core(t).epsilon1 > ExtRational(0);
}

PayoffVector brute_force_nucleolus(const ValueTable& t) {
  int n = t.n;
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  EqSystem sys(n);
  sys.add(std::vector<Rat>(n, Rat(1)), table_value(t, full));
  std::vector<std::pair<std::uint64_t, Rat>> fixed;  // independent equalities
  std::set<std::uint64_t> remaining;
  for (std::uint64_t mask = 1; mask < full; ++mask) remaining.insert(mask);

  auto base_rows = [&](LinearProgram& p, bool with_delta) {
    int vars = p.num_vars;
    std::vector<Rat> eff(vars, Rat(0));
    for (int i = 0; i < n; ++i) eff[i] = 1;
    p.add_row(std::move(eff), Rel::Eq, table_value(t, full));
    for (const auto& [mask, level] : fixed) {
      std::vector<Rat> row = indicator(n, mask);
      row.resize(vars, Rat(0));
      p.add_row(std::move(row), Rel::Eq, level);
    }
    (void)with_delta;
  };

  int guard = 0;
  while (sys.rank() < n) {
    if (remaining.empty() || ++guard > (1 << n))
      throw std::logic_error("nucleolus scheme failed to pin the payoff");

    // Stage LP: maximize the minimum excess over unfixed coalitions.
    LinearProgram stage = LinearProgram::make(n + 1, /*maximize=*/true);
    stage.lower[n] = std::nullopt;  // delta is free
    stage.objective[n] = 1;
    base_rows(stage, true);
    for (std::uint64_t mask : remaining) {
      std::vector<Rat> row = indicator(n, mask);
      row.push_back(Rat(-1));  // - delta
      stage.add_row(std::move(row), Rel::Ge, table_value(t, mask));
    }
    LpSolution sol = solve_lp(stage);
    if (sol.status != LpStatus::Optimal)
      throw std::logic_error("nucleolus stage LP must be solvable");
    Rat delta = sol.values[n];
    std::vector<Rat> x(sol.values.begin(), sol.values.begin() + n);

    std::vector<std::uint64_t> tight;
    for (std::uint64_t mask : remaining) {
      if (payoff_sum(x, mask) - table_value(t, mask) == delta)
        tight.push_back(mask);
    }

    bool progressed = false;
    for (std::uint64_t mask : tight) {
      Rat level = table_value(t, mask) + delta;
      Rat forced_value;
      if (sys.implied(indicator(n, mask), forced_value)) {
        assert(forced_value == level);
        remaining.erase(mask);
        progressed = true;
        continue;
      }
      // Forced iff the excess cannot rise above delta while every other
      // unfixed excess stays at or above it.
      LinearProgram probe = LinearProgram::make(n, /*maximize=*/true);
      for (int i = 0; i < n; ++i)
        probe.objective[i] = ((mask >> i) & 1) ? Rat(1) : Rat(0);
      base_rows(probe, false);
      for (std::uint64_t other : remaining) {
        probe.add_row(indicator(n, other), Rel::Ge,
                      table_value(t, other) + delta);
      }
      LpSolution ps = solve_lp(probe);
      if (ps.status != LpStatus::Optimal)
        throw std::logic_error("nucleolus probe LP must be solvable");
      if (ps.objective == level) {
        sys.add(indicator(n, mask), level);
        fixed.push_back({mask, level});
        remaining.erase(mask);
        progressed = true;
        if (sys.rank() == n) break;
      }
    }
    if (!progressed)
      throw std::logic_error("nucleolus stage fixed no coalition");
  }

  std::vector<Rat> x = sys.solve();
  PayoffVector out;
  for (const Rat& v : x) {
    if (v < 0) throw std::logic_error("nucleolus payoff must be nonnegative");
    out.push_back(ExtRational(v));
  }
  return out;
}

}  // namespace pathgames

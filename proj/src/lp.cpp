#include "pathgames/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace pathgames {

namespace {

// Dense standard-form tableau: min f'u s.t. M u = d, u >= 0.
// Few rows, possibly many columns.
struct Tableau {
  int rows = 0;
  int cols = 0;  // real columns; artificials are appended by solve()
  std::vector<std::vector<Rat>> m;  // column-major: m[j] is column j
  std::vector<Rat> d;
  std::vector<Rat> f;

  enum class Status { Optimal, Infeasible, Unbounded };

  // Outputs.
  std::vector<Rat> rc;        // reduced costs per real column at optimum
  std::vector<int> basis;     // basic column per tableau row
  std::vector<Rat> rhs;       // basic values per tableau row
  Rat objective;

  Status solve();
};

Tableau::Status Tableau::solve() {
  // Row-major working copy with artificial identity appended; rows with
  // negative rhs are negated first.
  int total = cols + rows;
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total, Rat(0)));
  rhs.assign(rows, Rat(0));
  for (int i = 0; i < rows; ++i) {
    bool neg = d[i] < 0;
    rhs[i] = neg ? Rat(-d[i]) : d[i];
    for (int j = 0; j < cols; ++j) {
      const Rat& a = m[j][i];
      if (a != 0) t[i][j] = neg ? Rat(-a) : a;
    }
    t[i][cols + i] = 1;
  }
  basis.resize(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  std::vector<Rat> z(total, Rat(0));
  std::vector<bool> banned(total, false);
  Rat tmp, factor;

  auto pivot = [&](int r, int c) {
    Rat inv = 1 / t[r][c];
    if (inv != 1) {
      for (int j = 0; j < total; ++j)
        if (t[r][j] != 0) t[r][j] *= inv;
      rhs[r] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      factor = t[i][c];
      for (int j = 0; j < total; ++j) {
        if (t[r][j] != 0) {
          tmp = factor * t[r][j];
          t[i][j] -= tmp;
        }
      }
      tmp = factor * rhs[r];
      rhs[i] -= tmp;
    }
    if (z[c] != 0) {
      factor = z[c];
      for (int j = 0; j < total; ++j) {
        if (t[r][j] != 0) {
          tmp = factor * t[r][j];
          z[j] -= tmp;
        }
      }
    }
    basis[r] = c;
  };

  // Bland's rule: enter the lowest-index improving column, leave by the
  // minimum ratio breaking ties toward the lowest basic index.
  auto run = [&]() -> bool {  // false = unbounded
    while (true) {
      int enter = -1;
      for (int j = 0; j < total; ++j) {
        if (!banned[j] && z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs[i] / t[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  auto load_costs = [&](const std::vector<Rat>& costs) {
    for (int j = 0; j < total; ++j) {
      z[j] = j < static_cast<int>(costs.size()) ? costs[j] : Rat(0);
    }
    for (int i = 0; i < rows; ++i) {
      int b = basis[i];
      Rat cb = b < static_cast<int>(costs.size()) ? costs[b] : Rat(0);
      if (cb == 0) continue;
      for (int j = 0; j < total; ++j) {
        if (t[i][j] != 0) {
          tmp = cb * t[i][j];
          z[j] -= tmp;
        }
      }
    }
  };

  // Phase 1: minimize the artificial sum.
  std::vector<Rat> phase1(total, Rat(0));
  for (int i = 0; i < rows; ++i) phase1[cols + i] = 1;
  load_costs(phase1);
  bool ok = run();
  assert(ok);
  Rat art_sum = 0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] >= cols) art_sum += rhs[i];
  if (art_sum != 0) return Status::Infeasible;

  // Drive artificials out of the basis; all-zero rows are redundant.
  std::vector<bool> dead_row(rows, false);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) continue;
    int c = -1;
    for (int j = 0; j < cols; ++j) {
      if (t[i][j] != 0) {
        c = j;
        break;
      }
    }
    if (c >= 0) pivot(i, c);
    else dead_row[i] = true;
  }
  // Dead rows are all-zero over real columns, so their basic artificial can
  // never be selected to leave; banning every artificial is safe.
  for (int j = cols; j < total; ++j) banned[j] = true;
  (void)dead_row;

  // Phase 2.
  load_costs(f);
  if (!run()) return Status::Unbounded;

  objective = 0;
  for (int i = 0; i < rows; ++i) {
    int b = basis[i];
    if (b < cols && f[b] != 0) objective += f[b] * rhs[i];
  }
  rc.assign(cols, Rat(0));
  for (int j = 0; j < cols; ++j) rc[j] = z[j];
  return Status::Optimal;
}

// Transformed ("t-var") layout for one primal variable.
struct VarMap {
  int pos = -1;
  int neg = -1;  // >= 0 when the variable is free and split
  Rat shift;     // finite lower bound
};

}  // namespace

LpSolution solve_lp(const LinearProgram& p) {
  if (static_cast<int>(p.objective.size()) != p.num_vars)
    throw std::invalid_argument("objective size mismatch");
  for (const auto& row : p.rows)
    if (static_cast<int>(row.coeffs.size()) != p.num_vars)
      throw std::invalid_argument("row size mismatch");

  auto lower_of = [&](int j) -> std::optional<Rat> {
    if (j < static_cast<int>(p.lower.size())) return p.lower[j];
    return Rat(0);
  };
  auto upper_of = [&](int j) -> std::optional<Rat> {
    if (j < static_cast<int>(p.upper.size())) return p.upper[j];
    return std::nullopt;
  };

  // t-vars: x_j = t_pos - t_neg + shift, all t >= 0.
  std::vector<VarMap> map(p.num_vars);
  int nt = 0;
  for (int j = 0; j < p.num_vars; ++j) {
    auto lb = lower_of(j);
    map[j].pos = nt++;
    if (lb) {
      map[j].shift = *lb;
    } else {
      map[j].neg = nt++;
    }
  }

  std::vector<Rat> cost(nt, Rat(0));
  for (int j = 0; j < p.num_vars; ++j) {
    Rat c = p.maximize ? Rat(-p.objective[j]) : p.objective[j];
    cost[map[j].pos] += c;
    if (map[j].neg >= 0) cost[map[j].neg] -= c;
  }

  // Rows in >= / = form over t-vars.
  struct TRow {
    std::vector<std::pair<int, Rat>> terms;  // sparse
    Rat rhs;
    bool eq;
  };
  std::vector<TRow> trows;
  auto push_row = [&](const std::vector<Rat>& coeffs, Rel rel, Rat rhs) {
    TRow tr;
    tr.eq = rel == Rel::Eq;
    bool flip = rel == Rel::Le;
    for (int j = 0; j < p.num_vars; ++j) {
      if (coeffs[j] == 0) continue;
      Rat a = flip ? Rat(-coeffs[j]) : coeffs[j];
      rhs -= coeffs[j] * map[j].shift;
      tr.terms.push_back({map[j].pos, a});
      if (map[j].neg >= 0) tr.terms.push_back({map[j].neg, Rat(-a)});
    }
    tr.rhs = flip ? Rat(-rhs) : rhs;
    trows.push_back(std::move(tr));
  };
  for (const auto& row : p.rows) push_row(row.coeffs, row.rel, row.rhs);
  for (int j = 0; j < p.num_vars; ++j) {
    if (auto ub = upper_of(j)) {
      std::vector<Rat> coeffs(p.num_vars, Rat(0));
      coeffs[j] = 1;
      push_row(coeffs, Rel::Le, *ub);
    }
  }

  // Dual in standard min form: one tableau row per t-var, one column per
  // dual variable (>= rows give one, = rows give a split pair) plus slacks.
  auto build = [&](bool zero_rhs) {
    Tableau tab;
    tab.rows = nt;
    std::vector<std::vector<Rat>> columns;
    std::vector<Rat> fcol;
    for (const auto& tr : trows) {
      std::vector<Rat> col(nt, Rat(0));
      for (const auto& [k, a] : tr.terms) col[k] += a;
      Rat price = zero_rhs ? Rat(0) : Rat(-tr.rhs);
      columns.push_back(col);
      fcol.push_back(price);
      if (tr.eq) {
        std::vector<Rat> ncol(nt, Rat(0));
        for (int k = 0; k < nt; ++k) ncol[k] = -col[k];
        columns.push_back(std::move(ncol));
        fcol.push_back(Rat(-price));
      }
    }
    int first_slack = static_cast<int>(columns.size());
    for (int k = 0; k < nt; ++k) {
      std::vector<Rat> col(nt, Rat(0));
      col[k] = 1;
      columns.push_back(std::move(col));
      fcol.push_back(Rat(0));
    }
    tab.cols = static_cast<int>(columns.size());
    tab.m = std::move(columns);
    tab.f = std::move(fcol);
    tab.d.assign(nt, Rat(0));
    for (int k = 0; k < nt; ++k) tab.d[k] = cost[k];
    return std::pair<Tableau, int>{std::move(tab), first_slack};
  };

  auto [tab, first_slack] = build(false);
  Tableau::Status st = tab.solve();

  LpSolution sol;
  if (st == Tableau::Status::Unbounded) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  if (st == Tableau::Status::Infeasible) {
    // Dual infeasible: the primal is unbounded iff it is feasible, which the
    // zero-priced dual decides (a positive-value ray is a Farkas witness).
    auto [tab0, fs0] = build(true);
    sol.status = tab0.solve() == Tableau::Status::Unbounded
                     ? LpStatus::Infeasible
                     : LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.basis = tab.basis;
  sol.values.assign(p.num_vars, Rat(0));
  sol.objective = 0;
  for (int j = 0; j < p.num_vars; ++j) {
    Rat v = tab.rc[first_slack + map[j].pos];
    if (map[j].neg >= 0) v -= tab.rc[first_slack + map[j].neg];
    v += map[j].shift;
    sol.values[j] = v;
    sol.objective += p.objective[j] * v;
  }
  return sol;
}

}  // namespace pathgames

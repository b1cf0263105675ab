#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "pathgames/oracle.hpp"
#include "support.hpp"

using namespace pathgames;
using namespace pgtest;

namespace {

ExtRational q(long n, long d = 1) { return ExtRational(n, d); }

Rat excess(const ValueTable& t, const PayoffVector& x, std::uint64_t mask) {
  Rat sum = 0;
  for (int i = 0; i < t.n; ++i)
    if ((mask >> i) & 1) sum += x[i].value();
  return sum - t[mask].value();
}

std::vector<Rat> sorted_excesses(const ValueTable& t, const PayoffVector& x) {
  std::vector<Rat> out;
  for (std::uint64_t m = 1; m + 1 < t.size(); ++m)
    out.push_back(excess(t, x, m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_values of the diamond EPCG") {
  ValueTable t = enumerate_values(GameSpec::make_simple(Family::Epcg, diamond()));
  REQUIRE(t.n == 4);
  REQUIRE(t.size() == 16);
  CHECK(t[0] == q(0));
  for (std::uint64_t m = 0; m < 16; ++m) {
    bool wins = ((m & 0b0011) == 0b0011) || ((m & 0b1100) == 0b1100);
    CHECK(t[m] == q(wins ? 1 : 0));
  }
}

TEST_CASE("enumerate_values of costed parallel edges") {
  GameSpec spec = GameSpec::make(Family::Epcg, parallel_edges(2),
                                 {q(1, 4), q(1, 2)}, q(1));
  ValueTable t = enumerate_values(spec);
  CHECK(t[0b00] == q(0));
  CHECK(t[0b01] == q(3, 4));
  CHECK(t[0b10] == q(1, 2));
  CHECK(t[0b11] == q(3, 4));
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937_64 rng(14014);
  for (int it = 0; it < 25; ++it) {
    Family fam = static_cast<Family>(it % 4);
    Graph g = random_graph(rng, 8, it % 2 == 0, is_vertex_family(fam));
    GameSpec spec;
    try {
      spec = GameSpec::make_simple(fam, g);
    } catch (const GameError&) {
      continue;
    }
    if (spec.player_count() > 10) continue;
    ValueTable a = enumerate_values(spec);
    ValueTable b = enumerate_values_serial(spec);
    CHECK(a.values == b.values);
    // The simple-game shortcut must match the literal cost formula.
    ValueTable c = enumerate_values(spec, kDefaultPlayerCap, true);
    CHECK(a.values == c.values);
  }
}

TEST_CASE("player cap is enforced") {
  GameSpec spec = GameSpec::make_simple(Family::Epcg, parallel_edges(6));
  CHECK_THROWS_AS(enumerate_values(spec, 4), GameError);
  CHECK_NOTHROW(enumerate_values(spec, 6));
}

TEST_CASE("brute_force_least_core worked examples") {
  ValueTable diamond_t =
      enumerate_values(GameSpec::make_simple(Family::Epcg, diamond()));
  LeastCoreResult d = brute_force_least_core(diamond_t);
  CHECK(d.epsilon1 == q(1, 2));

  ValueTable single =
      enumerate_values(GameSpec::make_simple(Family::Epcg, parallel_edges(1)));
  LeastCoreResult s = brute_force_least_core(single);
  CHECK(s.epsilon1 == q(0));
  CHECK(s.payoff == PayoffVector{q(1)});

  GameSpec costed = GameSpec::make(Family::Epcg, parallel_edges(2),
                                   {q(1, 4), q(1, 2)}, q(1));
  LeastCoreResult c = brute_force_least_core(enumerate_values(costed));
  CHECK(c.epsilon1 == q(1, 4));
  CHECK(c.payoff == PayoffVector{q(1, 2), q(1, 4)});
}

TEST_CASE("least-core output is efficient and its tight set is honest") {
  std::mt19937_64 rng(15015);
  for (int it = 0; it < 20; ++it) {
    Family fam = static_cast<Family>(it % 4);
    Graph g = random_graph(rng, 7, false, is_vertex_family(fam));
    GameSpec spec;
    try {
      spec = GameSpec::make_simple(fam, g);
    } catch (const GameError&) {
      continue;
    }
    if (spec.player_count() > 9) continue;
    ValueTable t = enumerate_values(spec);
    LeastCoreResult r = brute_force_least_core(t);
    ExtRational sum(0);
    for (const auto& xi : r.payoff) {
      CHECK(!xi.is_negative());
      sum += xi;
    }
    CHECK(sum == t[t.size() - 1]);
    CHECK(r.epsilon1 >= q(0));
    Rat eps = r.epsilon1.value();
    for (std::uint64_t m = 1; m + 1 < t.size(); ++m)
      CHECK(excess(t, r.payoff, m) >= -eps);
    for (const auto& s : r.tight_coalitions)
      CHECK(excess(t, r.payoff, s.mask()) == -eps);
  }
}

TEST_CASE("brute_force_core_empty worked examples") {
  CHECK(brute_force_core_empty(
      enumerate_values(GameSpec::make_simple(Family::Epcg, diamond()))));
  CHECK(!brute_force_core_empty(
      enumerate_values(GameSpec::make_simple(Family::Epcg, path_graph(1)))));
  CHECK(!brute_force_core_empty(
      enumerate_values(GameSpec::make_simple(Family::VpcgDual, diamond()))));
}

TEST_CASE("brute_force_nucleolus worked examples") {
  // Two edges in series.
  ValueTable series =
      enumerate_values(GameSpec::make_simple(Family::Epcg, path_graph(1)));
  CHECK(brute_force_nucleolus(series) == PayoffVector{q(1, 2), q(1, 2)});

  // Diamond: symmetric quarters.
  ValueTable d =
      enumerate_values(GameSpec::make_simple(Family::Epcg, diamond()));
  CHECK(brute_force_nucleolus(d) ==
        PayoffVector{q(1, 4), q(1, 4), q(1, 4), q(1, 4)});

  // e0 parallel with series (e1, e2).
  Graph g;
  g.directed = false;
  g.vertex_count = 3;
  g.source = 0;
  g.sink = 1;
  g.edges = {{0, 1}, {0, 2}, {2, 1}};
  ValueTable mixed = enumerate_values(GameSpec::make_simple(Family::Epcg, g));
  CHECK(brute_force_nucleolus(mixed) == PayoffVector{q(1, 2), q(1, 4), q(1, 4)});
}

TEST_CASE("nucleolus copes with winning singletons") {
  // Each edge alone is a path, so v({i}) = 1; the scheme still pins (1/2,1/2).
  ValueTable t =
      enumerate_values(GameSpec::make_simple(Family::Epcg, parallel_edges(2)));
  CHECK(brute_force_nucleolus(t) == PayoffVector{q(1, 2), q(1, 2)});
}

TEST_CASE("nucleolus is permutation-equivariant") {
  std::mt19937_64 rng(16016);
  int done = 0;
  while (done < 15) {
    Graph g = random_sp_graph(rng, 7);
    if (g.has_direct_st_edge()) continue;
    GameSpec spec = GameSpec::make_simple(Family::Epcg, g);
    int n = spec.player_count();
    ValueTable t = enumerate_values(spec);
    PayoffVector x = brute_force_nucleolus(t);
    ++done;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    ValueTable pt;
    pt.n = n;
    pt.values.assign(t.size(), ExtRational(0));
    for (std::uint64_t m = 0; m < t.size(); ++m) {
      std::uint64_t pm = 0;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) pm |= std::uint64_t{1} << perm[i];
      pt.values[pm] = t[m];
    }
    PayoffVector px = brute_force_nucleolus(pt);
    for (int i = 0; i < n; ++i) CHECK(px[perm[i]] == x[i]);
  }
}

TEST_CASE("nucleolus excess vector is lexicographically maximal") {
  std::mt19937_64 rng(17017);
  int done = 0;
  while (done < 10) {
    Graph g = random_sp_graph(rng, 6);
    if (g.has_direct_st_edge()) continue;
    GameSpec spec = GameSpec::make_simple(Family::Epcg, g);
    ValueTable t = enumerate_values(spec);
    PayoffVector x = brute_force_nucleolus(t);
    ++done;
    int n = t.n;
    std::vector<Rat> nucleolus_sorted = sorted_excesses(t, x);

    for (int trial = 0; trial < 10; ++trial) {
      // Random efficient nonnegative alternative: move mass between players.
      PayoffVector y = x;
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b || y[a].is_zero()) continue;
      ExtRational shift = y[a] * q(1, 2 + static_cast<long>(rng() % 3));
      y[a] = y[a] - shift;
      y[b] += shift;
      if (y == x) continue;
      std::vector<Rat> other_sorted = sorted_excesses(t, y);
      CHECK(nucleolus_sorted >= other_sorted);
    }
  }
}

TEST_CASE("nucleolus lands in the least-core") {
  std::mt19937_64 rng(18018);
  int done = 0;
  while (done < 12) {
    Graph g = random_sp_graph(rng, 7);
    if (g.has_direct_st_edge()) continue;
    GameSpec spec = GameSpec::make_simple(Family::Epcg, g);
    ValueTable t = enumerate_values(spec);
    PayoffVector x = brute_force_nucleolus(t);
    Rat eps1 = brute_force_least_core(t).epsilon1.value();
    ++done;
    for (std::uint64_t m = 1; m + 1 < t.size(); ++m)
      CHECK(excess(t, x, m) >= -eps1);
  }
}

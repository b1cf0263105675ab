#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "pathgames/game.hpp"
#include "support.hpp"

using namespace pathgames;
using namespace pgtest;

namespace {

ExtRational q(long n, long d = 1) { return ExtRational(n, d); }

GameSpec costless(Family f, Graph g) {
  return GameSpec::make_simple(f, std::move(g));
}

Coalition coal(int n, std::initializer_list<int> members) {
  Coalition s(n);
  for (int i : members) s.add(i);
  return s;
}

// Independent v^c: enumerate winning subsets of S directly.
ExtRational brute_cost_value(const GameSpec& spec, const Coalition& s) {
  if (simple_value(spec, s) == 0) return ExtRational(0);
  std::optional<ExtRational> cheapest;
  int n = spec.player_count();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Coalition sub = Coalition::from_mask(n, m);
    if (!sub.subset_of(s) || simple_value(spec, sub) != 1) continue;
    ExtRational total(0);
    for (int i : sub.members()) total += spec.costs[i];
    if (!cheapest || total < *cheapest) cheapest = total;
  }
  return spec.reward - *cheapest;
}

}  // namespace

TEST_CASE("coalition set algebra") {
  Coalition a = coal(5, {0, 2, 4});
  Coalition b = coal(5, {2, 3});
  CHECK(a.size() == 3);
  CHECK(a.unite(b) == coal(5, {0, 2, 3, 4}));
  CHECK(a.intersect(b) == coal(5, {2}));
  CHECK(a.complement() == coal(5, {1, 3}));
  CHECK(coal(5, {2}).subset_of(b));
  CHECK(!b.subset_of(a));
  CHECK(Coalition::full(5).size() == 5);
  CHECK(a.members() == std::vector<int>{0, 2, 4});
  CHECK_THROWS(Coalition(65));
}

TEST_CASE("simple_value on the diamond") {
  GameSpec epcg = costless(Family::Epcg, diamond());
  CHECK(simple_value(epcg, coal(4, {0, 1})) == 1);  // {sa, at}
  CHECK(simple_value(epcg, coal(4, {0, 3})) == 0);  // {sa, bt}
  CHECK(simple_value(epcg, coal(4, {})) == 0);
  CHECK(simple_value(epcg, Coalition::full(4)) == 1);

  GameSpec dual = costless(Family::EpcgDual, diamond());
  CHECK(simple_value(dual, coal(4, {0, 2})) == 1);  // {sa, sb}: complement loses
  CHECK(simple_value(dual, coal(4, {0})) == 0);
}

TEST_CASE("vertex families") {
  GameSpec vpcg = costless(Family::Vpcg, diamond());
  CHECK(vpcg.player_count() == 2);  // a, b
  CHECK(simple_value(vpcg, coal(2, {0})) == 1);
  CHECK(simple_value(vpcg, coal(2, {})) == 0);

  GameSpec vd = costless(Family::VpcgDual, diamond());
  CHECK(simple_value(vd, coal(2, {0})) == 0);  // complement {b} still wins
  CHECK(simple_value(vd, coal(2, {0, 1})) == 1);
}

TEST_CASE("construction rejects bad specs") {
  // VPCG with a direct (s,t) edge.
  Graph direct = parallel_edges(1);
  CHECK_THROWS_AS(costless(Family::Vpcg, direct), GameError);
  // No winning coalition at all.
  Graph dead = diamond();
  dead.edges = {{0, 2}, {0, 3}};
  CHECK_THROWS_AS(costless(Family::Epcg, dead), GameError);
  // Negative cost.
  CHECK_THROWS_AS(GameSpec::make(Family::Epcg, parallel_edges(1), {q(-1)}, q(1)),
                  GameError);
  // Infinite cost.
  CHECK_THROWS_AS(GameSpec::make(Family::Epcg, parallel_edges(1),
                                 {ExtRational::infinity()}, q(1)),
                  GameError);
  // Negative grand value: cheapest winning coalition costs more than r.
  CHECK_THROWS_AS(GameSpec::make(Family::Epcg, parallel_edges(1), {q(2)}, q(1)),
                  GameError);
}

TEST_CASE("cost_value of parallel edges") {
  GameSpec spec = GameSpec::make(Family::Epcg, parallel_edges(2),
                                 {q(1, 4), q(1, 2)}, q(1));
  CHECK(cost_value(spec, coal(2, {0})) == q(3, 4));
  CHECK(cost_value(spec, coal(2, {1})) == q(1, 2));
  CHECK(cost_value(spec, Coalition::full(2)) == q(3, 4));
  CHECK(cost_value(spec, coal(2, {})) == q(0));
  CHECK(grand_value(spec) == q(3, 4));
}

TEST_CASE("costless unit-reward games collapse to the simple game") {
  std::mt19937_64 rng(8808);
  for (int it = 0; it < 60; ++it) {
    bool vertex = it % 2 == 0;
    Graph g = random_graph(rng, 8, false, vertex);
    GameSpec spec = costless(vertex ? Family::Vpcg : Family::Epcg, g);
    int n = spec.player_count();
    if (n > 10) continue;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s = Coalition::from_mask(n, m);
      CHECK(cost_value(spec, s) == ExtRational(simple_value(spec, s)));
    }
  }
}

TEST_CASE("cost_value matches definition on random costed games") {
  std::mt19937_64 rng(9909);
  int done = 0;
  while (done < 40) {
    Family fam = static_cast<Family>(rng() % 4);
    Graph g = random_graph(rng, 7, rng() % 2 == 0, is_vertex_family(fam));
    int players = is_vertex_family(fam) ? g.vertex_count - 2 : g.edge_count();
    if (players > 8) continue;
    std::vector<ExtRational> costs;
    for (int i = 0; i < players; ++i) costs.push_back(random_rational01(rng));
    GameSpec spec;
    try {
      spec = GameSpec::make(fam, g, costs, q(3));
    } catch (const GameError&) {
      continue;
    }
    ++done;
    int n = spec.player_count();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s = Coalition::from_mask(n, m);
      CHECK(cost_value(spec, s) == brute_cost_value(spec, s));
    }
  }
}

TEST_CASE("simple game monotonicity") {
  std::mt19937_64 rng(10010);
  for (int it = 0; it < 30; ++it) {
    Family fam = static_cast<Family>(it % 4);
    Graph g = random_graph(rng, 6, false, is_vertex_family(fam));
    GameSpec spec;
    try {
      spec = costless(fam, g);
    } catch (const GameError&) {
      continue;
    }
    int n = spec.player_count();
    if (n > 8) continue;
    CHECK(simple_value(spec, Coalition(n)) == 0);
    CHECK(simple_value(spec, Coalition::full(n)) == 1);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s = Coalition::from_mask(n, m);
      int vs = simple_value(spec, s);
      for (int i = 0; i < n; ++i) {
        if (s.contains(i)) continue;
        Coalition t = s;
        t.add(i);
        CHECK(vs <= simple_value(spec, t));
      }
    }
  }
}

TEST_CASE("min_weight_winning_coalition examples") {
  GameSpec epcg = costless(Family::Epcg, diamond());
  auto r = min_weight_winning_coalition(epcg, {q(1), q(2), q(2), q(2)});
  CHECK(r.coalition == coal(4, {0, 1}));
  CHECK(r.weight == q(3));

  GameSpec dual = costless(Family::EpcgDual, diamond());
  auto c = min_weight_winning_coalition(dual, {q(1), q(1), q(1), q(1)});
  CHECK(c.weight == q(2));
  CHECK(c.coalition.size() == 2);
  CHECK(simple_value(dual, c.coalition) == 1);

  GameSpec vpcg = costless(Family::Vpcg, path_graph(1));
  auto v = min_weight_winning_coalition(vpcg, {q(5)});
  CHECK(v.coalition == coal(1, {0}));
  CHECK(v.weight == q(5));
}

TEST_CASE("min_weight_winning_coalition matches exhaustive search") {
  std::mt19937_64 rng(11011);
  int done = 0;
  while (done < 80) {
    Family fam = static_cast<Family>(rng() % 4);
    Graph g = random_graph(rng, 8, rng() % 2 == 0, is_vertex_family(fam));
    GameSpec spec;
    try {
      spec = costless(fam, g);
    } catch (const GameError&) {
      continue;
    }
    int n = spec.player_count();
    if (n > 12) continue;
    ++done;
    std::vector<ExtRational> w;
    for (int i = 0; i < n; ++i) w.push_back(random_rational01(rng));
    auto got = min_weight_winning_coalition(spec, w);
    auto want = brute_mwwc_weight(spec, w);
    REQUIRE(want);
    CHECK(got.weight == *want);
    CHECK(simple_value(spec, got.coalition) == 1);
    ExtRational total(0);
    for (int i : got.coalition.members()) total += w[i];
    CHECK(total == got.weight);
  }
}

TEST_CASE("dual involution and the dual formula") {
  std::mt19937_64 rng(12012);
  int done = 0;
  while (done < 40) {
    Family fam = static_cast<Family>(rng() % 4);
    Graph g = random_graph(rng, 7, false, is_vertex_family(fam));
    GameSpec spec;
    try {
      spec = costless(fam, g);
    } catch (const GameError&) {
      continue;
    }
    int n = spec.player_count();
    if (n > 10) continue;
    ++done;
    GameSpec dd = dual_family(dual_family(spec));
    CHECK(dd.family == spec.family);
    GameSpec d = dual_family(spec);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s = Coalition::from_mask(n, m);
      CHECK(simple_value(dd, s) == simple_value(spec, s));
      CHECK(simple_value(d, s) ==
            1 - simple_value(spec, s.complement()));  // v(N) = 1
    }
  }
}

TEST_CASE("cost_value is monotone across winning coalitions") {
  std::mt19937_64 rng(13013);
  int done = 0;
  while (done < 30) {
    Family fam = static_cast<Family>(rng() % 4);
    Graph g = random_graph(rng, 6, false, is_vertex_family(fam));
    std::vector<ExtRational> costs;
    int players = is_vertex_family(fam) ? g.vertex_count - 2 : g.edge_count();
    for (int i = 0; i < players; ++i) costs.push_back(random_rational01(rng));
    GameSpec spec;
    try {
      spec = GameSpec::make(fam, g, costs, q(2));
    } catch (const GameError&) {
      continue;
    }
    int n = spec.player_count();
    if (n > 8) continue;
    ++done;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Coalition s = Coalition::from_mask(n, m);
      if (simple_value(spec, s) != 1) continue;
      ExtRational vs = cost_value(spec, s);
      for (int i = 0; i < n; ++i) {
        if (s.contains(i)) continue;
        Coalition t = s;
        t.add(i);
        CHECK(vs <= cost_value(spec, t));
      }
    }
  }
}

// Compares the OpenMP coalition-table kernel against the serial reference.
// Usage: bench_enumerate [players] [repeats]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pathgames/oracle.hpp"

using namespace pathgames;

namespace {

// Ladder of parallel pairs in series: 2k edges, min cut 2, lots of paths.
GameSpec ladder_game(int rungs) {
  Graph g;
  g.directed = false;
  g.vertex_count = rungs + 1;
  g.source = 0;
  g.sink = rungs;
  for (int i = 0; i < rungs; ++i) {
    g.edges.push_back({i, i + 1});
    g.edges.push_back({i, i + 1});
  }
  std::vector<ExtRational> costs;
  for (int e = 0; e < g.edge_count(); ++e)
    costs.push_back(ExtRational(e % 3, 7));
  return GameSpec::make(Family::Epcg, std::move(g), std::move(costs),
                        ExtRational(5));
}

template <typename F>
double time_ms(F&& f, int repeats) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeats;
}

}  // namespace

int main(int argc, char** argv) {
  int players = argc > 1 ? std::atoi(argv[1]) : 14;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (players < 2 || players % 2 || players > kDefaultPlayerCap) {
    std::cerr << "players must be even, 2.." << kDefaultPlayerCap << "\n";
    return 1;
  }
  GameSpec spec = ladder_game(players / 2);

  ValueTable parallel = enumerate_values(spec);
  ValueTable serial = enumerate_values_serial(spec);
  if (parallel.values != serial.values) {
    std::cerr << "kernel mismatch\n";
    return 1;
  }

  double tp = time_ms([&] { enumerate_values(spec); }, repeats);
  double ts = time_ms([&] { enumerate_values_serial(spec); }, repeats);
  std::cout << "players " << players << ", " << parallel.size()
            << " coalitions\n"
            << "parallel " << tp << " ms\n"
            << "serial   " << ts << " ms\n"
            << "speedup  " << ts / tp << "x\n";
  return 0;
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathgames/graph.hpp"

namespace pathgames {

enum class Family { Epcg, Vpcg, EpcgDual, VpcgDual };

std::string family_name(Family f);
bool is_dual(Family f);
bool is_vertex_family(Family f);
Family dual_of(Family f);

/// Subset of player indices, bitset semantics. Player count is bounded by 64,
/// plenty for every oracle-checkable instance.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(int n) : n_(n) {
    if (n < 0 || n > 64) throw std::invalid_argument("player count 0..64");
  }
  static Coalition from_mask(int n, std::uint64_t mask) {
    Coalition c(n);
    c.bits_ = mask;
    return c;
  }
  static Coalition full(int n) {
    Coalition c(n);
    c.bits_ = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return c;
  }

  int player_count() const { return n_; }
  std::uint64_t mask() const { return bits_; }
  bool contains(int i) const { return (bits_ >> i) & 1; }
  void add(int i) { bits_ |= std::uint64_t{1} << i; }
  void remove(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }

  Coalition unite(const Coalition& o) const {
    return from_mask(n_, bits_ | o.bits_);
  }
  Coalition intersect(const Coalition& o) const {
    return from_mask(n_, bits_ & o.bits_);
  }
  Coalition complement() const {
    return from_mask(n_, full(n_).mask() & ~bits_);
  }
  bool subset_of(const Coalition& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  bool operator==(const Coalition&) const = default;
  auto operator<=>(const Coalition&) const = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

struct GameError : std::runtime_error {
  enum class Code {
    VpcgDirectEdge,
    NoWinningCoalition,
    NegativeCost,
    NegativeReward,
    NegativeGrandValue,
    InfiniteCost,
    TooManyPlayers,
  };
  Code code;
  GameError(Code c, const std::string& what)
      : std::runtime_error(what), code(c) {}
};

/// One of the four path coalitional game families with its cost-based
/// generalization data. Players are edge ids (edge families) or internal
/// vertex ids (vertex families), in ascending id order.
struct GameSpec {
  Family family = Family::Epcg;
  Graph graph;
  std::vector<ExtRational> costs;  // per player, finite, >= 0
  ExtRational reward = ExtRational(1);
  std::vector<int> players;        // edge ids or internal vertex ids

  int player_count() const { return static_cast<int>(players.size()); }

  /// Validates the simple-game axioms (a winning coalition exists, VPCG
  /// families reject a direct (s,t) edge) and grand_value >= 0.
  static GameSpec make(Family family, Graph graph,
                       std::vector<ExtRational> costs, ExtRational reward);

  /// Costless unit-reward game.
  static GameSpec make_simple(Family family, Graph graph);
};

/// {0,1} value of the underlying simple game.
int simple_value(const GameSpec& spec, const Coalition& s);

/// v^c(S): 0 for losing S, otherwise reward minus the cheapest winning
/// sub-coalition's total cost. May be negative for winning sub-coalitions.
ExtRational cost_value(const GameSpec& spec, const Coalition& s);

struct WinningCoalition {
  Coalition coalition;
  ExtRational weight;
};

/// Minimum-weight winning coalition under per-player weights: shortest path,
/// shortest vertex path, min edge cut or min vertex cut depending on family.
WinningCoalition min_weight_winning_coalition(const GameSpec& spec,
                                              const std::vector<ExtRational>& w);

ExtRational grand_value(const GameSpec& spec);

GameSpec dual_family(const GameSpec& spec);

}  // namespace pathgames

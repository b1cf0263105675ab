#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathgames/game.hpp"
#include "pathgames/solve_types.hpp"

namespace pathgames {

/// File-format failure; kind is a stable machine-readable tag, what() adds
/// position or field context.
struct IoError : std::runtime_error {
  std::string kind;
  IoError(std::string k, const std::string& what)
      : std::runtime_error(what), kind(std::move(k)) {}
};

/// A parsed game plus the naming needed to talk to the outside world:
/// players are reported as "e<id>" for edge families and by vertex name for
/// vertex families.
struct LoadedGame {
  GameSpec spec;
  std::vector<std::string> vertex_names;  // vertex id -> name

  std::string player_label(int player) const;
  std::optional<int> player_index(const std::string& label) const;
  std::string vertex_label(int vertex) const { return vertex_names[vertex]; }
};

LoadedGame parse_game_file(const std::string& text);
LoadedGame load_game_file(const std::string& path);

/// {"payoff": {player-label: rational-string}}; absent players default to 0.
PayoffVector parse_payoff_file(const std::string& text, const LoadedGame& game);
std::string payoff_to_json(const LoadedGame& game, const PayoffVector& x);

/// {label: rational-string} over edges (edge mode) or internal vertices
/// (vertex mode); absent entries default to 1. Labels as in LoadedGame.
std::vector<ExtRational> parse_probs_file(const std::string& text,
                                          const LoadedGame& game,
                                          bool edge_mode);

}  // namespace pathgames

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathgames/json_io.hpp"
#include "pathgames/nucleolus.hpp"
#include "pathgames/oracle.hpp"
#include "pathgames/solve.hpp"

using json = nlohmann::ordered_json;
using namespace pathgames;

namespace {

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string witness_label(const LoadedGame& game, int id) {
  if (is_vertex_family(game.spec.family)) return game.vertex_label(id);
  return "e" + std::to_string(id);
}

json payoff_json(const LoadedGame& game, const PayoffVector& x) {
  json out = json::object();
  for (int i = 0; i < game.spec.player_count(); ++i)
    out[game.player_label(i)] = x[i].str();
  return out;
}

json coalition_json(const LoadedGame& game, const Coalition& s) {
  json out = json::array();
  for (int i : s.members()) out.push_back(game.player_label(i));
  return out;
}

json leastcore_json(const LoadedGame& game, const LeastCoreResult& r,
                    const std::string& method) {
  json out;
  out["method"] = method;
  out["epsilon1"] = r.epsilon1.str();
  out["min_excess"] = (-r.epsilon1).str();
  out["payoff"] = payoff_json(game, r.payoff);
  json tight = json::array();
  for (const auto& s : r.tight_coalitions)
    tight.push_back(coalition_json(game, s));
  out["tight_coalitions"] = std::move(tight);
  out["iterations"] = r.iterations;
  return out;
}

Coalition parse_coalition(const LoadedGame& game, const std::string& list) {
  Coalition s(game.spec.player_count());
  std::string token;
  std::istringstream in(list);
  auto take = [&](const std::string& label) {
    if (label.empty()) return;
    auto i = game.player_index(label);
    if (!i) throw IoError("unknown-player", "unknown player \"" + label + "\"");
    s.add(*i);
  };
  while (std::getline(in, token, ',')) {
    std::istringstream parts(token);
    std::string label;
    while (parts >> label) take(label);
  }
  return s;
}

const char* trace_case_name(NucleolusTraceEntry::Case c) {
  switch (c) {
    case NucleolusTraceEntry::Case::Base: return "base";
    case NucleolusTraceEntry::Case::SeriesUnequal: return "series-unequal";
    case NucleolusTraceEntry::Case::SeriesEqual: return "series-equal";
    case NucleolusTraceEntry::Case::Parallel: return "parallel";
  }
  return "?";
}

bool costless_unit_reward(const GameSpec& spec) {
  if (!(spec.reward == ExtRational(1))) return false;
  for (const auto& c : spec.costs)
    if (!c.is_zero()) return false;
  return true;
}

void require_sp_nucleolus_scope(const GameSpec& spec) {
  if (spec.family != Family::Epcg || spec.graph.directed ||
      !costless_unit_reward(spec))
    throw IoError("unsupported",
                  "nucleolus --method sp needs an undirected costless EPCG");
}

json run_selftest(const LoadedGame& game) {
  const GameSpec& spec = game.spec;
  json checks = json::array();
  auto record = [&](const std::string& name, const std::string& status) {
    checks.push_back(json{{"name", name}, {"status", status}});
  };

  if (spec.player_count() > kDefaultPlayerCap) {
    record("oracle-table", "skipped");
    return checks;
  }
  ValueTable table = enumerate_values(spec);
  LeastCoreResult brute = brute_force_least_core(table);
  LeastCoreResult cg = least_core(spec);
  record("leastcore-cg-vs-brute",
         cg.epsilon1 == brute.epsilon1 ? "agree" : "disagree");

  CoreResult core = core_nonempty(spec);
  record("core-vs-brute", core.nonempty == !brute_force_core_empty(table)
                              ? "agree"
                              : "disagree");

  if (!is_dual(spec.family) && costless_unit_reward(spec)) {
    LeastCoreResult closed = combinatorial_least_core(spec);
    record("leastcore-closedform-vs-cg",
           closed.epsilon1 == cg.epsilon1 ? "agree" : "disagree");
  }

  if (spec.family == Family::Epcg && !spec.graph.directed &&
      costless_unit_reward(spec)) {
    auto sp = nucleolus_sp(spec.graph);
    if (std::holds_alternative<NotSeriesParallel>(sp)) {
      record("nucleolus-sp-vs-brute", "skipped");
    } else {
      PayoffVector ref = brute_force_nucleolus(table);
      const auto& got = std::get<NucleolusResult>(sp).payoff;
      record("nucleolus-sp-vs-brute", got == ref ? "agree" : "disagree");
    }
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for s-t path coalitional games"};
  app.require_subcommand(1);

  std::string game_path, payoff_path, probs_path, epsilon_str, coalition_str;
  std::string lc_method = "cg", nuc_method = "sp", mode_str;
  bool timings = false;
  app.add_flag("--timings", timings, "include wall-clock timings");

  auto add_game_arg = [&](CLI::App* sub) {
    sub->add_option("file", game_path, "game file (JSON)")->required();
  };
  CLI::App* core = app.add_subcommand("core", "core non-emptiness test");
  add_game_arg(core);
  CLI::App* leastcore = app.add_subcommand("leastcore", "least core");
  add_game_arg(leastcore);
  leastcore->add_option("--method", lc_method, "cg|combinatorial|brute")
      ->check(CLI::IsMember({"cg", "combinatorial", "brute"}));
  CLI::App* verify = app.add_subcommand("verify", "epsilon-core membership");
  add_game_arg(verify);
  verify->add_option("--payoff", payoff_path, "payoff file")->required();
  verify->add_option("--epsilon", epsilon_str, "epsilon (p/q)")->required();
  CLI::App* nucleolus = app.add_subcommand("nucleolus", "nucleolus");
  add_game_arg(nucleolus);
  nucleolus->add_option("--method", nuc_method, "sp|brute")
      ->check(CLI::IsMember({"sp", "brute"}));
  CLI::App* maxmin = app.add_subcommand("maxmin", "maxmin interception");
  add_game_arg(maxmin);
  maxmin->add_option("--mode", mode_str, "edge|vertex")
      ->required()
      ->check(CLI::IsMember({"edge", "vertex"}));
  maxmin->add_option("--probs", probs_path, "detection probabilities file");
  CLI::App* value = app.add_subcommand("value", "coalition value");
  add_game_arg(value);
  value->add_option("--coalition", coalition_str, "player labels")->required();
  CLI::App* selftest = app.add_subcommand("selftest", "cross-check solvers");
  add_game_arg(selftest);

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();

  auto started = std::chrono::steady_clock::now();
  json doc;
  int exit_code = 0;
  try {
    std::string bytes = read_file(game_path);
    LoadedGame game = parse_game_file(bytes);
    doc["command"] = sub->get_name();
    doc["input_digest"] = fnv1a_digest(bytes);
    json result;

    if (sub == core) {
      CoreResult r = core_nonempty(game.spec);
      result["nonempty"] = r.nonempty;
      result["witness"] =
          r.witness ? json(witness_label(game, *r.witness)) : json(nullptr);
    } else if (sub == leastcore) {
      LeastCoreResult r;
      if (lc_method == "cg") {
        r = least_core(game.spec);
      } else if (lc_method == "combinatorial") {
        r = combinatorial_least_core(game.spec);
      } else {
        r = brute_force_least_core(enumerate_values(game.spec));
      }
      result = leastcore_json(game, r, lc_method);
    } else if (sub == verify) {
      PayoffVector x = parse_payoff_file(read_file(payoff_path), game);
      ExtRational eps = ExtRational::parse(epsilon_str);
      EpsilonCoreStatus st = in_epsilon_core(game.spec, x, eps);
      result["epsilon"] = eps.str();
      result["status"] = st == EpsilonCoreStatus::Member      ? "member"
                         : st == EpsilonCoreStatus::NotMember ? "not-member"
                                                              : "not-efficient";
    } else if (sub == nucleolus) {
      result["method"] = nuc_method;
      if (nuc_method == "sp") {
        require_sp_nucleolus_scope(game.spec);
        auto r = nucleolus_sp(game.spec.graph);
        if (std::holds_alternative<NotSeriesParallel>(r))
          throw IoError("not-series-parallel",
                        "graph is not series-parallel; use --method brute");
        const auto& res = std::get<NucleolusResult>(r);
        result["payoff"] = payoff_json(game, res.payoff);
        json trace = json::array();
        for (const auto& t : res.trace) {
          json e;
          e["case"] = trace_case_name(t.taken);
          e["cut_left"] = t.cut_left;
          e["cut_right"] = t.cut_right;
          if (t.taken == NucleolusTraceEntry::Case::SeriesEqual ||
              t.taken == NucleolusTraceEntry::Case::Parallel)
            e["alpha"] = t.alpha.str();
          if (t.taken == NucleolusTraceEntry::Case::SeriesEqual) {
            e["min_left"] = t.min_left.str();
            e["min_right"] = t.min_right.str();
          }
          trace.push_back(std::move(e));
        }
        result["trace"] = std::move(trace);
      } else {
        PayoffVector x = brute_force_nucleolus(enumerate_values(game.spec));
        result["payoff"] = payoff_json(game, x);
      }
    } else if (sub == maxmin) {
      bool edge_mode = mode_str == "edge";
      std::vector<ExtRational> p;
      if (probs_path.empty()) {
        int slots = edge_mode ? game.spec.graph.edge_count()
                              : game.spec.graph.vertex_count;
        p.assign(slots, ExtRational(1));
      } else {
        p = parse_probs_file(read_file(probs_path), game, edge_mode);
      }
      MaxminResult r = maxmin_intercept(
          game.spec.graph,
          edge_mode ? InterceptMode::Edge : InterceptMode::Vertex, p);
      result["mode"] = mode_str;
      result["value"] = r.value.str();
      json strat = json::object();
      for (int i = 0; i < static_cast<int>(r.strategy.size()); ++i) {
        if (!edge_mode &&
            (i == game.spec.graph.source || i == game.spec.graph.sink))
          continue;
        std::string label =
            edge_mode ? "e" + std::to_string(i) : game.vertex_label(i);
        strat[label] = r.strategy[i].str();
      }
      result["strategy"] = std::move(strat);
      json support = json::array();
      for (int i : r.support)
        support.push_back(edge_mode ? "e" + std::to_string(i)
                                    : game.vertex_label(i));
      result["support"] = std::move(support);
    } else if (sub == value) {
      Coalition s = parse_coalition(game, coalition_str);
      result["coalition"] = coalition_json(game, s);
      result["simple_value"] = simple_value(game.spec, s);
      result["cost_value"] = cost_value(game.spec, s).str();
    } else {  // selftest
      json checks = run_selftest(game);
      bool ok = true;
      for (const auto& c : checks)
        if (c["status"] == "disagree") ok = false;
      result["checks"] = std::move(checks);
      result["agreement"] = ok;
      if (!ok) exit_code = 2;
    }
    doc["result"] = std::move(result);
  } catch (const IoError& e) {
    doc = json{{"error", {{"kind", e.kind}, {"message", e.what()}}}};
    exit_code = 1;
  } catch (const GameError& e) {
    std::string kind = "game";
    if (e.code == GameError::Code::VpcgDirectEdge) kind = "vpcg-direct-edge";
    if (e.code == GameError::Code::NegativeCost) kind = "negative-cost";
    if (e.code == GameError::Code::NegativeGrandValue)
      kind = "negative-grand-value";
    doc = json{{"error", {{"kind", kind}, {"message", e.what()}}}};
    exit_code = 1;
  } catch (const std::exception& e) {
    doc = json{{"error", {{"kind", "invalid"}, {"message", e.what()}}}};
    exit_code = 1;
  }

  if (timings) {
    auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - started);
    doc["timings"] = json{{"total_us", elapsed.count()}};
  }
  std::cout << doc.dump(2) << "\n";
  return exit_code;
}

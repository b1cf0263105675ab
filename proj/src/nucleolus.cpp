#include "pathgames/nucleolus.hpp"

#include <cassert>
#include <stdexcept>

namespace pathgames {

namespace {

struct SubResult {
  std::vector<std::pair<int, Rat>> payoff;  // (edge id, positive payoff)
  int cut = 0;                              // min cut cardinality
  Rat min_positive;                         // smallest entry of payoff
};

void scale(SubResult& r, const Rat& alpha) {
  for (auto& [e, v] : r.payoff) v *= alpha;
  r.min_positive *= alpha;
}

void append(SubResult& into, SubResult&& from) {
  into.payoff.insert(into.payoff.end(),
                     std::make_move_iterator(from.payoff.begin()),
                     std::make_move_iterator(from.payoff.end()));
}

SubResult recurse(const SPTree& node, std::vector<NucleolusTraceEntry>& trace) {
  if (node.kind == SPTree::Kind::Leaf) {
    NucleolusTraceEntry e;
    e.taken = NucleolusTraceEntry::Case::Base;
    e.cut_left = e.cut_right = 1;
    trace.push_back(e);
    return {{{node.edge, Rat(1)}}, 1, Rat(1)};
  }

  SubResult l = recurse(*node.left, trace);
  SubResult r = recurse(*node.right, trace);
  assert(!l.payoff.empty() && !r.payoff.empty());

  NucleolusTraceEntry e;
  e.cut_left = l.cut;
  e.cut_right = r.cut;

  if (node.kind == SPTree::Kind::Series) {
    if (l.cut != r.cut) {
      // All weight goes to the side that is harder to cut around, i.e. the
      // one realizing the smaller min cut; the other side gets zero.
      e.taken = NucleolusTraceEntry::Case::SeriesUnequal;
      trace.push_back(e);
      SubResult out = l.cut < r.cut ? std::move(l) : std::move(r);
      out.cut = std::min(e.cut_left, e.cut_right);
      return out;
    }
    e.taken = NucleolusTraceEntry::Case::SeriesEqual;
    e.min_left = ExtRational(l.min_positive);
    e.min_right = ExtRational(r.min_positive);
    Rat alpha = r.min_positive / (l.min_positive + r.min_positive);
    e.alpha = ExtRational(alpha);
    trace.push_back(e);
    scale(l, alpha);
    scale(r, 1 - alpha);
    Rat mn = std::min(l.min_positive, r.min_positive);
    SubResult out = std::move(l);
    append(out, std::move(r));
    out.cut = e.cut_left;
    out.min_positive = mn;
    return out;
  }

  // Parallel: both sides must be cut; weights split by cut cardinality.
  e.taken = NucleolusTraceEntry::Case::Parallel;
  Rat alpha = Rat(l.cut) / Rat(l.cut + r.cut);
  e.alpha = ExtRational(alpha);
  trace.push_back(e);
  scale(l, alpha);
  scale(r, 1 - alpha);
  Rat mn = std::min(l.min_positive, r.min_positive);
  SubResult out = std::move(l);
  append(out, std::move(r));
  out.cut = e.cut_left + e.cut_right;
  out.min_positive = mn;
  return out;
}

}  // namespace

std::variant<NucleolusResult, NotSeriesParallel> nucleolus_sp(const Graph& g) {
  SPDecomposeResult dec = sp_decompose(g);
  if (auto* fail = std::get_if<NotSeriesParallel>(&dec))
    return std::move(*fail);
  const SPTree& tree = *std::get<std::unique_ptr<SPTree>>(dec);

  NucleolusResult res;
  res.payoff.assign(g.edge_count(), ExtRational(0));
  SubResult top = recurse(tree, res.trace);
  if (top.payoff.empty() || !(top.min_positive > 0))
    throw std::logic_error("nucleolus recursion lost its minimum payoff");
  for (const auto& [edge, v] : top.payoff) res.payoff[edge] = ExtRational(v);
  return res;
}

std::vector<bool> min_cut_membership(const Graph& g) {
  g.validate();
  int m = g.edge_count();
  std::vector<ExtRational> unit(m, ExtRational(1));
  ExtRational c = min_edge_cut(g, unit).weight;
  std::vector<bool> flag(m, false);
  if (c.is_zero() || m == 0) return flag;

  // Perturbing a single weight by less than 1/|E| cannot change which cuts
  // are minimum-cardinality, so the weighted min cut drops iff e is on one.
  ExtRational lowered = ExtRational(1) - ExtRational(1, 2 * m);
  for (int e = 0; e < m; ++e) {
    std::vector<ExtRational> w = unit;
    w[e] = lowered;
    flag[e] = min_edge_cut(g, w).weight < c;
  }
  return flag;
}

}  // namespace pathgames

#include "wkr/cover.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace wkr {

VertexOrder VertexOrder::from_sequence(std::vector<VertexId> order) {
  VertexOrder o;
  o.rank_.assign(order.size(), kNoRank);
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    if (v >= order.size() || o.rank_[v] != kNoRank)
      throw std::invalid_argument("vertex order is not a permutation");
    o.rank_[v] = static_cast<Rank>(i);
  }
  o.order_ = std::move(order);
  return o;
}

namespace {

// Position of every vertex in the tie-break sequence.
std::vector<std::size_t> tie_positions(std::size_t n, const TieBreak& tb) {
  std::vector<std::size_t> pos(n);
  if (std::holds_alternative<tie_break::AscendingId>(tb)) {
    std::iota(pos.begin(), pos.end(), std::size_t{0});
  } else if (std::holds_alternative<tie_break::DescendingId>(tb)) {
    for (std::size_t v = 0; v < n; ++v) pos[v] = n - 1 - v;
  } else {
    const auto& seq = std::get<tie_break::Explicit>(tb).sequence;
    // Validates the permutation.
    VertexOrder check = VertexOrder::from_sequence(seq);
    if (seq.size() != n) throw std::invalid_argument("explicit order size differs from vertex count");
    for (std::size_t v = 0; v < n; ++v) pos[v] = check.rank(static_cast<VertexId>(v));
  }
  return pos;
}

}  // namespace

VertexOrder degree_descending_order(const WeightedGraph& g, const TieBreak& tb) {
  const std::size_t n = g.vertex_count();
  const auto pos = tie_positions(n, tb);
  std::vector<VertexId> by_tie(n);
  for (std::size_t i = 0; i < n; ++i) by_tie[pos[i]] = static_cast<VertexId>(i);

  // Stable counting sort by degree, largest first.
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
  std::vector<std::size_t> start(max_degree + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++start[max_degree - g.degree(v) + 1];
  for (std::size_t d = 1; d < start.size(); ++d) start[d] += start[d - 1];
  std::vector<VertexId> order(n);
  for (VertexId v : by_tie) order[start[max_degree - g.degree(v)]++] = v;
  return VertexOrder::from_sequence(std::move(order));
}

CoverSet CoverSet::from_members(std::size_t vertex_count, std::vector<VertexId> members) {
  CoverSet c;
  c.membership.assign(vertex_count, false);
  for (VertexId v : members) {
    if (v >= vertex_count) throw std::out_of_range("cover member out of range");
    if (c.membership[v]) throw std::invalid_argument("duplicate cover member");
    c.membership[v] = true;
  }
  c.members = std::move(members);
  return c;
}

CoverSet CoverSet::all(std::size_t vertex_count) {
  std::vector<VertexId> members(vertex_count);
  std::iota(members.begin(), members.end(), VertexId{0});
  return from_members(vertex_count, std::move(members));
}

namespace {

// `node` is sorted by recorded degree (non-increasing) and `end[d]` is one past
// the last position whose recorded degree is >= d.
[[maybe_unused]] bool buckets_consistent(const std::vector<VertexId>& node,
                                         const std::vector<std::size_t>& reversal,
                                         const std::vector<std::size_t>& degree,
                                         const std::vector<std::size_t>& end) {
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (reversal[node[i]] != i) return false;
    if (i > 0 && degree[node[i - 1]] < degree[node[i]]) return false;
  }
  for (std::size_t d = 0; d < end.size(); ++d) {
    std::size_t count = 0;
    for (VertexId v : node) count += degree[v] >= d ? 1 : 0;
    if (end[d] != count) return false;
  }
  return true;
}

}  // namespace

CoverSet approx_min_cover(const WeightedGraph& g, const TieBreak& tb) {
  const std::size_t n = g.vertex_count();
  CoverSet m;
  m.membership.assign(n, false);
  if (g.edge_count() == 0) return m;

  const VertexOrder sorted = degree_descending_order(g, tb);
  std::vector<VertexId> node(sorted.sequence().begin(), sorted.sequence().end());
  std::vector<std::size_t> degree(n), reversal(n);
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::size_t> end(max_degree + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++end[degree[v]];
  for (std::size_t d = max_degree; d-- > 0;) end[d] += end[d + 1];
  for (std::size_t i = 0; i < n; ++i) reversal[node[i]] = i;

  std::size_t remaining = g.edge_count();
  for (std::size_t i = 0; remaining > 0; ++i) {
    assert(n > 4096 || buckets_consistent(node, reversal, degree, end));
    const VertexId u = node[i];
    const std::size_t selected_degree = degree[u];
    if (selected_degree == 0) continue;
    m.members.push_back(u);
    m.membership[u] = true;
    for (const Arc& arc : g.neighbors(u)) {
      const VertexId v = arc.target;
      if (m.membership[v]) continue;
      const std::size_t d = degree[v];
      const std::size_t last = end[d] - 1;
      const VertexId displaced = node[last];
      node[last] = v;
      node[reversal[v]] = displaced;
      reversal[displaced] = reversal[v];
      reversal[v] = last;
      end[d] = last;
      degree[v] = d - 1;
    }
    remaining -= selected_degree;
  }
  return m;
}

bool is_cover(const WeightedGraph& g, const CoverSet& m) {
  if (m.membership.size() != g.vertex_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return m.contains(e.u) || m.contains(e.v); });
}

bool non_members_have_covered_neighborhoods(const WeightedGraph& g, const CoverSet& m) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (m.contains(u)) continue;
    for (const Arc& a : g.neighbors(u))
      if (!m.contains(a.target)) return false;
  }
  return true;
}

VertexOrder cover_first_order(const VertexOrder& order, const CoverSet& cover) {
  std::vector<VertexId> seq;
  seq.reserve(order.size());
  for (VertexId v : order.sequence())
    if (cover.contains(v)) seq.push_back(v);
  for (VertexId v : order.sequence())
    if (!cover.contains(v)) seq.push_back(v);
  return VertexOrder::from_sequence(std::move(seq));
}

}  // namespace wkr

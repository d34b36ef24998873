#include "wkr/query.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace wkr {

namespace {

void check_ids(std::size_t n, const Query& q) {
  if (q.u >= n || q.v >= n) throw std::out_of_range("query vertex out of range");
}

// Smallest distance among entries in [begin, end) whose interval satisfies c,
// or kNone.
constexpr HopCount kNone = ~HopCount{0};

HopCount best_dist(std::span<const LabelEntry> l, std::size_t begin, std::size_t end, const WeightConstraint& c,
                   std::uint64_t& probes) {
  HopCount best = kNone;
  for (std::size_t a = begin; a < end; ++a) {
    ++probes;
    if (l[a].dist < best && satisfies(l[a].interval, c)) best = l[a].dist;
  }
  return best;
}

// Looks for a common hop whose two entries form a path of at most k edges
// whose merged interval satisfies c. A merged interval satisfies c exactly
// when both halves do, so each side reduces to its shortest admissible entry.
bool merge_labels(std::span<const LabelEntry> lu, std::span<const LabelEntry> lv, const WeightConstraint& c,
                  HopCount k, std::uint64_t& probes) {
  std::size_t i = 0, j = 0;
  while (i < lu.size() && j < lv.size()) {
    const Rank ri = lu[i].hop_rank, rj = lv[j].hop_rank;
    if (ri < rj) {
      ++i;
      continue;
    }
    if (rj < ri) {
      ++j;
      continue;
    }
    std::size_t ie = i, je = j;
    while (ie < lu.size() && lu[ie].hop_rank == ri) ++ie;
    while (je < lv.size() && lv[je].hop_rank == ri) ++je;
    const HopCount du = best_dist(lu, i, ie, c, probes);
    if (du <= k) {
      const HopCount dv = best_dist(lv, j, je, c, probes);
      if (dv <= k - du) return true;
    }
    i = ie;
    j = je;
  }
  return false;
}

// Distinct neighbors of u reachable over at least one edge admitted by c.
std::vector<VertexId> admitted_neighbors(const Adjacency& adj, VertexId u, const WeightConstraint& c) {
  std::vector<VertexId> out;
  for (const Arc& a : adj.arcs(u))
    if (c.admits(a.weight) && (out.empty() || out.back() != a.target)) out.push_back(a.target);
  return out;
}

}  // namespace

QueryResult query_2hop(const LabelIndex& index, const Query& q) {
  if (index.variant() == Variant::Lwkri)
    throw std::invalid_argument("2-hop query needs a WKRI or GWKRI index");
  check_ids(index.vertex_count(), q);
  QueryResult r;
  if (q.u == q.v) {
    r.reachable = true;
    return r;
  }
  r.reachable = merge_labels(index.label(q.u), index.label(q.v), q.c, q.k, r.probe_count);
  return r;
}

QueryResult query_lwkri(const LabelIndex& index, const Query& q) {
  if (index.variant() != Variant::Lwkri) throw std::invalid_argument("cover query needs an LWKRI index");
  check_ids(index.vertex_count(), q);
  QueryResult r;
  if (q.u == q.v) {
    r.reachable = true;
    return r;
  }
  const Adjacency& adj = *index.embedded_adjacency();
  const bool u_in = index.is_hop(q.u), v_in = index.is_hop(q.v);

  // Both arguments are cover vertices here.
  auto covered = [&](VertexId a, VertexId b, HopCount k) {
    if (a == b) return true;
    return merge_labels(index.label(a), index.label(b), q.c, k, r.probe_count);
  };

  if (u_in && v_in) {
    r.reachable = covered(q.u, q.v, q.k);
    return r;
  }
  if (u_in || v_in) {
    if (q.k < 1) return r;
    const VertexId inside = u_in ? q.u : q.v;
    const VertexId outside = u_in ? q.v : q.u;
    for (VertexId x : admitted_neighbors(adj, outside, q.c)) {
      if (covered(inside, x, q.k - 1)) {
        r.reachable = true;
        return r;
      }
    }
    return r;
  }
  // Two non-cover vertices are never adjacent in a valid cover.
  assert(std::none_of(adj.arcs(q.u).begin(), adj.arcs(q.u).end(),
                      [&](const Arc& a) { return a.target == q.v; }));
  if (q.k < 2) return r;
  const auto ys = admitted_neighbors(adj, q.u, q.c);
  const auto xs = admitted_neighbors(adj, q.v, q.c);
  for (VertexId y : ys)
    for (VertexId x : xs)
      if (covered(y, x, q.k - 2)) {
        r.reachable = true;
        return r;
      }
  return r;
}

QueryResult answer(const LabelIndex& index, const Query& q) {
  return index.variant() == Variant::Lwkri ? query_lwkri(index, q) : query_2hop(index, q);
}

ConstrainedBfs::ConstrainedBfs(const WeightedGraph& g) : g_(g), stamp_(g.vertex_count(), 0) {}

bool ConstrainedBfs::reachable(const Query& q) {
  check_ids(g_.vertex_count(), q);
  if (q.u == q.v) return true;
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  const Adjacency& adj = g_.adjacency();
  frontier_.assign(1, q.u);
  stamp_[q.u] = epoch_;
  for (HopCount depth = 0; depth < q.k && !frontier_.empty(); ++depth) {
    next_.clear();
    for (VertexId x : frontier_) {
      for (const Arc& a : adj.arcs(x)) {
        if (stamp_[a.target] == epoch_ || !q.c.admits(a.weight)) continue;
        if (a.target == q.v) return true;
        stamp_[a.target] = epoch_;
        next_.push_back(a.target);
      }
    }
    frontier_.swap(next_);
  }
  return false;
}

std::vector<HopCount> ConstrainedBfs::distances(VertexId source, const WeightConstraint& c) {
  std::vector<HopCount> dist(g_.vertex_count(), kUnreachable);
  if (source >= g_.vertex_count()) throw std::out_of_range("source vertex out of range");
  const Adjacency& adj = g_.adjacency();
  dist[source] = 0;
  frontier_.assign(1, source);
  for (HopCount depth = 1; !frontier_.empty(); ++depth) {
    next_.clear();
    for (VertexId x : frontier_)
      for (const Arc& a : adj.arcs(x))
        if (dist[a.target] == kUnreachable && c.admits(a.weight)) {
          dist[a.target] = depth;
          next_.push_back(a.target);
        }
    frontier_.swap(next_);
  }
  return dist;
}

bool bfs_oracle(const WeightedGraph& g, const Query& q) {
  ConstrainedBfs bfs(g);
  return bfs.reachable(q);
}

BatchResult batch_query(const LabelIndex& index, std::span<const Query> queries) {
  BatchResult out;
  out.answers.resize(queries.size());
  const bool cover_engine = index.variant() == Variant::Lwkri;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const QueryResult r = cover_engine ? query_lwkri(index, queries[i]) : query_2hop(index, queries[i]);
    out.answers[i] = r.reachable;
    out.probes += r.probe_count;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

BatchResult batch_bfs(const WeightedGraph& g, std::span<const Query> queries,
                      std::optional<std::chrono::duration<double>> timeout) {
  BatchResult out;
  out.answers.reserve(queries.size());
  ConstrainedBfs bfs(g);
  const auto start = std::chrono::steady_clock::now();
  for (const Query& q : queries) {
    out.answers.push_back(bfs.reachable(q));
    if (timeout && std::chrono::steady_clock::now() - start > *timeout) {
      out.timed_out = out.answers.size() < queries.size();
      break;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace wkr

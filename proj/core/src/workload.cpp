#include "wkr/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wkr {

namespace {

struct WeightRange {
  Weight lo, hi;
};

WeightRange weight_range(const WeightedGraph& g, const WorkloadSpec& spec) {
  Weight lo = kMaxWeight, hi = 0;
  for (const Edge& e : g.edges()) {
    lo = std::min(lo, e.w);
    hi = std::max(hi, e.w);
  }
  if (g.edge_count() == 0) lo = hi = 0;
  WeightRange r{spec.weight_lo.value_or(lo), spec.weight_hi.value_or(hi)};
  if (r.lo > r.hi) throw std::invalid_argument("empty constraint weight universe");
  return r;
}

// Vertices within k admitted hops of `source` (source excluded).
std::vector<VertexId> ball(const WeightedGraph& g, VertexId source, const WeightConstraint& c, HopCount k,
                           std::vector<std::uint32_t>& stamp, std::uint32_t epoch) {
  std::vector<VertexId> reached, frontier{source}, next;
  stamp[source] = epoch;
  for (HopCount depth = 0; depth < k && !frontier.empty(); ++depth) {
    next.clear();
    for (VertexId x : frontier)
      for (const Arc& a : g.adjacency().arcs(x))
        if (stamp[a.target] != epoch && c.admits(a.weight)) {
          stamp[a.target] = epoch;
          next.push_back(a.target);
          reached.push_back(a.target);
        }
    frontier.swap(next);
  }
  return reached;
}

}  // namespace

Workload generate_workload(const WeightedGraph& g, const WorkloadSpec& spec) {
  if (!(spec.reachable_fraction >= 0.0 && spec.reachable_fraction <= 1.0))
    throw std::invalid_argument("reachable fraction must lie in [0, 1]");
  if (spec.k_min > spec.k_max) throw std::invalid_argument("k range is empty");
  Workload w;
  if (spec.total == 0) return w;
  const std::size_t n = g.vertex_count();
  if (n < 2) {
    w.complete = false;
    return w;
  }

  const auto want_reachable =
      static_cast<std::size_t>(std::llround(static_cast<double>(spec.total) * spec.reachable_fraction));
  const std::size_t want_unreachable = spec.total - want_reachable;
  const WeightRange range = weight_range(g, spec);

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<Weight> weight(range.lo, range.hi);
  std::uniform_int_distribution<HopCount> hops(spec.k_min, spec.k_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  ConstrainedBfs oracle(g);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;

  const std::size_t max_attempts = spec.attempts_per_query * spec.total;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const bool need_r = w.reachable < want_reachable;
    const bool need_u = w.unreachable < want_unreachable;
    if (!need_r && !need_u) break;

    Query q;
    q.u = vertex(rng);
    q.k = hops(rng);
    const double form = unit(rng);
    if (form < spec.bounded_fraction) {
      Weight a = weight(rng), b = weight(rng);
      if (a > b) std::swap(a, b);
      q.c = WeightConstraint::between(a, b);
    } else if (form < spec.bounded_fraction + (1.0 - spec.bounded_fraction) / 2) {
      q.c = WeightConstraint::at_most(weight(rng));
    } else {
      q.c = WeightConstraint::at_least(weight(rng));
    }

    // Alternate target classes while both are short so the file interleaves them.
    const bool aim_reachable = need_r && (!need_u || (attempt % 2 == 0));
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    const auto reached = ball(g, q.u, q.c, q.k, stamp, epoch);
    if (aim_reachable) {
      if (reached.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, reached.size() - 1);
      q.v = reached[pick(rng)];
    } else {
      if (reached.size() + 1 >= n) continue;
      q.v = vertex(rng);
      if (q.v == q.u || stamp[q.v] == epoch) continue;
    }
    const bool truth = oracle.reachable(q);
    if (truth ? !need_r : !need_u) continue;
    (truth ? w.reachable : w.unreachable) += 1;
    w.queries.push_back({q, truth});
  }
  w.complete = w.reachable == want_reachable && w.unreachable == want_unreachable;
  return w;
}

std::int64_t parse_vertex_token(const std::string& tok) {
  std::string_view s(tok);
  if (!s.empty() && (s.front() == 'v' || s.front() == 'V')) s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad vertex id '" + tok + "'");
  return v;
}

namespace {

class IdLookup {
 public:
  explicit IdLookup(const std::vector<std::int64_t>& ids) : has_map_(!ids.empty()) {
    for (std::size_t i = 0; i < ids.size(); ++i) dense_.emplace(ids[i], static_cast<VertexId>(i));
  }
  VertexId operator()(std::int64_t ext) const {
    if (!has_map_) {
      if (ext < 0) throw std::out_of_range("vertex id out of range: " + std::to_string(ext));
      return static_cast<VertexId>(ext);
    }
    auto it = dense_.find(ext);
    if (it == dense_.end()) throw std::out_of_range("unknown vertex id " + std::to_string(ext));
    return it->second;
  }

 private:
  bool has_map_;
  std::unordered_map<std::int64_t, VertexId> dense_;
};

WorkloadQuery parse_line(const std::string& line, const IdLookup& lookup) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  for (std::string t; ss >> t;) toks.push_back(t);
  if (toks.size() != 5 && toks.size() != 6)
    throw std::invalid_argument("expected 'u v ws we k [expected]'");
  WorkloadQuery wq;
  wq.query.u = lookup(parse_vertex_token(toks[0]));
  wq.query.v = lookup(parse_vertex_token(toks[1]));
  wq.query.c = parse_constraint(toks[2], toks[3]);
  long long k = 0;
  auto [ptr, ec] = std::from_chars(toks[4].data(), toks[4].data() + toks[4].size(), k);
  if (ec != std::errc{} || ptr != toks[4].data() + toks[4].size() || k < 0 || k > 0xFFFFFFFELL)
    throw std::invalid_argument("bad step bound '" + toks[4] + "'");
  wq.query.k = static_cast<HopCount>(k);
  if (toks.size() == 6) {
    if (toks[5] != "0" && toks[5] != "1") throw std::invalid_argument("expected answer must be 0 or 1");
    wq.expected = toks[5] == "1";
  }
  return wq;
}

}  // namespace

Query parse_query_line(const std::string& line, const std::vector<std::int64_t>& external_ids) {
  return parse_line(line, IdLookup(external_ids)).query;
}

std::vector<WorkloadQuery> read_queries(std::istream& in, const std::vector<std::int64_t>& external_ids) {
  IdLookup lookup(external_ids);
  std::vector<WorkloadQuery> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_line(line, lookup));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

std::vector<WorkloadQuery> read_queries(std::istream& in, const WeightedGraph* g) {
  static const std::vector<std::int64_t> none;
  return read_queries(in, g ? g->external_ids() : none);
}

void write_queries(const std::vector<WorkloadQuery>& queries, const std::vector<std::int64_t>& external_ids,
                   std::ostream& out) {
  auto ext = [&](VertexId v) {
    return external_ids.empty() ? static_cast<std::int64_t>(v) : external_ids[v];
  };
  for (const auto& wq : queries) {
    const Query& q = wq.query;
    out << ext(q.u) << ' ' << ext(q.v) << ' ' << format_bound_lower(q.c) << ' ' << format_bound_upper(q.c) << ' '
        << q.k;
    if (wq.expected) out << ' ' << (*wq.expected ? 1 : 0);
    out << '\n';
  }
}

}  // namespace wkr

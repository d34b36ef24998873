#include "wkr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <string_view>
#include <unordered_set>

namespace wkr {

Adjacency::Adjacency(std::size_t vertex_count, std::span<const Edge> edges)
    : offsets_(vertex_count + 1, 0), arcs_(2 * edges.size()) {
  for (const Edge& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  std::vector<std::uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    arcs_[fill[e.u]++] = {e.v, e.w};
    arcs_[fill[e.v]++] = {e.u, e.w};
  }
  for (std::size_t u = 0; u < vertex_count; ++u) {
    std::sort(arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
              arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]),
              [](const Arc& a, const Arc& b) {
                return a.target != b.target ? a.target < b.target : a.weight < b.weight;
              });
  }
}

Adjacency::Adjacency(std::vector<std::uint64_t> offsets, std::vector<Arc> arcs)
    : offsets_(std::move(offsets)), arcs_(std::move(arcs)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != arcs_.size() ||
      !std::is_sorted(offsets_.begin(), offsets_.end()))
    throw std::invalid_argument("malformed adjacency offsets");
  for (const Arc& a : arcs_)
    if (a.target >= vertex_count()) throw std::invalid_argument("adjacency target out of range");
}

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::vector<std::int64_t> external_ids)
    : edges_(std::move(edges)), external_ids_(std::move(external_ids)) {
  if (vertex_count >= kNoVertex) throw std::length_error("too many vertices");
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw std::out_of_range("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not stored");
    if (e.w > kMaxWeight) throw ValidationError("edge weight out of range");
  }
  if (!external_ids_.empty()) {
    if (external_ids_.size() != vertex_count)
      throw std::invalid_argument("external id table size mismatch");
    dense_of_.reserve(external_ids_.size());
    for (VertexId u = 0; u < vertex_count; ++u)
      if (!dense_of_.emplace(external_ids_[u], u).second)
        throw std::invalid_argument("duplicate external id");
  }
  adjacency_ = Adjacency(vertex_count, edges_);
}

void WeightedGraph::check(VertexId u) const {
  if (u >= vertex_count())
    throw std::out_of_range("vertex id " + std::to_string(u) + " out of range");
}

std::span<const Arc> WeightedGraph::neighbors(VertexId u) const {
  check(u);
  return adjacency_.arcs(u);
}

std::size_t WeightedGraph::degree(VertexId u) const {
  check(u);
  return adjacency_.degree(u);
}

std::int64_t WeightedGraph::external_id(VertexId u) const {
  check(u);
  return external_ids_.empty() ? static_cast<std::int64_t>(u) : external_ids_[u];
}

VertexId WeightedGraph::dense_id(std::int64_t external) const {
  if (external_ids_.empty()) {
    if (external < 0 || static_cast<std::uint64_t>(external) >= vertex_count())
      throw std::out_of_range("unknown vertex " + std::to_string(external));
    return static_cast<VertexId>(external);
  }
  auto it = dense_of_.find(external);
  if (it == dense_of_.end()) throw std::out_of_range("unknown vertex " + std::to_string(external));
  return it->second;
}

namespace {

template <typename T>
bool parse_int(std::string_view tok, T& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

WeightedGraph load_edge_list(std::istream& in) {
  std::vector<std::int64_t> external;
  std::unordered_map<std::int64_t, VertexId> dense;
  std::vector<Edge> edges;
  std::size_t loops = 0;

  auto intern = [&](std::int64_t ext) {
    auto [it, fresh] = dense.emplace(ext, static_cast<VertexId>(external.size()));
    if (fresh) external.push_back(ext);
    return it->second;
  };

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 3) throw ParseError(lineno, "expected 'u v w', got " + std::to_string(toks.size()) + " tokens");
    std::int64_t a = 0, b = 0, w = 0;
    if (!parse_int(toks[0], a) || !parse_int(toks[1], b) || !parse_int(toks[2], w))
      throw ParseError(lineno, "non-integer token");
    if (w < 0) throw ValidationError("line " + std::to_string(lineno) + ": negative weight");
    if (w > static_cast<std::int64_t>(kMaxWeight))
      throw ValidationError("line " + std::to_string(lineno) + ": weight too large");
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u == v) {
      ++loops;
      continue;
    }
    edges.push_back({u, v, static_cast<Weight>(w)});
  }
  const std::size_t n = external.size();
  WeightedGraph g(n, std::move(edges), std::move(external));
  g.set_dropped_self_loops(loops);
  return g;
}

WeightedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
  for (const Edge& e : g.edges())
    out << g.external_id(e.u) << ' ' << g.external_id(e.v) << ' ' << e.w << '\n';
}

WeightedGraph reassign_weights(const WeightedGraph& g, Weight sigma, std::uint64_t seed) {
  if (sigma < 1) throw std::invalid_argument("sigma must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> draw(0, sigma);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.w = draw(rng);
  WeightedGraph out(g.vertex_count(), std::move(edges), g.external_ids());
  out.set_dropped_self_loops(g.dropped_self_loops());
  return out;
}

WeightedGraph random_graph(std::size_t n, std::size_t m, Weight sigma, std::uint64_t seed) {
  if (sigma < 1) throw std::invalid_argument("sigma must be at least 1");
  const std::uint64_t pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs) throw std::invalid_argument("edge count exceeds n(n-1)/2");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> weight(1, sigma);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (m > pairs / 2) {
    // Dense request: partial shuffle over all pairs.
    std::vector<std::pair<VertexId, VertexId>> all;
    all.reserve(pairs);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
      edges.push_back({all[i].first, all[i].second, weight(rng)});
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    std::uniform_int_distribution<VertexId> vertex(0, static_cast<VertexId>(n - 1));
    while (edges.size() < m) {
      VertexId u = vertex(rng), v = vertex(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second) continue;
      edges.push_back({u, v, weight(rng)});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

GraphStats stats(const WeightedGraph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  s.graph_size = s.vertex_count + s.edge_count;
  s.average_degree =
      s.vertex_count == 0 ? 0.0 : 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.vertex_count);
  std::unordered_set<Weight> weights;
  for (const Edge& e : g.edges()) weights.insert(e.w);
  s.distinct_weight_count = weights.size();
  for (VertexId u = 0; u < s.vertex_count; ++u) s.max_degree = std::max(s.max_degree, g.degree(u));
  return s;
}

}  // namespace wkr

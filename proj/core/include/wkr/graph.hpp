#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wkr/types.hpp"

namespace wkr {

struct Arc {
  VertexId target;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  Weight w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Compressed adjacency. Each vertex's arcs are sorted by (target, weight).
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::size_t vertex_count, std::span<const Edge> edges);
  Adjacency(std::vector<std::uint64_t> offsets, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Arc> arcs(VertexId u) const {
    return {arcs_.data() + offsets_[u], arcs_.data() + offsets_[u + 1]};
  }
  std::size_t degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<Arc>& all_arcs() const { return arcs_; }

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Arc> arcs_;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t graph_size = 0;
  double average_degree = 0.0;
  std::size_t distinct_weight_count = 0;
  std::size_t max_degree = 0;
};

/// Undirected weighted multigraph with dense ids in [0, vertex_count).
/// Immutable once built.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  /// Builds from dense-id edges. Self-loops are rejected (std::invalid_argument).
  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                std::vector<std::int64_t> external_ids = {});

  std::size_t vertex_count() const { return adjacency_.vertex_count(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Adjacency& adjacency() const { return adjacency_; }

  /// Incident arcs of u. Throws std::out_of_range for a bad id.
  std::span<const Arc> neighbors(VertexId u) const;
  std::size_t degree(VertexId u) const;

  /// External id of a dense vertex; the dense id itself when no map is attached.
  std::int64_t external_id(VertexId u) const;
  /// Dense id for an external id. Throws std::out_of_range if unknown.
  VertexId dense_id(std::int64_t external) const;
  bool has_external_ids() const { return !external_ids_.empty(); }
  const std::vector<std::int64_t>& external_ids() const { return external_ids_; }

  /// Number of self-loops the loader discarded.
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }
  void set_dropped_self_loops(std::size_t n) { dropped_self_loops_ = n; }

 private:
  void check(VertexId u) const;

  std::vector<Edge> edges_;
  Adjacency adjacency_;
  std::vector<std::int64_t> external_ids_;
  std::unordered_map<std::int64_t, VertexId> dense_of_;
  std::size_t dropped_self_loops_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "u v w" lines ('#' comments, blank lines ignored, LF or CRLF).
/// External ids are remapped to dense ids in first-appearance order. Parallel
/// edges are kept; self-loops are dropped and counted.
WeightedGraph load_edge_list(std::istream& in);
WeightedGraph load_edge_list_file(const std::string& path);

/// Writes the edge list using external ids, in stored edge order.
void write_edge_list(const WeightedGraph& g, std::ostream& out);

/// Same topology and id map; every weight redrawn uniformly from [0, sigma].
WeightedGraph reassign_weights(const WeightedGraph& g, Weight sigma, std::uint64_t seed);

/// Simple graph with m distinct uniformly sampled edges and weights in [1, sigma].
WeightedGraph random_graph(std::size_t n, std::size_t m, Weight sigma, std::uint64_t seed);

GraphStats stats(const WeightedGraph& g);

}  // namespace wkr

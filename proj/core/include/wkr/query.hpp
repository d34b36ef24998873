#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wkr/constraints.hpp"
#include "wkr/graph.hpp"
#include "wkr/label_index.hpp"

namespace wkr {

/// Is there a path from u to v with at most k edges, every edge weight satisfying c?
struct Query {
  VertexId u = 0;
  VertexId v = 0;
  WeightConstraint c;
  HopCount k = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

struct QueryResult {
  bool reachable = false;
  std::uint64_t probe_count = 0;  // label entry pairs compared
};

/// Hop-sorted merge over L(u) and L(v) (WKRI and GWKRI). u == v is reachable
/// for every c and k. Throws std::invalid_argument for an LWKRI index and
/// std::out_of_range for bad ids.
QueryResult query_2hop(const LabelIndex& index, const Query& q);

/// Cover-labeled query (LWKRI): endpoints outside the cover are replaced by
/// their neighbors with k reduced by one per replaced endpoint.
QueryResult query_lwkri(const LabelIndex& index, const Query& q);

/// Dispatches on the index variant.
QueryResult answer(const LabelIndex& index, const Query& q);

/// Breadth-first search over the edges admitted by c, cut off at depth k.
/// Scratch space is reused across calls on the same object.
class ConstrainedBfs {
 public:
  explicit ConstrainedBfs(const WeightedGraph& g);
  bool reachable(const Query& q);
  /// Hop distance from `source` to every vertex in the c-filtered graph;
  /// unreachable vertices get kUnreachable.
  std::vector<HopCount> distances(VertexId source, const WeightConstraint& c);

  static constexpr HopCount kUnreachable = ~HopCount{0};

 private:
  const WeightedGraph& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> frontier_, next_;
};

/// Ground truth for every index engine.
bool bfs_oracle(const WeightedGraph& g, const Query& q);

struct BatchResult {
  std::vector<bool> answers;
  std::uint64_t probes = 0;
  double seconds = 0.0;
  bool timed_out = false;  // BFS baseline only; answers are partial when set
};

/// Runs every query against the engine matching the index variant, in order.
BatchResult batch_query(const LabelIndex& index, std::span<const Query> queries);

/// BFS baseline over the raw graph. Stops early once `timeout` is exceeded.
BatchResult batch_bfs(const WeightedGraph& g, std::span<const Query> queries,
                      std::optional<std::chrono::duration<double>> timeout = std::nullopt);

}  // namespace wkr

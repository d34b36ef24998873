#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wkr/graph.hpp"
#include "wkr/query.hpp"

namespace wkr {

/// A query plus, for generated workloads, the oracle's answer.
struct WorkloadQuery {
  Query query;
  std::optional<bool> expected;
};

struct WorkloadSpec {
  std::size_t total = 0;
  double reachable_fraction = 0.5;
  /// Share of bounded [a,b] constraints; the rest split evenly into <= b and >= a.
  double bounded_fraction = 0.5;
  /// Constraint bounds are drawn from [weight_lo, weight_hi]; defaults to the
  /// graph's weight range.
  std::optional<Weight> weight_lo, weight_hi;
  HopCount k_min = 1;
  HopCount k_max = 8;
  std::uint64_t seed = 1;
  /// Sampling attempts per requested query before giving up on the mix.
  std::size_t attempts_per_query = 1000;
};

struct Workload {
  std::vector<WorkloadQuery> queries;
  std::size_t reachable = 0;
  std::size_t unreachable = 0;
  bool complete = true;  // false when the requested mix could not be met
};

/// Draws queries until `total * reachable_fraction` oracle-reachable and the
/// rest oracle-unreachable ones are collected. Deterministic per seed.
Workload generate_workload(const WeightedGraph& g, const WorkloadSpec& spec);

/// Query file: one "u v ws we k [expected]" line per query, external ids,
/// "-inf"/"+inf" bounds, '#' comments. A leading 'v' on ids is accepted.
std::vector<WorkloadQuery> read_queries(std::istream& in, const WeightedGraph* g = nullptr);
std::vector<WorkloadQuery> read_queries(std::istream& in, const std::vector<std::int64_t>& external_ids);
void write_queries(const std::vector<WorkloadQuery>& queries, const std::vector<std::int64_t>& external_ids,
                   std::ostream& out);

/// Parses one "u v ws we k" line against an id table (dense ids when empty).
Query parse_query_line(const std::string& line, const std::vector<std::int64_t>& external_ids);
/// Parses an external vertex token ("17" or "v17").
std::int64_t parse_vertex_token(const std::string& tok);

}  // namespace wkr

#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wkr/cover.hpp"
#include "wkr/graph.hpp"
#include "wkr/label_index.hpp"
#include "wkr/query.hpp"

namespace wkr {

struct BuiltIndex {
  LabelIndex index;
  double build_seconds = 0.0;  // includes the cover computation for GWKRI/LWKRI
};

/// Degree order and (for GWKRI/LWKRI) greedy cover, both using `tb`, then the
/// variant's construction.
BuiltIndex build_index(const WeightedGraph& g, Variant variant, const TieBreak& tb = tie_break::AscendingId{},
                       const BuildOptions& options = {});

/// Every ordered pair x every constraint over the extended weight universe
/// (graph weight range widened by one on each side: all bounded [a,b], all
/// <= b, all >= a, and the unconstrained one) x every k in [0, n].
std::vector<WeightConstraint> constraint_universe(const WeightedGraph& g);

struct Mismatch {
  Variant variant;
  Query query;
  bool expected;
  bool got;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares each index against the constrained-BFS oracle on the exhaustive
/// query set. Stops collecting after `max_mismatches`.
VerifyReport verify_exhaustive(const WeightedGraph& g, std::span<const LabelIndex* const> indexes,
                               std::size_t max_mismatches = 16);

/// Compares each index against the oracle on the given queries.
VerifyReport verify_queries(const WeightedGraph& g, std::span<const LabelIndex* const> indexes,
                            std::span<const Query> queries, std::size_t max_mismatches = 16);

struct Counterexample {
  WeightedGraph graph;
  Query query;
  Variant variant;
  bool expected;
  bool got;
};

/// Greedily deletes edges while the rebuilt index still disagrees with the
/// oracle on `query`.
Counterexample minimize_counterexample(const WeightedGraph& g, Variant variant, const TieBreak& tb,
                                       const Query& query);

struct BenchRow {
  std::string dataset;
  std::string variant;  // wkri | gwkri | lwkri | bfs
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t cover_size = 0;
  std::size_t entries = 0;
  std::size_t bytes = 0;
  double build_s = 0.0;
  double query_total_s = 0.0;  // NaN when the BFS baseline timed out
  double query_avg_us = 0.0;
  std::size_t queries = 0;
};

struct BenchConfig {
  std::string dataset = "graph";
  std::vector<Variant> variants{Variant::Wkri, Variant::Gwkri, Variant::Lwkri};
  unsigned repeat = 3;
  bool include_bfs = true;
  std::chrono::duration<double> bfs_timeout{300.0};
  TieBreak tie_break = tie_break::AscendingId{};
};

/// Median-of-repeat build and batch-query timings per variant plus the BFS
/// baseline. Index answers are cross-checked against the BFS answers; a
/// disagreement throws std::runtime_error.
std::vector<BenchRow> run_bench(const WeightedGraph& g, std::span<const Query> queries, const BenchConfig& cfg);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool header = true);
void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace wkr

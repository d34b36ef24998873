#include "wkr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

#include "wkr/index_io.hpp"

namespace wkr {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

}  // namespace

BuiltIndex build_index(const WeightedGraph& g, Variant variant, const TieBreak& tb, const BuildOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const VertexOrder order = degree_descending_order(g, tb);
  BuiltIndex out;
  switch (variant) {
    case Variant::Wkri:
      out.index = build_wkri(g, order, options);
      break;
    case Variant::Gwkri:
      out.index = build_gwkri(g, approx_min_cover(g, tb), order, options);
      break;
    case Variant::Lwkri:
      out.index = build_lwkri(g, approx_min_cover(g, tb), order, options);
      break;
  }
  out.build_seconds = seconds_since(t0);
  return out;
}

std::vector<WeightConstraint> constraint_universe(const WeightedGraph& g) {
  Weight lo = kMaxWeight, hi = 0;
  for (const Edge& e : g.edges()) {
    lo = std::min(lo, e.w);
    hi = std::max(hi, e.w);
  }
  if (g.edge_count() == 0) lo = hi = 0;
  const Weight from = lo > 0 ? lo - 1 : 0;
  const Weight to = hi < kMaxWeight ? hi + 1 : hi;
  std::vector<WeightConstraint> out;
  out.push_back(WeightConstraint::any());
  for (Weight a = from; a <= to; ++a) {
    out.push_back(WeightConstraint::at_least(a));
    out.push_back(WeightConstraint::at_most(a));
    for (Weight b = a; b <= to; ++b) out.push_back(WeightConstraint::between(a, b));
  }
  return out;
}

VerifyReport verify_exhaustive(const WeightedGraph& g, std::span<const LabelIndex* const> indexes,
                               std::size_t max_mismatches) {
  VerifyReport report;
  const auto n = static_cast<VertexId>(g.vertex_count());
  ConstrainedBfs bfs(g);
  for (const WeightConstraint& c : constraint_universe(g)) {
    for (VertexId u = 0; u < n; ++u) {
      const auto dist = bfs.distances(u, c);
      for (VertexId v = 0; v < n; ++v) {
        for (HopCount k = 0; k <= n; ++k) {
          const Query q{u, v, c, k};
          const bool truth = dist[v] <= k;
          for (const LabelIndex* idx : indexes) {
            ++report.checked;
            const bool got = answer(*idx, q).reachable;
            if (got != truth && report.mismatches.size() < max_mismatches)
              report.mismatches.push_back({idx->variant(), q, truth, got});
          }
        }
      }
    }
  }
  return report;
}

VerifyReport verify_queries(const WeightedGraph& g, std::span<const LabelIndex* const> indexes,
                            std::span<const Query> queries, std::size_t max_mismatches) {
  VerifyReport report;
  ConstrainedBfs bfs(g);
  for (const Query& q : queries) {
    const bool truth = bfs.reachable(q);
    for (const LabelIndex* idx : indexes) {
      ++report.checked;
      const bool got = answer(*idx, q).reachable;
      if (got != truth && report.mismatches.size() < max_mismatches)
        report.mismatches.push_back({idx->variant(), q, truth, got});
    }
  }
  return report;
}

Counterexample minimize_counterexample(const WeightedGraph& g, Variant variant, const TieBreak& tb,
                                       const Query& query) {
  auto disagrees = [&](const WeightedGraph& h) {
    const bool truth = bfs_oracle(h, query);
    const bool got = answer(build_index(h, variant, tb).index, query).reachable;
    return truth != got;
  };
  // The tie-break may name vertices by position; keep the vertex set fixed.
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = edges.size(); i-- > 0;) {
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    WeightedGraph h(g.vertex_count(), trial, g.external_ids());
    if (disagrees(h)) edges = std::move(trial);
  }
  WeightedGraph h(g.vertex_count(), std::move(edges), g.external_ids());
  const bool truth = bfs_oracle(h, query);
  const bool got = answer(build_index(h, variant, tb).index, query).reachable;
  return {std::move(h), query, variant, truth, got};
}

std::vector<BenchRow> run_bench(const WeightedGraph& g, std::span<const Query> queries, const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  const unsigned repeat = std::max(1u, cfg.repeat);

  BatchResult baseline;
  if (cfg.include_bfs) {
    std::vector<double> times;
    bool timed_out = false;
    for (unsigned r = 0; r < repeat && !timed_out; ++r) {
      baseline = batch_bfs(g, queries, cfg.bfs_timeout);
      timed_out = baseline.timed_out;
      times.push_back(baseline.seconds);
    }
    BenchRow row;
    row.dataset = cfg.dataset;
    row.variant = "bfs";
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.queries = queries.size();
    row.query_total_s = timed_out ? std::numeric_limits<double>::quiet_NaN() : median(times);
    row.query_avg_us = queries.empty() ? 0.0 : 1e6 * row.query_total_s / static_cast<double>(queries.size());
    rows.push_back(row);
    if (timed_out) baseline.answers.clear();
  }

  for (Variant v : cfg.variants) {
    std::vector<double> build_times, query_times;
    BuiltIndex built;
    for (unsigned r = 0; r < repeat; ++r) {
      built = build_index(g, v, cfg.tie_break);
      build_times.push_back(built.build_seconds);
    }
    BatchResult res;
    for (unsigned r = 0; r < repeat; ++r) {
      res = batch_query(built.index, queries);
      query_times.push_back(res.seconds);
    }
    if (baseline.answers.size() == queries.size() && res.answers != baseline.answers)
      throw std::runtime_error(to_string(v) + " answers disagree with the BFS baseline");
    BenchRow row;
    row.dataset = cfg.dataset;
    row.variant = to_string(v);
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.cover_size = v == Variant::Wkri ? 0 : built.index.hop_count();
    row.entries = built.index.entry_count();
    row.bytes = serialize(built.index).size();
    row.build_s = median(build_times);
    row.query_total_s = median(query_times);
    row.queries = queries.size();
    row.query_avg_us = queries.empty() ? 0.0 : 1e6 * row.query_total_s / static_cast<double>(queries.size());
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool header) {
  if (header)
    out << "dataset,variant,vertices,edges,cover_size,entries,bytes,build_s,query_total_s,query_avg_us\n";
  auto num = [&](double x) -> std::ostream& {
    if (std::isnan(x)) return out << '/';
    return out << x;
  };
  for (const BenchRow& r : rows) {
    out << r.dataset << ',' << r.variant << ',' << r.vertices << ',' << r.edges << ',' << r.cover_size << ','
        << r.entries << ',' << r.bytes << ',';
    num(r.build_s) << ',';
    num(r.query_total_s) << ',';
    num(r.query_avg_us) << '\n';
  }
}

void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << std::left << std::setw(8) << "variant" << std::right << std::setw(10) << "cover" << std::setw(12)
      << "entries" << std::setw(14) << "bytes" << std::setw(12) << "build[s]" << std::setw(12) << "query[s]"
      << std::setw(12) << "avg[us]" << '\n';
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(8) << r.variant << std::right << std::setw(10) << r.cover_size << std::setw(12)
        << r.entries << std::setw(14) << r.bytes << std::setw(12) << std::fixed << std::setprecision(4)
        << r.build_s;
    if (std::isnan(r.query_total_s))
      out << std::setw(12) << "/" << std::setw(12) << "/";
    else
      out << std::setw(12) << r.query_total_s << std::setw(12) << std::setprecision(3) << r.query_avg_us;
    out << std::defaultfloat << '\n';
  }
}

}  // namespace wkr

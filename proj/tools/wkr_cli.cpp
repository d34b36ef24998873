#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wkr/cover.hpp"
#include "wkr/graph.hpp"
#include "wkr/harness.hpp"
#include "wkr/index_io.hpp"
#include "wkr/label_index.hpp"
#include "wkr/query.hpp"
#include "wkr/workload.hpp"

using namespace wkr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Errors that map to exit code 2 (unreadable input, bad arguments).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WeightedGraph read_graph(const std::string& path) {
  try {
    return load_edge_list_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

std::vector<Variant> parse_variants(const std::vector<std::string>& names) {
  std::vector<Variant> out;
  for (const auto& n : names) {
    try {
      out.push_back(parse_variant(n));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

// Order file: one external vertex id per line, a full permutation.
tie_break::Explicit read_order_file(const std::string& path, const WeightedGraph& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open order file '" + path + "'");
  tie_break::Explicit tb;
  std::string tok;
  while (in >> tok) {
    try {
      tb.sequence.push_back(g.dense_id(parse_vertex_token(tok)));
    } catch (const std::exception& e) {
      throw UsageError("order file: " + std::string(e.what()));
    }
  }
  if (tb.sequence.size() != g.vertex_count())
    throw UsageError("order file lists " + std::to_string(tb.sequence.size()) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
  try {
    VertexOrder::from_sequence(tb.sequence);
  } catch (const std::invalid_argument&) {
    throw UsageError("order file repeats a vertex");
  }
  return tb;
}

TieBreak make_tie_break(const std::string& policy, const std::string& order_file, const WeightedGraph& g) {
  if (!order_file.empty()) return read_order_file(order_file, g);
  if (policy == "desc") return tie_break::DescendingId{};
  return tie_break::AscendingId{};
}

std::string format_query(const Query& q, const WeightedGraph& g) {
  std::ostringstream os;
  os << g.external_id(q.u) << ' ' << g.external_id(q.v) << ' ' << format_bound_lower(q.c) << ' '
     << format_bound_upper(q.c) << ' ' << q.k;
  return os.str();
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string input, output, variant = "gwkri", order_file, tie_break = "asc", dump_cover;
  bool prune = false;
  double max_seconds = 0;
};

int cmd_build(const BuildArgs& a) {
  const WeightedGraph g = read_graph(a.input);
  const Variant variant = parse_variants({a.variant}).front();
  const TieBreak tb = make_tie_break(a.tie_break, a.order_file, g);
  BuildOptions opt;
  opt.prune_uncovered_states = a.prune;
  if (a.max_seconds > 0) opt.time_limit = std::chrono::duration<double>(a.max_seconds);

  const BuiltIndex built = build_index(g, variant, tb, opt);
  save_index(built.index, a.output);
  save_id_map(g.external_ids(), id_map_path(a.output));
  if (!a.dump_cover.empty()) {
    auto out = open_out(a.dump_cover);
    for (VertexId v : approx_min_cover(g, tb).members) out << g.external_id(v) << '\n';
  }
  std::cerr << "variant " << to_string(variant) << ": |V|=" << g.vertex_count() << " |E|=" << g.edge_count();
  if (variant != Variant::Wkri) std::cerr << " |M|=" << built.index.hop_count();
  std::cerr << " entries=" << built.index.entry_count() << " build_s=" << built.build_seconds << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- query

struct QueryArgs {
  std::string index, queries;
  std::string inline_query;
};

int cmd_query(const QueryArgs& a) {
  LabelIndex index;
  std::vector<std::int64_t> ids;
  try {
    index = load_index(a.index);
  } catch (const FormatError& e) {
    throw UsageError(a.index + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  try {
    ids = load_id_map(id_map_path(a.index));
  } catch (const std::runtime_error&) {
    // Without a sidecar the ids are the dense ones.
  }

  std::vector<std::string> lines;
  if (!a.inline_query.empty()) {
    lines.push_back(a.inline_query);
  } else {
    std::ifstream in(a.queries);
    if (!in) throw UsageError("cannot open query file '" + a.queries + "'");
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }

  int rc = kExitOk;
  std::size_t answered = 0;
  double seconds = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Query q;
    try {
      q = parse_query_line(lines[i], ids);
      if (q.u >= index.vertex_count() || q.v >= index.vertex_count()) throw std::out_of_range("vertex id out of range");
    } catch (const std::exception& e) {
      std::cout << "error\n";
      std::cerr << "query " << i + 1 << ": " << e.what() << '\n';
      rc = kExitMismatch;
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const bool r = answer(index, q).reachable;
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++answered;
    std::cout << (r ? 1 : 0) << '\n';
  }
  std::cerr << answered << " queries answered in " << seconds << " s\n";
  return rc;
}

// ---------------------------------------------------------------- dump / stats

int cmd_dump(const std::string& index_path, const std::string& prefix) {
  LabelIndex index;
  try {
    index = load_index(index_path);
  } catch (const std::runtime_error& e) {
    throw UsageError(index_path + ": " + e.what());
  }
  std::vector<std::int64_t> ids;
  try {
    ids = load_id_map(id_map_path(index_path));
  } catch (const std::runtime_error&) {
  }
  dump_text(index, ids, std::cout, prefix);
  return kExitOk;
}

int cmd_stats(const std::string& input) {
  const WeightedGraph g = read_graph(input);
  const GraphStats s = stats(g);
  std::cout << "vertices " << s.vertex_count << "\nedges " << s.edge_count << "\ngraph_size " << s.graph_size
            << "\naverage_degree " << s.average_degree << "\nmax_degree " << s.max_degree << "\ndistinct_weights "
            << s.distinct_weight_count << "\ndropped_self_loops " << g.dropped_self_loops() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- generators

int cmd_gen_weights(const std::string& input, Weight sigma, std::uint64_t seed, const std::string& output) {
  const WeightedGraph g = read_graph(input);
  if (sigma < 1) throw UsageError("--sigma must be at least 1");
  auto out = open_out(output);
  write_edge_list(reassign_weights(g, sigma, seed), out);
  return kExitOk;
}

int cmd_random_graph(std::size_t n, std::size_t m, Weight sigma, std::uint64_t seed, const std::string& output) {
  WeightedGraph g;
  try {
    g = random_graph(n, m, sigma, seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto out = open_out(output);
  write_edge_list(g, out);
  return kExitOk;
}

struct WorkloadArgs {
  std::string graph, output;
  WorkloadSpec spec;
  long long weight_lo = -1, weight_hi = -1;
};

int cmd_workload(WorkloadArgs a) {
  const WeightedGraph g = read_graph(a.graph);
  if (a.weight_lo >= 0) a.spec.weight_lo = static_cast<Weight>(a.weight_lo);
  if (a.weight_hi >= 0) a.spec.weight_hi = static_cast<Weight>(a.weight_hi);
  Workload w;
  try {
    w = generate_workload(g, a.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto out = open_out(a.output);
  write_queries(w.queries, g.external_ids(), out);
  if (!w.complete)
    std::cerr << "warning: requested mix not met; wrote " << w.reachable << " reachable and " << w.unreachable
              << " unreachable queries\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string graph, index, tie_break = "asc";
  std::vector<std::string> variants{"wkri", "gwkri", "lwkri"};
  std::size_t samples = 10000, exhaustive_max_n = 12;
  std::uint64_t seed = 1;
  std::size_t random_graphs = 0, max_n = 10, max_m = 20;
  Weight max_sigma = 4;
};

std::vector<Query> sample_queries(const WeightedGraph& g, std::size_t count, std::uint64_t seed) {
  const auto universe = constraint_universe(g);
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> vert(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  std::uniform_int_distribution<HopCount> hops(0, std::min<HopCount>(n, 16));
  std::vector<Query> qs;
  for (std::size_t i = 0; i < count; ++i) qs.push_back({vert(rng), vert(rng), universe[pick(rng)], hops(rng)});
  return qs;
}

VerifyReport check(const WeightedGraph& g, const std::vector<const LabelIndex*>& idx, const VerifyArgs& a) {
  if (g.vertex_count() == 0) return {};
  if (g.vertex_count() <= a.exhaustive_max_n) return verify_exhaustive(g, idx);
  const auto qs = sample_queries(g, a.samples, a.seed);
  return verify_queries(g, idx, qs);
}

void report_mismatch(const WeightedGraph& g, const Mismatch& m) {
  std::cout << "MISMATCH " << to_string(m.variant) << " query " << format_query(m.query, g) << " expected "
            << m.expected << " got " << m.got << '\n';
}

int verify_graph(const WeightedGraph& g, const VerifyArgs& a, const std::string& label) {
  const TieBreak tb = make_tie_break(a.tie_break, "", g);
  std::vector<LabelIndex> built;
  for (Variant v : parse_variants(a.variants)) built.push_back(build_index(g, v, tb).index);
  std::vector<const LabelIndex*> ptrs;
  for (const auto& i : built) ptrs.push_back(&i);
  const VerifyReport rep = check(g, ptrs, a);
  std::size_t redundant = 0;
  for (const auto& i : built) redundant += scan_redundancy(i).violations.size();
  if (rep.ok() && redundant == 0) return kExitOk;

  std::cout << label << ": FAIL\n";
  if (redundant) std::cout << redundant << " redundant label entries\n";
  if (!rep.ok()) {
    report_mismatch(g, rep.mismatches.front());
    const auto& m = rep.mismatches.front();
    const Counterexample ce = minimize_counterexample(g, m.variant, tb, m.query);
    std::cout << "minimized counterexample (" << ce.graph.edge_count() << " edges):\n";
    write_edge_list(ce.graph, std::cout);
    std::cout << "query " << format_query(ce.query, ce.graph) << " expected " << ce.expected << " got " << ce.got
              << '\n';
  }
  return kExitMismatch;
}

int cmd_verify(const VerifyArgs& a) {
  if (a.random_graphs > 0) {
    std::mt19937_64 rng(a.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < a.random_graphs; ++i) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, a.max_n)(rng);
      const std::size_t m = std::uniform_int_distribution<std::size_t>(0, std::min(a.max_m, n * (n - 1) / 2))(rng);
      const Weight sigma = std::uniform_int_distribution<Weight>(1, a.max_sigma)(rng);
      const WeightedGraph g = random_graph(n, m, sigma, rng());
      if (verify_graph(g, a, "random graph " + std::to_string(i)) != kExitOk) {
        ++failures;
        break;
      }
    }
    if (failures) return kExitMismatch;
    std::cout << "PASS " << a.random_graphs << " random graphs\n";
    return kExitOk;
  }

  if (a.graph.empty()) throw UsageError("verify needs --graph or --random");
  const WeightedGraph g = read_graph(a.graph);
  if (!a.index.empty()) {
    LabelIndex idx;
    try {
      idx = load_index(a.index);
    } catch (const std::runtime_error& e) {
      throw UsageError(a.index + ": " + e.what());
    }
    if (idx.vertex_count() != g.vertex_count()) throw UsageError("index and graph disagree on vertex count");
    const VerifyReport rep = check(g, {&idx}, a);
    if (rep.ok()) {
      std::cout << "PASS " << rep.checked << " queries\n";
      return kExitOk;
    }
    std::cout << "FAIL " << rep.mismatches.size() << "+ mismatches\n";
    for (const auto& m : rep.mismatches) report_mismatch(g, m);
    return kExitMismatch;
  }
  const int rc = verify_graph(g, a, a.graph);
  if (rc == kExitOk) std::cout << "PASS\n";
  return rc;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string graph, workload, csv, dataset, tie_break = "asc";
  std::vector<std::string> variants{"wkri", "gwkri", "lwkri"};
  unsigned repeat = 3;
  double bfs_timeout = 300;
  bool no_bfs = false;
};

int cmd_bench(const BenchArgs& a) {
  const WeightedGraph g = read_graph(a.graph);
  std::ifstream in(a.workload);
  if (!in) throw UsageError("cannot open workload '" + a.workload + "'");
  std::vector<Query> qs;
  try {
    for (const auto& wq : read_queries(in, &g)) qs.push_back(wq.query);
  } catch (const ParseError& e) {
    throw UsageError(a.workload + ": " + e.what());
  }
  BenchConfig cfg;
  cfg.dataset = a.dataset.empty() ? a.graph : a.dataset;
  cfg.variants = parse_variants(a.variants);
  cfg.repeat = a.repeat;
  cfg.include_bfs = !a.no_bfs;
  cfg.bfs_timeout = std::chrono::duration<double>(a.bfs_timeout);
  cfg.tie_break = make_tie_break(a.tie_break, "", g);
  const auto rows = run_bench(g, qs, cfg);
  write_bench_table(rows, std::cout);
  if (!a.csv.empty()) {
    if (a.csv == "-") {
      write_bench_csv(rows, std::cout);
    } else {
      auto out = open_out(a.csv);
      write_bench_csv(rows, out);
    }
  }
  return kExitOk;
}

// "-q u v ws we k" arrives as five tokens, and "-inf" would read as a flag;
// fold them into the single value the option expects.
std::vector<std::string> fold_inline_query(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    out.push_back(args[i]);
    if (args[i] != "-q" || i + 1 >= args.size() || args[i + 1].find(' ') != std::string::npos) continue;
    std::string joined;
    for (std::size_t j = 0; j < 5 && i + 1 < args.size() && args[i + 1].rfind("--", 0) != 0; ++j)
      joined += (j ? " " : "") + args[++i];
    out.push_back(joined);
  }
  std::reverse(out.begin(), out.end());  // CLI11 consumes the vector from the back
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-constrained k-step reachability indexes", "wkr"};
  app.require_subcommand(1);
  int rc = kExitOk;

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build an index from an edge list");
  b->add_option("--input,-i", build.input, "Edge list \"u v w\"")->required();
  b->add_option("--output,-o", build.output, "Index file; ids go to <output>.ids")->required();
  b->add_option("--variant", build.variant, "wkri | gwkri | lwkri")->capture_default_str();
  b->add_option("--order-file", build.order_file, "Vertex ids, one per line, used to break degree ties");
  b->add_option("--tie-break", build.tie_break, "asc | desc (ignored with --order-file)")
      ->check(CLI::IsMember({"asc", "desc"}))
      ->capture_default_str();
  b->add_option("--dump-cover", build.dump_cover, "Write the greedy cover, one id per line");
  b->add_flag("--prune-uncovered", build.prune, "LWKRI: prune dominated states at non-cover vertices");
  b->add_option("--max-seconds", build.max_seconds, "Abort the build after this long");
  b->callback([&] { rc = cmd_build(build); });

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Answer queries against an index");
  q->add_option("--index", query.index)->required();
  auto* qf = q->add_option("--queries", query.queries, "File of \"u v ws we k\" lines");
  auto* qi = q->add_option("-q", query.inline_query, "One query: u v ws we k");
  qf->excludes(qi);
  q->callback([&] {
    if (query.queries.empty() && query.inline_query.empty()) throw CLI::RequiredError("--queries or -q");
    rc = cmd_query(query);
  });

  std::string dump_index, dump_prefix = "v";
  auto* d = app.add_subcommand("dump", "Print index labels as text");
  d->add_option("--index", dump_index)->required();
  d->add_option("--prefix", dump_prefix, "Vertex name prefix")->capture_default_str();
  d->callback([&] { rc = cmd_dump(dump_index, dump_prefix); });

  std::string stats_input;
  auto* s = app.add_subcommand("stats", "Graph statistics");
  s->add_option("--input,-i", stats_input)->required();
  s->callback([&] { rc = cmd_stats(stats_input); });

  std::string gw_input, gw_output;
  Weight gw_sigma = 10;
  std::uint64_t gw_seed = 1;
  auto* gw = app.add_subcommand("gen-weights", "Redraw every edge weight uniformly from [0, sigma]");
  gw->add_option("--input,-i", gw_input)->required();
  gw->add_option("--sigma", gw_sigma)->capture_default_str();
  gw->add_option("--seed", gw_seed)->capture_default_str();
  gw->add_option("--output,-o", gw_output)->required();
  gw->callback([&] { rc = cmd_gen_weights(gw_input, gw_sigma, gw_seed, gw_output); });

  std::size_t rg_n = 0, rg_m = 0;
  Weight rg_sigma = 10;
  std::uint64_t rg_seed = 1;
  std::string rg_output;
  auto* rg = app.add_subcommand("random-graph", "Write a uniform random simple graph");
  rg->add_option("-n", rg_n)->required();
  rg->add_option("-m", rg_m)->required();
  rg->add_option("--sigma", rg_sigma)->capture_default_str();
  rg->add_option("--seed", rg_seed)->capture_default_str();
  rg->add_option("--output,-o", rg_output)->required();
  rg->callback([&] { rc = cmd_random_graph(rg_n, rg_m, rg_sigma, rg_seed, rg_output); });

  WorkloadArgs wl;
  auto* w = app.add_subcommand("workload", "Generate an oracle-labelled query workload");
  w->add_option("--graph", wl.graph)->required();
  w->add_option("--output,-o", wl.output)->required();
  w->add_option("--total", wl.spec.total)->required();
  w->add_option("--reachable-fraction", wl.spec.reachable_fraction)->capture_default_str();
  w->add_option("--bounded-fraction", wl.spec.bounded_fraction, "Share of [a,b] constraints")->capture_default_str();
  w->add_option("--weight-lo", wl.weight_lo, "Lowest constraint bound (default: graph minimum)");
  w->add_option("--weight-hi", wl.weight_hi, "Highest constraint bound (default: graph maximum)");
  w->add_option("--k-min", wl.spec.k_min)->capture_default_str();
  w->add_option("--k-max", wl.spec.k_max)->capture_default_str();
  w->add_option("--seed", wl.spec.seed)->capture_default_str();
  w->add_option("--attempts", wl.spec.attempts_per_query, "Sampling attempts per query")->capture_default_str();
  w->callback([&] { rc = cmd_workload(wl); });

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check indexes against the constrained-BFS oracle");
  v->add_option("--graph", ver.graph);
  v->add_option("--index", ver.index, "Check this prebuilt index instead of building");
  v->add_option("--variants", ver.variants)->delimiter(',')->capture_default_str();
  v->add_option("--samples", ver.samples, "Sampled queries for graphs above the exhaustive size")
      ->capture_default_str();
  v->add_option("--exhaustive-max-n", ver.exhaustive_max_n)->capture_default_str();
  v->add_option("--seed", ver.seed)->capture_default_str();
  v->add_option("--tie-break", ver.tie_break)->check(CLI::IsMember({"asc", "desc"}))->capture_default_str();
  v->add_option("--random", ver.random_graphs, "Sweep this many random graphs instead of --graph");
  v->add_option("--max-n", ver.max_n)->capture_default_str();
  v->add_option("--max-m", ver.max_m)->capture_default_str();
  v->add_option("--max-sigma", ver.max_sigma)->capture_default_str();
  v->callback([&] { rc = cmd_verify(ver); });

  BenchArgs bench;
  auto* be = app.add_subcommand("bench", "Time index builds and query batches");
  be->add_option("--graph", bench.graph)->required();
  be->add_option("--workload", bench.workload)->required();
  be->add_option("--variants", bench.variants)->delimiter(',')->capture_default_str();
  be->add_option("--repeat", bench.repeat)->capture_default_str();
  be->add_option("--csv", bench.csv, "CSV output file, '-' for stdout");
  be->add_option("--dataset", bench.dataset, "Dataset name in the CSV (default: graph path)");
  be->add_option("--bfs-timeout", bench.bfs_timeout, "Seconds")->capture_default_str();
  be->add_flag("--no-bfs", bench.no_bfs);
  be->add_option("--tie-break", bench.tie_break)->check(CLI::IsMember({"asc", "desc"}))->capture_default_str();
  be->callback([&] { rc = cmd_bench(bench); });

  try {
    auto args = fold_inline_query(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BuildLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return rc;
}

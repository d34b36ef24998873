#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support.hpp"
#include "wkr/harness.hpp"

using namespace wkr;
using namespace wkr::test;

namespace {

// Multigraph with parallel edges and weight 0 allowed.
WeightedGraph random_multigraph(std::size_t n, std::size_t m, Weight top, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> vert(0, static_cast<VertexId>(n - 1));
  std::uniform_int_distribution<Weight> weight(0, top);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const VertexId u = vert(rng), v = vert(rng);
    if (u != v) edges.push_back({u, v, weight(rng)});
  }
  return WeightedGraph(n, std::move(edges));
}

void expect_equivalent(const WeightedGraph& g, const std::vector<const LabelIndex*>& idx, const std::string& what) {
  const VerifyReport rep = verify_exhaustive(g, idx, 1);
  ASSERT_TRUE(rep.ok()) << what << ": " << to_string(rep.mismatches[0].variant) << " u=" << rep.mismatches[0].query.u
                        << " v=" << rep.mismatches[0].query.v << " k=" << rep.mismatches[0].query.k << " "
                        << rep.mismatches[0].query.c;
  for (const LabelIndex* i : idx) EXPECT_TRUE(scan_redundancy(*i).clean()) << what;
}

}  // namespace

TEST(Equivalence, Fig1Exhaustive) {
  const WeightedGraph g = fig1();
  const auto tb = fig1_tie_break(g);
  const auto w = build_index(g, Variant::Wkri, tb).index;
  const auto gw = build_index(g, Variant::Gwkri, tb).index;
  const auto lw = build_index(g, Variant::Lwkri, tb).index;
  expect_equivalent(g, {&w, &gw, &lw}, "fig1");
}

TEST(Equivalence, SimpleRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const std::size_t m = std::min<std::size_t>(n * (n - 1) / 2, 1 + seed % 20);
    const WeightedGraph g = random_graph(n, m, 1 + seed % 4, seed);
    const auto w = build_index(g, Variant::Wkri).index;
    const auto gw = build_index(g, Variant::Gwkri).index;
    const auto lw = build_index(g, Variant::Lwkri).index;
    expect_equivalent(g, {&w, &gw, &lw}, "seed " + std::to_string(seed));
  }
}

TEST(Equivalence, MultigraphsWithZeroWeights) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 2 + seed % 8;
    const WeightedGraph g = random_multigraph(n, seed % 18, seed % 4, seed * 31);
    const auto w = build_index(g, Variant::Wkri, tie_break::DescendingId{}).index;
    const auto gw = build_index(g, Variant::Gwkri, tie_break::DescendingId{}).index;
    const auto lw = build_index(g, Variant::Lwkri, tie_break::DescendingId{}).index;
    expect_equivalent(g, {&w, &gw, &lw}, "multigraph seed " + std::to_string(seed));
  }
}

TEST(Equivalence, ArbitraryVertexOrders) {
  // Correctness must not depend on the degree heuristic.
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 7;
    const WeightedGraph g = random_graph(n, std::min<std::size_t>(n * (n - 1) / 2, 2 + seed % 15), 3, seed + 1000);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const VertexOrder order = VertexOrder::from_sequence(perm);
    const CoverSet cover = approx_min_cover(g);
    const auto w = build_wkri(g, order);
    const auto gw = build_gwkri(g, cover, order);
    const auto lw = build_lwkri(g, cover, order);
    const auto lw_full = build_lwkri(g, CoverSet::all(n), order);
    expect_equivalent(g, {&w, &gw, &lw, &lw_full}, "order seed " + std::to_string(seed));
  }
}

TEST(Properties, FullCoverLwkriHasWkriLabels) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const WeightedGraph g = random_graph(10, 18, 4, seed);
    const VertexOrder order = degree_descending_order(g);
    const auto w = build_wkri(g, order);
    const auto lw = build_lwkri(g, CoverSet::all(10), order);
    for (VertexId v = 0; v < 10; ++v) {
      const auto a = w.label(v), b = lw.label(v);
      ASSERT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end())) << "seed " << seed << " vertex " << v;
    }
  }
}

TEST(Properties, PruningNonCoverStatesNeverChangesLabels) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const WeightedGraph g = random_graph(12, 24, 4, seed);
    BuildOptions opt;
    opt.prune_uncovered_states = true;
    EXPECT_EQ(build_index(g, Variant::Lwkri, tie_break::AscendingId{}, opt).index,
              build_index(g, Variant::Lwkri).index)
        << "seed " << seed;
  }
}

TEST(Properties, GroupSizeBoundedByIntervalCount) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Weight sigma = 1 + seed % 4;
    const WeightedGraph g = random_graph(30, 80, sigma, seed);
    const LabelIndex idx = build_index(g, Variant::Wkri).index;
    const std::size_t bound = sigma * (sigma + 1) / 2;
    for (VertexId v = 0; v < 30; ++v) {
      const auto l = idx.label(v);
      for (std::size_t i = 0; i < l.size();) {
        std::size_t j = i;
        while (j < l.size() && l[j].hop_rank == l[i].hop_rank) ++j;
        EXPECT_LE(j - i, std::max<std::size_t>(bound, 1));
        i = j;
      }
    }
  }
}

TEST(Properties, SizeOrderingOnFig1) {
  const WeightedGraph g = fig1();
  const auto tb = fig1_tie_break(g);
  EXPECT_EQ(build_index(g, Variant::Wkri, tb).index.entry_count(), 27u);
  EXPECT_EQ(build_index(g, Variant::Gwkri, tb).index.entry_count(), 22u);
  EXPECT_EQ(build_index(g, Variant::Lwkri, tb).index.entry_count(), 9u);
}

TEST(Properties, SampledQueriesOnLargerGraph) {
  const WeightedGraph g = random_graph(400, 800, 10, 21);
  std::vector<LabelIndex> built;
  for (Variant v : {Variant::Wkri, Variant::Gwkri, Variant::Lwkri}) built.push_back(build_index(g, v).index);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<VertexId> vert(0, 399);
  std::uniform_int_distribution<Weight> w(0, 11);
  std::uniform_int_distribution<HopCount> k(0, 12);
  std::vector<Query> qs;
  for (int i = 0; i < 10000; ++i) {
    Weight a = w(rng), b = w(rng);
    if (a > b) std::swap(a, b);
    const int form = i % 3;
    const WeightConstraint c = form == 0   ? WeightConstraint::between(a, b)
                               : form == 1 ? WeightConstraint::at_most(b)
                                           : WeightConstraint::at_least(a);
    qs.push_back({vert(rng), vert(rng), c, k(rng)});
  }
  const std::vector<const LabelIndex*> ptrs{&built[0], &built[1], &built[2]};
  EXPECT_TRUE(verify_queries(g, ptrs, qs).ok());
}

TEST(Build, LimitsAbortWithProgress) {
  const WeightedGraph g = random_graph(300, 600, 10, 4);
  BuildOptions opt;
  opt.entry_limit = 100;
  try {
    build_index(g, Variant::Wkri, tie_break::AscendingId{}, opt);
    FAIL();
  } catch (const BuildLimitExceeded& e) {
    EXPECT_GT(e.entries(), 100u);
    EXPECT_LT(e.hops_done(), 300u);
  }
  opt.entry_limit.reset();
  opt.time_limit = std::chrono::duration<double>(0.0);
  EXPECT_THROW(build_index(g, Variant::Gwkri, tie_break::AscendingId{}, opt), BuildLimitExceeded);
}

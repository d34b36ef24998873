#include <gtest/gtest.h>

#include "support.hpp"
#include "wkr/harness.hpp"
#include "wkr/index_io.hpp"
#include "wkr/label_index.hpp"
#include "wkr/query.hpp"

using namespace wkr;
using namespace wkr::test;

namespace {

struct Fig1 {
  WeightedGraph g = fig1();
  tie_break::Explicit tb = fig1_tie_break(g);
  VertexOrder order = degree_descending_order(g, tb);
  CoverSet cover = approx_min_cover(g, tb);
};

}  // namespace

TEST(Golden, WkriMatchesPublishedTable) {
  Fig1 f;
  const LabelIndex idx = build_wkri(f.g, f.order);
  EXPECT_EQ(dump(idx, f.g), read_file(data_path("fig1_wkri.txt")));
  EXPECT_EQ(idx.entry_count(), 27u);
  EXPECT_TRUE(scan_redundancy(idx).clean());
}

TEST(Golden, GwkriMatchesPublishedTable) {
  Fig1 f;
  const LabelIndex idx = build_gwkri(f.g, f.cover, f.order);
  EXPECT_EQ(dump(idx, f.g), read_file(data_path("fig1_gwkri.txt")));
  EXPECT_EQ(idx.entry_count(), 22u);
  EXPECT_EQ(idx.hop_count(), 3u);
  EXPECT_TRUE(scan_redundancy(idx).clean());
}

TEST(Golden, LwkriMatchesPublishedTable) {
  Fig1 f;
  const LabelIndex idx = build_lwkri(f.g, f.cover, f.order);
  EXPECT_EQ(dump(idx, f.g), read_file(data_path("fig1_lwkri.txt")));
  EXPECT_EQ(idx.entry_count(), 9u);
  EXPECT_TRUE(scan_redundancy(idx).clean());
  for (int v : {2, 5, 6, 7}) EXPECT_FALSE(idx.is_labeled(vx(f.g, v)));
}

TEST(Golden, PruningNonCoverStatesLeavesLabelsUnchanged) {
  Fig1 f;
  BuildOptions opt;
  opt.prune_uncovered_states = true;
  EXPECT_EQ(build_lwkri(f.g, f.cover, f.order, opt), build_lwkri(f.g, f.cover, f.order));
}

TEST(Golden, HopsAreCoverMembersInDegreeOrder) {
  Fig1 f;
  const LabelIndex idx = build_gwkri(f.g, f.cover, f.order);
  ASSERT_EQ(idx.hop_count(), 3u);
  EXPECT_EQ(idx.order().vertex(0), vx(f.g, 3));
  EXPECT_EQ(idx.order().vertex(1), vx(f.g, 4));
  EXPECT_EQ(idx.order().vertex(2), vx(f.g, 1));
}

// Builds L(v2) and L(v7) up to the hop v3 entries, as in the WKRI table, then
// offers candidates discovered while processing later hops.
class TryInsert : public ::testing::Test {
 protected:
  Fig1 f;
  LabelIndex idx{Variant::Wkri, f.order, f.g.vertex_count()};
  Rank r3 = f.order.rank(vx(f.g, 3));
  Rank r4 = f.order.rank(vx(f.g, 4));
  Rank r2 = f.order.rank(vx(f.g, 2));

  void SetUp() override {
    idx.mutable_label(vx(f.g, 3)) = {{r3, WeightInterval::empty(), 0}};
    idx.mutable_label(vx(f.g, 4)) = {{r3, WeightInterval::closed(4, 5), 2},
                                     {r3, WeightInterval::closed(7, 8), 2},
                                     {r4, WeightInterval::empty(), 0}};
    idx.mutable_label(vx(f.g, 2)) = {{r3, WeightInterval::point(4), 1}, {r3, WeightInterval::closed(5, 8), 3}};
    idx.mutable_label(vx(f.g, 7)) = {{r3, WeightInterval::closed(3, 5), 3}};
    idx.mutable_label(vx(f.g, 5)) = {{r3, WeightInterval::point(6), 1}, {r3, WeightInterval::closed(2, 3), 2}};
  }
};

TEST_F(TryInsert, SameHopExampleFromLongerDetour) {
  // v3 -> v1 -> v2 spans [3,5] in 2 steps; (v3,[4,4],1) already dominates it.
  EXPECT_EQ(try_insert(idx, vx(f.g, 2), {r3, WeightInterval::closed(3, 5), 2}), InsertOutcome::RejectedSameHop);
}

TEST_F(TryInsert, CrossHopExampleThroughV3) {
  // v4 -> v5 over v3: (v3,[4,5],2) in L(v4) plus (v3,[6,6],1) in L(v5).
  EXPECT_EQ(try_insert(idx, vx(f.g, 5), {r4, WeightInterval::closed(4, 6), 3}), InsertOutcome::RejectedCrossHop);
}

TEST_F(TryInsert, FirstEntryIntoEmptyLabel) {
  idx.mutable_label(vx(f.g, 6)).clear();
  EXPECT_EQ(try_insert(idx, vx(f.g, 6), {r3, WeightInterval::point(8), 1}), InsertOutcome::Inserted);
}

TEST_F(TryInsert, AcceptsPathNotCoveredByEarlierHop) {
  // v4 -> v2 with [5,5] in one step; via v3 needs [4,8] and 3 steps.
  EXPECT_EQ(try_insert(idx, vx(f.g, 2), {r4, WeightInterval::point(5), 1}), InsertOutcome::Inserted);
  EXPECT_EQ(idx.label(vx(f.g, 2)).back(), (LabelEntry{r4, WeightInterval::point(5), 1}));
}

TEST_F(TryInsert, RejectsPathCoveredByEarlierHop) {
  // v4 -> v2 with [4,5] in 3 steps is matched by v2-v3 [4,4],1 + v3-v4 [4,5],2.
  EXPECT_EQ(try_insert(idx, vx(f.g, 2), {r4, WeightInterval::closed(4, 5), 3}), InsertOutcome::RejectedCrossHop);
}

TEST_F(TryInsert, SameHopDominanceBothWays) {
  EXPECT_EQ(try_insert(idx, vx(f.g, 7), {r4, WeightInterval::closed(3, 7), 3}), InsertOutcome::Inserted);
  EXPECT_EQ(try_insert(idx, vx(f.g, 7), {r4, WeightInterval::closed(3, 7), 3}), InsertOutcome::RejectedSameHop);
  EXPECT_EQ(try_insert(idx, vx(f.g, 7), {r4, WeightInterval::closed(3, 8), 4}), InsertOutcome::RejectedSameHop);
  // Dominates the earlier one: replaces it.
  EXPECT_EQ(try_insert(idx, vx(f.g, 7), {r4, WeightInterval::point(3), 1}), InsertOutcome::Inserted);
  const auto l7 = idx.label(vx(f.g, 7));
  ASSERT_EQ(l7.size(), 2u);
  EXPECT_EQ(l7[1], (LabelEntry{r4, WeightInterval::point(3), 1}));
}

TEST_F(TryInsert, RejectsOutOfOrderHop) {
  EXPECT_EQ(try_insert(idx, vx(f.g, 2), {r2, WeightInterval::point(5), 1}), InsertOutcome::Inserted);
  EXPECT_THROW(try_insert(idx, vx(f.g, 2), {r4, WeightInterval::point(5), 1}), std::logic_error);
}

TEST(Redundancy, DetectsInjectedSameHopDuplicate) {
  Fig1 f;
  LabelIndex idx = build_wkri(f.g, f.order);
  auto& l = idx.mutable_label(vx(f.g, 5));
  // (v3,[2,6],2) is dominated by (v3,[2,3],2).
  l.insert(l.begin() + 2, LabelEntry{f.order.rank(vx(f.g, 3)), WeightInterval::closed(2, 6), 2});
  const auto rep = scan_redundancy(idx);
  ASSERT_FALSE(rep.clean());
  EXPECT_EQ(rep.violations.front().kind, RedundancyKind::SameHop);
  EXPECT_EQ(rep.violations.front().vertex, vx(f.g, 5));
}

TEST(Redundancy, DetectsInjectedCrossHopEntry) {
  Fig1 f;
  LabelIndex idx = build_wkri(f.g, f.order);
  // v6 -> v2 over v4 with [5,7] in 2 steps; hop v4 already answers it.
  auto& l = idx.mutable_label(vx(f.g, 6));
  const Rank r2 = f.order.rank(vx(f.g, 2));
  auto pos = std::find_if(l.begin(), l.end(), [&](const LabelEntry& e) { return e.hop_rank > r2; });
  l.insert(pos, LabelEntry{r2, WeightInterval::closed(5, 7), 2});
  const auto rep = scan_redundancy(idx);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations.front().kind, RedundancyKind::CrossHop);
  ASSERT_TRUE(rep.violations.front().via.has_value());
}

TEST(Redundancy, EveryEntryIsNeededForSomeQuery) {
  // Deleting any non-self entry changes at least one answer on this graph.
  Fig1 f;
  const LabelIndex full = build_gwkri(f.g, f.cover, f.order);
  const auto universe = constraint_universe(f.g);
  const auto n = static_cast<VertexId>(f.g.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < full.label(v).size(); ++i) {
      if (full.label(v)[i].is_self()) continue;
      LabelIndex cut = full;
      cut.mutable_label(v).erase(cut.mutable_label(v).begin() + static_cast<std::ptrdiff_t>(i));
      bool changed = false;
      for (const auto& c : universe) {
        for (VertexId w = 0; w < n && !changed; ++w)
          for (HopCount k = 0; k <= n && !changed; ++k)
            changed = answer(cut, {v, w, c, k}).reachable != answer(full, {v, w, c, k}).reachable;
        if (changed) break;
      }
      EXPECT_TRUE(changed) << "entry " << i << " of vertex " << f.g.external_id(v);
    }
  }
}

TEST(Build, RejectsNonCover) {
  Fig1 f;
  const CoverSet partial = CoverSet::from_members(f.g.vertex_count(), {vx(f.g, 3)});
  EXPECT_THROW(build_gwkri(f.g, partial, f.order), std::invalid_argument);
  EXPECT_THROW(build_lwkri(f.g, partial, f.order), std::invalid_argument);
}

TEST(Build, EmptyAndEdgelessGraphs) {
  const WeightedGraph empty(0, {});
  EXPECT_EQ(build_wkri(empty, degree_descending_order(empty)).entry_count(), 0u);
  const WeightedGraph lone(3, {});
  const auto idx = build_index(lone, Variant::Gwkri).index;
  EXPECT_EQ(idx.hop_count(), 0u);
  EXPECT_EQ(idx.entry_count(), 0u);
  EXPECT_TRUE(answer(idx, {0, 0, WeightConstraint::any(), 0}).reachable);
  EXPECT_FALSE(answer(idx, {0, 1, WeightConstraint::any(), 5}).reachable);
}

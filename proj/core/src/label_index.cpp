#include "wkr/label_index.hpp"

#include <algorithm>
#include <string>
#include <stdexcept>

namespace wkr {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Wkri: return "wkri";
    case Variant::Gwkri: return "gwkri";
    case Variant::Lwkri: return "lwkri";
  }
  return "unknown";
}

Variant parse_variant(const std::string& s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "wkri") return Variant::Wkri;
  if (lower == "gwkri") return Variant::Gwkri;
  if (lower == "lwkri") return Variant::Lwkri;
  throw std::invalid_argument("unknown index variant '" + s + "'");
}

LabelIndex::LabelIndex(Variant variant, VertexOrder order, std::size_t hop_count,
                       std::optional<Adjacency> embedded)
    : variant_(variant),
      order_(std::move(order)),
      hop_count_(hop_count),
      labels_(order_.size()),
      embedded_(std::move(embedded)) {
  if (hop_count_ > order_.size()) throw std::invalid_argument("hop count exceeds vertex count");
  if (variant_ == Variant::Wkri && hop_count_ != order_.size())
    throw std::invalid_argument("WKRI uses every vertex as a hop");
  if (variant_ == Variant::Lwkri && !embedded_)
    throw std::invalid_argument("LWKRI requires the embedded adjacency");
  if (embedded_ && embedded_->vertex_count() != order_.size())
    throw std::invalid_argument("embedded adjacency size mismatch");
}

CoverSet LabelIndex::cover() const {
  std::vector<VertexId> members(order_.sequence().begin(),
                                order_.sequence().begin() + static_cast<std::ptrdiff_t>(hop_count_));
  return CoverSet::from_members(order_.size(), std::move(members));
}

std::size_t LabelIndex::entry_count() const {
  std::size_t total = 0;
  for (const auto& l : labels_) total += l.size();
  return total;
}

namespace {

// First position of the trailing group of entries with hop rank `r`.
std::size_t tail_group_start(const VertexLabel& label, Rank r) {
  std::size_t s = label.size();
  while (s > 0 && label[s - 1].hop_rank == r) --s;
  return s;
}

// Entries of L(hop) grouped by their hop rank, for O(1) group lookup while one
// hop is being processed.
class HopGroups {
 public:
  explicit HopGroups(std::size_t hop_count) : groups_(hop_count) {}

  void load(std::span<const LabelEntry> label) {
    clear();
    label_ = label;
    for (std::size_t i = 0; i < label.size(); ++i) {
      Group& g = groups_[label[i].hop_rank];
      if (g.end == 0) {
        g.begin = static_cast<std::uint32_t>(i);
        g.min_dist = label[i].dist;
        touched_.push_back(label[i].hop_rank);
      }
      g.end = static_cast<std::uint32_t>(i + 1);
      g.min_dist = std::min(g.min_dist, label[i].dist);
    }
  }

  std::span<const LabelEntry> group(Rank x) const {
    const Group& g = groups_[x];
    return label_.subspan(g.begin, g.end - g.begin);
  }

  /// Shortest distance stored for hop x; kNoRank when there is none.
  HopCount min_dist(Rank x) const { return groups_[x].end == 0 ? kNoRank : groups_[x].min_dist; }

 private:
  struct Group {
    std::uint32_t begin = 0, end = 0;
    HopCount min_dist = 0;
  };

  void clear() {
    for (Rank x : touched_) groups_[x] = Group{};
    touched_.clear();
  }

  std::span<const LabelEntry> label_;
  std::vector<Group> groups_;
  std::vector<Rank> touched_;
};

// Theorem-2 style test: an earlier hop x joins a path u->x (from L(u)) with a
// path x->hop (from L(hop)) whose merged tuple dominates the candidate.
// `groups` provides group(x) and min_dist(x) over L(hop).
template <typename Groups>
bool cross_hop_redundant(std::span<const LabelEntry> earlier, const LabelEntry& cand, const Groups& groups) {
  for (const LabelEntry& a : earlier) {
    if (a.dist >= cand.dist || !a.interval.subset_of(cand.interval)) continue;
    const HopCount budget = cand.dist - a.dist;
    if (groups.min_dist(a.hop_rank) > budget) continue;
    for (const LabelEntry& b : groups.group(a.hop_rank))
      if (b.dist <= budget && b.interval.subset_of(cand.interval)) return true;
  }
  return false;
}

template <typename Groups>
InsertOutcome insert_entry(VertexLabel& label, const LabelEntry& cand, const Groups& groups) {
  if (!label.empty() && label.back().hop_rank > cand.hop_rank)
    throw std::logic_error("label insert violates hop-rank order");
  const std::size_t gs = tail_group_start(label, cand.hop_rank);
  for (std::size_t i = gs; i < label.size(); ++i)
    if (dominates(label[i].interval, label[i].dist, cand.interval, cand.dist))
      return InsertOutcome::RejectedSameHop;
  if (cross_hop_redundant(std::span<const LabelEntry>(label.data(), gs), cand, groups))
    return InsertOutcome::RejectedCrossHop;
  auto dominated = [&](const LabelEntry& e) {
    return dominates(cand.interval, cand.dist, e.interval, e.dist);
  };
  label.erase(std::remove_if(label.begin() + static_cast<std::ptrdiff_t>(gs), label.end(), dominated),
              label.end());
  label.push_back(cand);
  return InsertOutcome::Inserted;
}

struct State {
  VertexId vertex;
  WeightInterval interval;
  HopCount dist;
};

// Multi-label breadth-first expansion from each hop in rank order. A vertex may
// be reached by several (interval, depth) states; FIFO order means shorter
// paths are offered first.
class Builder {
 public:
  Builder(const WeightedGraph& g, LabelIndex& index, const BuildOptions& options)
      : g_(g), index_(index), options_(options), groups_(index.hop_count()) {
    if (options_.prune_uncovered_states) frontier_.resize(g.vertex_count());
  }

  void run() {
    start_ = std::chrono::steady_clock::now();
    for (Rank r = 0; r < index_.hop_count(); ++r) {
      expand_from(r);
      check_limits(r + 1);
    }
  }

 private:
  void expand_from(Rank r) {
    const VertexOrder& order = index_.order();
    const VertexId hop = order.vertex(r);
    VertexLabel& hop_label = index_.mutable_label(hop);
    hop_label.push_back({r, WeightInterval::empty(), 0});
    ++entries_;
    groups_.load(hop_label);

    queue_.clear();
    std::size_t head = 0;
    push_neighbors({hop, WeightInterval::empty(), 0}, r);
    while (head < queue_.size()) {
      const State s = queue_[head++];
      if (index_.is_labeled(s.vertex)) {
        VertexLabel& label = index_.mutable_label(s.vertex);
        const std::size_t before = label.size();
        if (insert_entry(label, {r, s.interval, s.dist}, groups_) != InsertOutcome::Inserted) continue;
        entries_ = entries_ + label.size() - before;
      } else if (options_.prune_uncovered_states && !admit_uncovered(s)) {
        continue;
      }
      push_neighbors(s, r);
    }
    for (VertexId v : touched_) frontier_[v].clear();
    touched_.clear();
  }

  void push_neighbors(const State& s, Rank r) {
    const VertexOrder& order = index_.order();
    for (const Arc& a : g_.adjacency().arcs(s.vertex)) {
      // Earlier hops (and this hop) end the branch.
      if (order.rank(a.target) <= r) continue;
      queue_.push_back({a.target, s.interval.with(a.weight), s.dist + 1});
    }
  }

  void check_limits(std::size_t hops_done) const {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    const bool over_time = options_.time_limit && elapsed > *options_.time_limit;
    const bool over_size = options_.entry_limit && entries_ > *options_.entry_limit;
    if (!over_time && !over_size) return;
    throw BuildLimitExceeded(std::string(over_time ? "time" : "entry") + " limit exceeded after " +
                                 std::to_string(hops_done) + " of " + std::to_string(index_.hop_count()) +
                                 " hops (" + std::to_string(entries_) + " entries)",
                             hops_done, entries_);
  }

  // Same-hop Pareto filter for states at vertices that store no label.
  bool admit_uncovered(const State& s) {
    auto& f = frontier_[s.vertex];
    for (const State& e : f)
      if (dominates(e.interval, e.dist, s.interval, s.dist)) return false;
    if (f.empty()) touched_.push_back(s.vertex);
    std::erase_if(f, [&](const State& e) { return dominates(s.interval, s.dist, e.interval, e.dist); });
    f.push_back(s);
    return true;
  }

  const WeightedGraph& g_;
  LabelIndex& index_;
  BuildOptions options_;
  HopGroups groups_;
  std::vector<State> queue_;
  std::vector<std::vector<State>> frontier_;
  std::vector<VertexId> touched_;
  std::size_t entries_ = 0;
  std::chrono::steady_clock::time_point start_;
};

void require_cover(const WeightedGraph& g, const CoverSet& cover) {
  if (!is_cover(g, cover)) throw std::invalid_argument("hop set is not a vertex cover");
}

LabelIndex build_with_cover(Variant variant, const WeightedGraph& g, const CoverSet& cover,
                            const VertexOrder& order, const BuildOptions& options) {
  if (order.size() != g.vertex_count()) throw std::invalid_argument("order size differs from vertex count");
  require_cover(g, cover);
  std::optional<Adjacency> embedded;
  if (variant == Variant::Lwkri) embedded = g.adjacency();
  LabelIndex index(variant, cover_first_order(order, cover), cover.size(), std::move(embedded));
  Builder(g, index, options).run();
  return index;
}

}  // namespace

InsertOutcome try_insert(LabelIndex& index, VertexId u, const LabelEntry& candidate) {
  if (candidate.hop_rank >= index.hop_count()) throw std::out_of_range("candidate hop rank out of range");
  const VertexId hop = index.order().vertex(candidate.hop_rank);
  HopGroups groups(index.hop_count());
  groups.load(index.label(hop));
  return insert_entry(index.mutable_label(u), candidate, groups);
}

LabelIndex build_wkri(const WeightedGraph& g, const VertexOrder& order, const BuildOptions& options) {
  if (order.size() != g.vertex_count()) throw std::invalid_argument("order size differs from vertex count");
  LabelIndex index(Variant::Wkri, order, order.size());
  Builder(g, index, options).run();
  return index;
}

LabelIndex build_gwkri(const WeightedGraph& g, const CoverSet& cover, const VertexOrder& order,
                       const BuildOptions& options) {
  return build_with_cover(Variant::Gwkri, g, cover, order, options);
}

LabelIndex build_lwkri(const WeightedGraph& g, const CoverSet& cover, const VertexOrder& order,
                       const BuildOptions& options) {
  return build_with_cover(Variant::Lwkri, g, cover, order, options);
}

RedundancyReport scan_redundancy(const LabelIndex& index) {
  RedundancyReport report;
  const VertexOrder& order = index.order();
  for (VertexId u = 0; u < index.vertex_count(); ++u) {
    auto label = index.label(u);
    for (std::size_t gs = 0; gs < label.size();) {
      const Rank h = label[gs].hop_rank;
      std::size_t ge = gs;
      while (ge < label.size() && label[ge].hop_rank == h) ++ge;

      for (std::size_t i = gs; i < ge; ++i)
        for (std::size_t j = gs; j < ge; ++j)
          if (i != j && dominates(label[j].interval, label[j].dist, label[i].interval, label[i].dist))
            report.violations.push_back({u, label[i], RedundancyKind::SameHop, label[j], std::nullopt});

      const VertexId hop = order.vertex(h);
      auto hop_label = index.label(hop);
      auto earlier = label.subspan(0, gs);
      auto find_witness = [&](const LabelEntry& c) -> std::optional<RedundancyViolation> {
        for (const LabelEntry& a : earlier) {
          if (!a.interval.subset_of(c.interval)) continue;
          for (const LabelEntry& b : hop_label)
            if (b.hop_rank == a.hop_rank && a.dist + b.dist <= c.dist && b.interval.subset_of(c.interval))
              return RedundancyViolation{u, c, RedundancyKind::CrossHop, a, b};
        }
        return std::nullopt;
      };
      for (std::size_t i = gs; i < ge; ++i)
        if (auto v = find_witness(label[i])) report.violations.push_back(*v);
      gs = ge;
    }
  }
  return report;
}

}  // namespace wkr

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wkr/constraints.hpp"
#include "wkr/cover.hpp"
#include "wkr/graph.hpp"

namespace wkr {

enum class Variant : std::uint8_t {
  Wkri = 0,   // every vertex is a hop, every vertex labeled
  Gwkri = 1,  // cover vertices are hops, every vertex labeled
  Lwkri = 2,  // cover vertices are hops, only cover vertices labeled
};

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// One label item: a path of `dist` edges spanning `interval` from the labeled
/// vertex to the hop ranked `hop_rank`. The self-entry has dist 0 and an empty
/// interval.
struct LabelEntry {
  Rank hop_rank = 0;
  WeightInterval interval;
  HopCount dist = 0;

  bool is_self() const { return dist == 0; }
  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

/// Entries sorted by hop_rank; each hop's entries are contiguous.
using VertexLabel = std::vector<LabelEntry>;

class LabelIndex {
 public:
  LabelIndex() = default;

  /// `order` must list the hop vertices first; ranks [0, hop_count) are hops.
  LabelIndex(Variant variant, VertexOrder order, std::size_t hop_count,
             std::optional<Adjacency> embedded = std::nullopt);

  Variant variant() const { return variant_; }
  const VertexOrder& order() const { return order_; }
  std::size_t vertex_count() const { return order_.size(); }
  std::size_t hop_count() const { return hop_count_; }

  bool is_hop(VertexId v) const { return order_.rank(v) < hop_count_; }
  /// WKRI/GWKRI label every vertex; LWKRI only the hops (cover members).
  bool is_labeled(VertexId v) const { return variant_ != Variant::Lwkri || is_hop(v); }
  /// Cover membership; every vertex for WKRI.
  CoverSet cover() const;

  std::span<const LabelEntry> label(VertexId v) const { return labels_[v]; }
  VertexLabel& mutable_label(VertexId v) { return labels_[v]; }

  /// Graph adjacency carried by LWKRI for neighbor expansion at query time.
  const Adjacency* embedded_adjacency() const { return embedded_ ? &*embedded_ : nullptr; }

  std::size_t entry_count() const;

  friend bool operator==(const LabelIndex&, const LabelIndex&) = default;

 private:
  Variant variant_ = Variant::Wkri;
  VertexOrder order_;
  std::size_t hop_count_ = 0;
  std::vector<VertexLabel> labels_;
  std::optional<Adjacency> embedded_;
};

enum class InsertOutcome { Inserted, RejectedSameHop, RejectedCrossHop };

/// Offers `candidate` to L(u) while hop `candidate.hop_rank` is being processed.
/// Rejects it if a same-hop entry dominates it, or if some earlier hop x has
/// entries in L(u) and L(hop) whose merged path dominates it. Otherwise deletes
/// the same-hop entries it dominates and appends it. Throws std::logic_error if
/// L(u) already holds an entry with a larger hop rank.
InsertOutcome try_insert(LabelIndex& index, VertexId u, const LabelEntry& candidate);

struct BuildOptions {
  /// LWKRI only: also drop dominated intermediate states at non-cover vertices.
  /// Never changes query answers; off by default.
  bool prune_uncovered_states = false;
  /// Abort with BuildLimitExceeded once either budget is exhausted.
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::size_t> entry_limit;
};

class BuildLimitExceeded : public std::runtime_error {
 public:
  BuildLimitExceeded(const std::string& what, std::size_t hops_done, std::size_t entries)
      : std::runtime_error(what), hops_done_(hops_done), entries_(entries) {}
  std::size_t hops_done() const { return hops_done_; }
  std::size_t entries() const { return entries_; }

 private:
  std::size_t hops_done_, entries_;
};

LabelIndex build_wkri(const WeightedGraph& g, const VertexOrder& order, const BuildOptions& options = {});
/// `order` is any full vertex order; hops are the cover members in that order.
LabelIndex build_gwkri(const WeightedGraph& g, const CoverSet& cover, const VertexOrder& order,
                       const BuildOptions& options = {});
LabelIndex build_lwkri(const WeightedGraph& g, const CoverSet& cover, const VertexOrder& order,
                       const BuildOptions& options = {});

enum class RedundancyKind { SameHop, CrossHop };

struct RedundancyViolation {
  VertexId vertex;
  LabelEntry entry;
  RedundancyKind kind;
  LabelEntry witness;             // dominating same-hop entry, or the L(vertex) side
  std::optional<LabelEntry> via;  // the L(hop) side for cross-hop violations
};

struct RedundancyReport {
  std::vector<RedundancyViolation> violations;
  bool clean() const { return violations.empty(); }
};

/// Full scan for pairwise same-hop dominance and cross-hop redundancy against
/// earlier hops.
RedundancyReport scan_redundancy(const LabelIndex& index);

}  // namespace wkr

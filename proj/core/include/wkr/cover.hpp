#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wkr/graph.hpp"

namespace wkr {

/// A permutation of the vertices; position in the permutation is the rank.
class VertexOrder {
 public:
  VertexOrder() = default;

  /// Takes `order` verbatim. Throws std::invalid_argument unless it is a
  /// permutation of [0, order.size()).
  static VertexOrder from_sequence(std::vector<VertexId> order);

  std::size_t size() const { return order_.size(); }
  VertexId vertex(Rank r) const { return order_[r]; }
  Rank rank(VertexId v) const { return rank_[v]; }
  std::span<const VertexId> sequence() const { return order_; }

  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

 private:
  std::vector<VertexId> order_;
  std::vector<Rank> rank_;
};

namespace tie_break {
struct AscendingId {};
struct DescendingId {};
/// Equal-degree vertices keep their relative position in `sequence`.
struct Explicit {
  std::vector<VertexId> sequence;
};
}  // namespace tie_break

using TieBreak = std::variant<tie_break::AscendingId, tie_break::DescendingId, tie_break::Explicit>;

/// Vertices sorted by non-increasing degree, ties resolved by `tb`.
VertexOrder degree_descending_order(const WeightedGraph& g, const TieBreak& tb = tie_break::AscendingId{});

struct CoverSet {
  std::vector<VertexId> members;  // selection order
  std::vector<bool> membership;   // indexed by vertex

  bool contains(VertexId v) const { return membership[v]; }
  std::size_t size() const { return members.size(); }

  static CoverSet from_members(std::size_t vertex_count, std::vector<VertexId> members);
  /// Every vertex, in ascending id order.
  static CoverSet all(std::size_t vertex_count);
};

/// Greedy max-degree vertex cover in O(|V| + |E|), maintaining the
/// degree-sorted vertex array with per-degree block boundaries so every
/// neighbor decrement is a single swap. Ties between equal-degree vertices
/// follow `tb`.
CoverSet approx_min_cover(const WeightedGraph& g, const TieBreak& tb = tie_break::AscendingId{});

bool is_cover(const WeightedGraph& g, const CoverSet& m);

/// True iff every neighbor of every non-member is a member.
bool non_members_have_covered_neighborhoods(const WeightedGraph& g, const CoverSet& m);

/// Permutation listing the cover members first (in `order`'s relative order),
/// then the remaining vertices. Ranks below cover.size() identify hop vertices.
VertexOrder cover_first_order(const VertexOrder& order, const CoverSet& cover);

}  // namespace wkr

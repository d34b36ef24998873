#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "wkr/types.hpp"

namespace wkr {

/// Closed integer interval of edge weights. The empty interval is the weight
/// range of a zero-length path; it is a distinct state, never the pair (0,0),
/// because weight 0 is a legal edge weight.
class WeightInterval {
 public:
  /// The empty interval.
  constexpr WeightInterval() = default;

  /// Single-weight interval [w, w].
  static constexpr WeightInterval point(Weight w) { return WeightInterval{w, w}; }

  /// [lo, hi]; requires lo <= hi.
  static WeightInterval closed(Weight lo, Weight hi);

  static constexpr WeightInterval empty() { return WeightInterval{}; }

  constexpr bool is_empty() const { return lo_ > hi_; }

  // Only meaningful for non-empty intervals.
  constexpr Weight lo() const { return lo_; }
  constexpr Weight hi() const { return hi_; }

  /// True if every weight of *this lies in `outer`. Empty is contained in anything.
  constexpr bool subset_of(const WeightInterval& outer) const {
    // The empty sentinel (lo = max, hi = 0) passes both comparisons on its own.
    return outer.lo_ <= lo_ && hi_ <= outer.hi_;
  }

  /// Smallest interval covering both operands. The empty interval is the identity:
  /// its sentinel bounds (lo = max, hi = 0) fall out of min/max naturally.
  constexpr WeightInterval merged(const WeightInterval& other) const {
    WeightInterval out;
    out.lo_ = lo_ < other.lo_ ? lo_ : other.lo_;
    out.hi_ = hi_ > other.hi_ ? hi_ : other.hi_;
    return out;
  }

  constexpr WeightInterval with(Weight w) const { return merged(point(w)); }

  friend constexpr bool operator==(const WeightInterval&, const WeightInterval&) = default;

 private:
  constexpr WeightInterval(Weight lo, Weight hi) : lo_(lo), hi_(hi) {}

  Weight lo_ = kMaxWeight + 1;
  Weight hi_ = 0;
};

WeightInterval interval_union(const WeightInterval& a, const WeightInterval& b);

std::ostream& operator<<(std::ostream& os, const WeightInterval& i);

/// Query-side weight constraint. Either bound may be absent (unbounded).
struct WeightConstraint {
  std::optional<Weight> lower;
  std::optional<Weight> upper;

  static WeightConstraint any() { return {}; }
  static WeightConstraint between(Weight lo, Weight hi);
  static WeightConstraint at_most(Weight hi) { return {std::nullopt, hi}; }
  static WeightConstraint at_least(Weight lo) { return {lo, std::nullopt}; }

  bool admits(Weight w) const {
    return (!lower || *lower <= w) && (!upper || w <= *upper);
  }

  friend bool operator==(const WeightConstraint&, const WeightConstraint&) = default;
};

/// True iff every edge weight in `i` satisfies `c`. The empty interval always does.
inline bool satisfies(const WeightInterval& i, const WeightConstraint& c) {
  if (i.is_empty()) return true;
  return (!c.lower || *c.lower <= i.lo()) && (!c.upper || i.hi() <= *c.upper);
}

/// Parses "ws we" bound tokens; "-inf" / "+inf" / "inf" mean unbounded.
WeightConstraint parse_constraint(std::string_view lower, std::string_view upper);
std::string format_bound_lower(const WeightConstraint& c);
std::string format_bound_upper(const WeightConstraint& c);

std::ostream& operator<<(std::ostream& os, const WeightConstraint& c);

/// Path from `src` to `dst` with `dist` edges whose weights span `interval`.
struct PathTuple {
  VertexId src = 0;
  VertexId dst = 0;
  WeightInterval interval;
  HopCount dist = 0;

  /// Appends one edge of weight w.
  PathTuple extended(Weight w) const { return {src, dst, interval.with(w), dist + 1}; }

  friend bool operator==(const PathTuple&, const PathTuple&) = default;
};

/// t1 dominates t2 iff t1's interval is inside t2's and t1 is no longer.
/// Throws std::invalid_argument if the endpoints differ.
bool dominates(const PathTuple& t1, const PathTuple& t2);

/// Endpoint-free form used on label entries that share a hop.
constexpr bool dominates(const WeightInterval& i1, HopCount d1, const WeightInterval& i2,
                         HopCount d2) {
  return d1 <= d2 && i1.subset_of(i2);
}

}  // namespace wkr

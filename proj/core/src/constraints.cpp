#include "wkr/constraints.hpp"

#include <charconv>
#include <stdexcept>

namespace wkr {

WeightInterval WeightInterval::closed(Weight lo, Weight hi) {
  if (lo > hi) throw std::invalid_argument("interval lower bound exceeds upper bound");
  if (hi > kMaxWeight) throw std::out_of_range("weight exceeds supported range");
  return WeightInterval{lo, hi};
}

WeightInterval interval_union(const WeightInterval& a, const WeightInterval& b) {
  return a.merged(b);
}

std::ostream& operator<<(std::ostream& os, const WeightInterval& i) {
  if (i.is_empty()) return os << "[]";
  return os << '[' << i.lo() << ',' << i.hi() << ']';
}

WeightConstraint WeightConstraint::between(Weight lo, Weight hi) {
  if (lo > hi) throw std::invalid_argument("constraint lower bound exceeds upper bound");
  return {lo, hi};
}

namespace {

std::optional<Weight> parse_bound(std::string_view tok, bool is_lower) {
  if (tok == "inf" || tok == "+inf") {
    if (is_lower) throw std::invalid_argument("lower bound cannot be +inf");
    return std::nullopt;
  }
  if (tok == "-inf") {
    if (!is_lower) throw std::invalid_argument("upper bound cannot be -inf");
    return std::nullopt;
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad weight bound '" + std::string(tok) + "'");
  // A negative bound on the lower side admits everything; on the upper side nothing.
  if (v < 0) {
    if (is_lower) return Weight{0};
    throw std::invalid_argument("negative upper bound '" + std::string(tok) + "'");
  }
  if (v > static_cast<long long>(kMaxWeight)) {
    if (!is_lower) return std::nullopt;
    throw std::invalid_argument("weight bound out of range '" + std::string(tok) + "'");
  }
  return static_cast<Weight>(v);
}

}  // namespace

WeightConstraint parse_constraint(std::string_view lower, std::string_view upper) {
  WeightConstraint c{parse_bound(lower, true), parse_bound(upper, false)};
  if (c.lower && c.upper && *c.lower > *c.upper)
    throw std::invalid_argument("constraint lower bound exceeds upper bound");
  return c;
}

std::string format_bound_lower(const WeightConstraint& c) {
  return c.lower ? std::to_string(*c.lower) : "-inf";
}

std::string format_bound_upper(const WeightConstraint& c) {
  return c.upper ? std::to_string(*c.upper) : "+inf";
}

std::ostream& operator<<(std::ostream& os, const WeightConstraint& c) {
  return os << '[' << format_bound_lower(c) << ',' << format_bound_upper(c) << ']';
}

bool dominates(const PathTuple& t1, const PathTuple& t2) {
  if (t1.src != t2.src || t1.dst != t2.dst)
    throw std::invalid_argument("dominance is only defined for tuples with equal endpoints");
  return dominates(t1.interval, t1.dist, t2.interval, t2.dist);
}

}  // namespace wkr

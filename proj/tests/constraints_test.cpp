#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "wkr/constraints.hpp"

using namespace wkr;

namespace {

using I = WeightInterval;

// Every interval over [0, top] plus the empty one.
std::vector<I> all_intervals(Weight top) {
  std::vector<I> out{I::empty()};
  for (Weight a = 0; a <= top; ++a)
    for (Weight b = a; b <= top; ++b) out.push_back(I::closed(a, b));
  return out;
}

std::vector<WeightConstraint> all_constraints(Weight top) {
  std::vector<WeightConstraint> out{WeightConstraint::any()};
  for (Weight a = 0; a <= top; ++a) {
    out.push_back(WeightConstraint::at_least(a));
    out.push_back(WeightConstraint::at_most(a));
    for (Weight b = a; b <= top; ++b) out.push_back(WeightConstraint::between(a, b));
  }
  return out;
}

}  // namespace

TEST(Interval, UnionExamples) {
  EXPECT_EQ(interval_union(I::closed(4, 5), I::point(6)), I::closed(4, 6));
  EXPECT_EQ(interval_union(I::empty(), I::closed(3, 8)), I::closed(3, 8));
  EXPECT_EQ(interval_union(interval_union(I::point(2), I::point(3)), I::point(4)), I::closed(2, 4));
  EXPECT_TRUE(interval_union(I::empty(), I::empty()).is_empty());
}

TEST(Interval, EmptyIsNotZero) {
  EXPECT_NE(I::empty(), I::point(0));
  EXPECT_FALSE(I::point(0).is_empty());
  EXPECT_EQ(I::empty().with(0), I::point(0));
  EXPECT_THROW(I::closed(5, 4), std::invalid_argument);
}

TEST(Interval, UnionLaws) {
  const auto xs = all_intervals(4);
  for (const I& a : xs) {
    EXPECT_EQ(interval_union(a, I::empty()), a);
    EXPECT_EQ(interval_union(a, a), a);
    for (const I& b : xs) {
      EXPECT_EQ(interval_union(a, b), interval_union(b, a));
      for (const I& c : xs)
        EXPECT_EQ(interval_union(interval_union(a, b), c), interval_union(a, interval_union(b, c)));
    }
  }
}

TEST(Interval, SubsetBehavesLikeSetInclusion) {
  const auto xs = all_intervals(5);
  for (const I& a : xs)
    for (const I& b : xs) {
      bool expected = true;
      if (!a.is_empty())
        for (Weight w = a.lo(); w <= a.hi(); ++w) expected = expected && !b.is_empty() && b.lo() <= w && w <= b.hi();
      EXPECT_EQ(a.subset_of(b), expected) << a << " in " << b;
    }
}

TEST(Satisfies, Examples) {
  EXPECT_TRUE(satisfies(I::closed(2, 3), WeightConstraint::at_most(3)));
  EXPECT_FALSE(satisfies(I::closed(4, 8), WeightConstraint::between(5, 8)));
  for (const auto& c : all_constraints(3)) EXPECT_TRUE(satisfies(I::empty(), c));
}

TEST(Satisfies, AgreesWithPerWeightAdmission) {
  for (const I& i : all_intervals(5))
    for (const auto& c : all_constraints(5)) {
      bool expected = true;
      if (!i.is_empty())
        for (Weight w = i.lo(); w <= i.hi(); ++w) expected = expected && c.admits(w);
      EXPECT_EQ(satisfies(i, c), expected);
    }
}

TEST(Dominance, Examples) {
  const PathTuple t{4, 3, I::closed(4, 5), 2};
  EXPECT_TRUE(dominates(t, PathTuple{4, 3, I::closed(3, 5), 3}));
  EXPECT_TRUE(dominates(t, PathTuple{4, 3, I::closed(2, 6), 4}));
  EXPECT_TRUE(dominates(t, t));
  EXPECT_FALSE(dominates(t, PathTuple{4, 3, I::closed(4, 5), 1}));
  EXPECT_FALSE(dominates(t, PathTuple{4, 3, I::closed(5, 8), 3}));
  EXPECT_THROW(dominates(t, PathTuple{4, 2, I::closed(4, 5), 2}), std::invalid_argument);
}

TEST(Dominance, PartialOrderMonotonicityAndExtension) {
  std::vector<PathTuple> ts;
  for (const I& i : all_intervals(3))
    for (HopCount d = 0; d <= 3; ++d)
      if ((d == 0) == i.is_empty()) ts.push_back({0, 1, i, d});
  const auto cs = all_constraints(3);
  for (const auto& a : ts)
    for (const auto& b : ts) {
      const bool ab = dominates(a, b);
      if (ab && dominates(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (const auto& c : ts)
        if (ab && dominates(b, c)) {
          EXPECT_TRUE(dominates(a, c));
        }
      if (!ab) continue;
      for (const auto& c : cs)
        for (HopCount k = 0; k <= 4; ++k)
          if (satisfies(b.interval, c) && b.dist <= k) {
            EXPECT_TRUE(satisfies(a.interval, c) && a.dist <= k);
          }
      for (Weight w = 0; w <= 3; ++w) EXPECT_TRUE(dominates(a.extended(w), b.extended(w)));
    }
}

TEST(Constraint, ParseAndFormat) {
  EXPECT_EQ(parse_constraint("5", "8"), WeightConstraint::between(5, 8));
  EXPECT_EQ(parse_constraint("-inf", "3"), WeightConstraint::at_most(3));
  EXPECT_EQ(parse_constraint("2", "+inf"), WeightConstraint::at_least(2));
  EXPECT_EQ(parse_constraint("-inf", "inf"), WeightConstraint::any());
  EXPECT_THROW(parse_constraint("8", "5"), std::invalid_argument);
  EXPECT_THROW(parse_constraint("x", "5"), std::invalid_argument);
  EXPECT_THROW(parse_constraint("+inf", "5"), std::invalid_argument);
  for (const auto& c : all_constraints(4))
    EXPECT_EQ(parse_constraint(format_bound_lower(c), format_bound_upper(c)), c);
}

TEST(Constraint, Printing) {
  std::ostringstream os;
  os << I::closed(3, 5) << ' ' << I::empty();
  EXPECT_FALSE(os.str().empty());
}

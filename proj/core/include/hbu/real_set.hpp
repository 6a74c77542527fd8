#pragma once

#include <string>
#include <vector>

namespace hbu::opgroup {

/// Finite union of disjoint closed intervals; endpoints may be +-inf.
class ClosedRealSet {
 public:
  struct Interval {
    double a;
    double b;
  };

  /// The empty set.
  ClosedRealSet() = default;
  /// Sorts and merges overlapping or touching intervals. Throws
  /// ParameterError on NaN endpoints or a > b.
  static ClosedRealSet from_intervals(std::vector<Interval> parts);
  static ClosedRealSet point(double x);
  static ClosedRealSet whole_line();

  bool contains(double x) const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& intervals() const { return parts_; }
  /// Open components of the complement, in increasing order.
  std::vector<Interval> gaps() const;
  std::string literal() const;

 private:
  std::vector<Interval> parts_;
};

}  // namespace hbu::opgroup

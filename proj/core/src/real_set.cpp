#include "hbu/real_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hbu/error.hpp"

namespace hbu::opgroup {

namespace {

void put(std::ostringstream& os, double v) {
  if (std::isinf(v))
    os << (v < 0 ? "-inf" : "inf");
  else
    os << v;
}

}  // namespace

ClosedRealSet ClosedRealSet::from_intervals(std::vector<Interval> parts) {
  for (const auto& p : parts) {
    if (std::isnan(p.a) || std::isnan(p.b)) throw ParameterError("interval endpoint is NaN");
    if (p.a > p.b) throw ParameterError("interval has a > b");
  }
  std::sort(parts.begin(), parts.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  ClosedRealSet s;
  for (const auto& p : parts) {
    if (!s.parts_.empty() && p.a <= s.parts_.back().b)
      s.parts_.back().b = std::max(s.parts_.back().b, p.b);
    else
      s.parts_.push_back(p);
  }
  return s;
}

ClosedRealSet ClosedRealSet::point(double x) { return from_intervals({{x, x}}); }

ClosedRealSet ClosedRealSet::whole_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return from_intervals({{-inf, inf}});
}

bool ClosedRealSet::contains(double x) const {
  for (const auto& p : parts_)
    if (x >= p.a && x <= p.b) return true;
  return false;
}

std::vector<ClosedRealSet::Interval> ClosedRealSet::gaps() const {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> g;
  double left = -inf;
  for (const auto& p : parts_) {
    if (p.a > left || (std::isinf(left) && !std::isinf(p.a))) g.push_back({left, p.a});
    left = p.b;
  }
  if (!(std::isinf(left) && left > 0)) g.push_back({left, inf});
  return g;
}

std::string ClosedRealSet::literal() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << 'u';
    os << '[';
    put(os, parts_[i].a);
    os << ',';
    put(os, parts_[i].b);
    os << ']';
  }
  return os.str();
}

}  // namespace hbu::opgroup

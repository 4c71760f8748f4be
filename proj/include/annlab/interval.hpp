#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "annlab/rational.hpp"

namespace annlab {

// b = -1 encodes [a, +inf), b = +1 encodes (-inf, a].
struct HalfLinePair {
  Rational a;
  int b = -1;

  friend bool operator==(const HalfLinePair&, const HalfLinePair&) = default;
  friend std::strong_ordering operator<=>(const HalfLinePair& x, const HalfLinePair& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }
  std::string str() const;
};

struct Interval {
  Rational lo, hi;
  bool lo_closed = true, hi_closed = true;

  Interval() = default;
  Interval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

  bool contains(const Rational& x) const;
  bool degenerate() const { return lo == hi; }
  bool empty() const { return false; }
  Rational representative() const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

bool interval_contains(const Interval& I, const Rational& x);

// Possibly empty intersection; the same open/closed conventions.
std::optional<Interval> intersect(const Interval& I, const Interval& J);

class IntervalPartition {
 public:
  IntervalPartition() = default;
  explicit IntervalPartition(std::vector<Interval> iv) : intervals_(std::move(iv)) {}

  const std::vector<Interval>& intervals() const { return intervals_; }
  size_t size() const { return intervals_.size(); }
  const Interval& operator[](size_t r) const { return intervals_[r]; }
  // Index of the interval containing x; x must lie in [0,1].
  size_t locate(const Rational& x) const;
  bool covers_unit_exactly() const;

 private:
  std::vector<Interval> intervals_;
};

std::vector<HalfLinePair> corner_pairs();
IntervalPartition partition_from_pairs(const std::vector<HalfLinePair>& pairs);

}  // namespace annlab

#include "annlab/interval.hpp"

#include <algorithm>

#include "annlab/error.hpp"

namespace annlab {

std::string HalfLinePair::str() const { return "(" + a.str() + "," + (b < 0 ? "-1" : "+1") + ")"; }

Interval::Interval(Rational l, Rational h, bool lc, bool hc)
    : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
  if (hi < lo) throw ValidationError("interval with lo > hi");
  if (lo == hi && !(lo_closed && hi_closed)) throw ValidationError("degenerate interval must be closed");
}

bool Interval::contains(const Rational& x) const {
  bool lo_ok = lo_closed ? lo <= x : lo < x;
  bool hi_ok = hi_closed ? x <= hi : x < hi;
  return lo_ok && hi_ok;
}

Rational Interval::representative() const {
  if (degenerate()) return lo;
  return (lo + hi) / Rational(2);
}

std::string Interval::str() const {
  return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

bool interval_contains(const Interval& I, const Rational& x) { return I.contains(x); }

std::optional<Interval> intersect(const Interval& I, const Interval& J) {
  Rational lo;
  bool lc;
  if (I.lo > J.lo) { lo = I.lo; lc = I.lo_closed; }
  else if (J.lo > I.lo) { lo = J.lo; lc = J.lo_closed; }
  else { lo = I.lo; lc = I.lo_closed && J.lo_closed; }
  Rational hi;
  bool hc;
  if (I.hi < J.hi) { hi = I.hi; hc = I.hi_closed; }
  else if (J.hi < I.hi) { hi = J.hi; hc = J.hi_closed; }
  else { hi = I.hi; hc = I.hi_closed && J.hi_closed; }
  if (hi < lo) return std::nullopt;
  if (hi == lo && !(lc && hc)) return std::nullopt;
  return Interval(lo, hi, lc, hc);
}

size_t IntervalPartition::locate(const Rational& x) const {
  auto it = std::partition_point(intervals_.begin(), intervals_.end(), [&](const Interval& I) {
    return I.hi < x || (I.hi == x && !I.hi_closed);
  });
  if (it == intervals_.end() || !it->contains(x))
    throw ValidationError("value " + x.str() + " not covered by partition");
  return static_cast<size_t>(it - intervals_.begin());
}

bool IntervalPartition::covers_unit_exactly() const {
  if (intervals_.empty()) return false;
  const auto& f = intervals_.front();
  const auto& l = intervals_.back();
  if (f.lo != Rational(0) || !f.lo_closed || l.hi != Rational(1) || !l.hi_closed) return false;
  for (size_t r = 0; r + 1 < intervals_.size(); ++r) {
    const auto& A = intervals_[r];
    const auto& B = intervals_[r + 1];
    if (A.hi != B.lo || A.hi_closed == B.lo_closed) return false;
  }
  return true;
}

std::vector<HalfLinePair> corner_pairs() {
  return {{Rational(0), -1}, {Rational(0), 1}, {Rational(1), -1}, {Rational(1), 1}};
}

IntervalPartition partition_from_pairs(const std::vector<HalfLinePair>& pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& z = pairs[i];
    if (z.b != -1 && z.b != 1) throw ValidationError("pair flag must be -1 or +1");
    if (z.a < Rational(0) || z.a > Rational(1)) throw ValidationError("pair endpoint outside [0,1]");
    if (i > 0 && !(pairs[i - 1] < z)) throw ValidationError("pairs not strictly sorted");
  }
  for (const auto& c : corner_pairs())
    if (!std::binary_search(pairs.begin(), pairs.end(), c))
      throw ValidationError("missing corner pair " + c.str());
  std::vector<Interval> out;
  for (size_t r = 0; r + 1 < pairs.size(); ++r) {
    const auto& lo = pairs[r];
    const auto& hi = pairs[r + 1];
    out.emplace_back(lo.a, hi.a, lo.b == -1, hi.b == 1);
  }
  return IntervalPartition(std::move(out));
}

}  // namespace annlab

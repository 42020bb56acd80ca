#ifndef CB_INTERVAL_HPP
#define CB_INTERVAL_HPP

#include "cb/errors.hpp"
#include "cb/rational.hpp"

namespace cb {

/// Half-open interval (lo, hi] with exact rational endpoints, lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw InvalidTerm("interval requires lo < hi");
  }

  Rational length() const { return hi - lo; }

  /// Membership in (lo, hi].
  bool contains(const Rational& q) const { return lo < q && q <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace cb

#endif

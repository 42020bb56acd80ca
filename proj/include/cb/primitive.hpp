#ifndef CB_PRIMITIVE_HPP
#define CB_PRIMITIVE_HPP

#include <cstdint>
#include <vector>

#include "cb/setterm.hpp"

namespace cb {

/// An isolated point x_n of a set together with a radius certifying the
/// isolation: 0 < radius < 1/(n+1) and (x_n - radius, x_n + radius) meets
/// the set only at x_n. The index n is the position in the returned list.
struct IsolatedPointCert {
  Rational point;
  Rational radius;
};

/// Certificates for all points of a finite set, indexed in ascending order.
/// The radius rule is min(1/(n+2), half the gap to the nearest other point).
/// Throws EmptyInput.
std::vector<IsolatedPointCert> isolated_points(const std::vector<Rational>& finite_set);

/// The first `limit` isolated points of a term, in order of first appearance
/// in the depth enumeration; radii additionally respect the exact structural
/// gaps around each point. Throws EmptyInput on the empty term.
std::vector<IsolatedPointCert> isolated_points(const SetTerm& t, std::uint64_t limit);

/// A compact set whose alpha-th derivative is exactly the given finite set:
/// the set itself for alpha = 0, otherwise rank-alpha towers glued on the
/// left of every point. primitive_of({}, alpha) is Empty.
SetTerm primitive_of(const std::vector<Rational>& finite_set, const Ordinal& alpha);

/// Symbolic version: towers glued at the first `depth` isolated points of t,
/// carrying t as the base of a truncated countable attachment whose
/// derivatives follow the full-attachment identity. Throws EmptyInput.
SetTerm primitive_of_term(const SetTerm& t, const Ordinal& alpha, std::uint64_t depth);

}  // namespace cb

#endif

#ifndef CB_CLASSIFY_HPP
#define CB_CLASSIFY_HPP

#include <functional>

#include "cb/setterm.hpp"

namespace cb {

/// Last ordinal of the addressing range: a term with characteristic (alpha, p)
/// is addressed bijectively onto [0, tau] with tau = w^alpha * p for
/// alpha > 0, and tau = p - 1 for finite sets. Throws EmptyTerm.
Ordinal tau_of(const SetTerm& t);

/// Ordinal address of a member point: blocks of the term occupy consecutive
/// ordinal segments (lower-rank blocks first, so their mass is absorbed) and
/// every tower top maps to the supremum of its block. Injective, with
/// ordinal_of_point(t, max_point(t)) == tau_of(t) on single towers.
/// Throws NotMember; truncated symbolic attachments are not addressable and
/// throw InvalidTerm.
Ordinal ordinal_of_point(const SetTerm& t, const Rational& q);

/// Inverse of ordinal_of_point. Throws OutOfRange for delta > tau_of(t).
Rational point_of_ordinal(const SetTerm& t, const Ordinal& delta);

/// Homeomorphism test: true iff the characteristics coincide.
bool equivalent(const SetTerm& t1, const SetTerm& t2);

/// Explicit homeomorphism between equivalent terms, as the composition
/// through the common ordinal addressing. Total on members of t1.
/// Throws NotEquivalent when the characteristics differ.
std::function<Rational(const Rational&)> homeo_map(const SetTerm& t1, const SetTerm& t2);

}  // namespace cb

#endif

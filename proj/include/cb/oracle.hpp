#ifndef CB_ORACLE_HPP
#define CB_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cb/ordinal.hpp"

namespace cb {

/// The compact ordinal space [0, w^alpha * p] with the order topology.
struct OrdinalSpace {
  Ordinal alpha;
  std::uint64_t p = 1;  // >= 1

  Ordinal last() const { return omega_pow(alpha) * Ordinal(p); }
};

/// True iff delta is still present after beta derivatives of the space:
/// every point survives beta = 0, and for beta >= 1 exactly the nonzero
/// multiples of w^beta survive. Throws OutOfRange for delta > last().
bool member_after(const OrdinalSpace& space, const Ordinal& delta, const Ordinal& beta);

/// Number of survivors after beta derivatives: infinitely many (nullopt)
/// for beta < alpha, exactly p at beta = alpha, and none beyond.
std::optional<std::uint64_t> survivor_count(const OrdinalSpace& space, const Ordinal& beta);

/// The first `bound` survivors in increasing order; witnesses the count and,
/// when infinite, the injection k -> w^beta * k.
std::vector<Ordinal> survivors_upto(const OrdinalSpace& space, const Ordinal& beta,
                                    std::uint64_t bound);

}  // namespace cb

#endif

#include "cb/oracle.hpp"

namespace cb {

bool member_after(const OrdinalSpace& space, const Ordinal& delta, const Ordinal& beta) {
  if (delta > space.last()) throw OutOfRange("ordinal outside the space");
  if (beta.is_zero()) return true;
  return divides_omega_pow(beta, delta);
}

std::optional<std::uint64_t> survivor_count(const OrdinalSpace& space, const Ordinal& beta) {
  auto cmp = beta <=> space.alpha;
  if (cmp == std::strong_ordering::less) return std::nullopt;
  if (cmp == std::strong_ordering::equal) return space.p;
  return 0;
}

std::vector<Ordinal> survivors_upto(const OrdinalSpace& space, const Ordinal& beta,
                                    std::uint64_t bound) {
  std::vector<Ordinal> out;
  Ordinal power = omega_pow(beta);
  Ordinal limit = space.last();
  for (std::uint64_t k = 1; k <= bound; ++k) {
    Ordinal multiple = power * Ordinal(k);
    if (multiple > limit) break;
    out.push_back(std::move(multiple));
  }
  return out;
}

}  // namespace cb

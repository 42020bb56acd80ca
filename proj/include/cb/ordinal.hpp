#ifndef CB_ORDINAL_HPP
#define CB_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cb/errors.hpp"

namespace cb {

/// Ordinal below epsilon_0 in Cantor normal form:
///   w^{e_1}*c_1 + ... + w^{e_k}*c_k  with e_1 > ... > e_k and every c_i >= 1.
/// The empty sum is 0. The representation is canonical, so structural
/// equality coincides with ordinal equality and comparison is lexicographic
/// on the term list.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;                 // zero
  Ordinal(std::uint64_t n);            // NOLINT: finite ordinals convert implicitly

  static Ordinal omega();

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal; throws OutOfRange on infinite ones.
  std::uint64_t finite_value() const;

  bool is_successor() const;
  /// True iff nonzero with no finite part (every CNF exponent >= 1).
  bool is_limit() const;

  /// Leading exponent; requires nonzero.
  const Ordinal& head_exponent() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);

  /// Builds directly from CNF terms; asserts canonicity in debug builds.
  static Ordinal from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

/// w^e as a single CNF term.
Ordinal omega_pow(const Ordinal& e);

/// Predecessor of a successor ordinal. Throws NotSuccessor otherwise.
Ordinal pred(const Ordinal& a);

/// The unique c with b + c = a, for b <= a. Throws Underflow if b > a.
Ordinal left_subtract(const Ordinal& b, const Ordinal& a);

/// True iff delta is a nonzero multiple of w^beta, i.e. delta != 0 and the
/// smallest exponent in delta's CNF is >= beta.
bool divides_omega_pow(const Ordinal& beta, const Ordinal& delta);

/// n-th element of the canonical fundamental sequence of a nonzero limit
/// lambda: strictly increasing in n with supremum lambda. For a last CNF term
/// w^g*c this replaces it by w^g*(c-1) + w^{g-1}*n when g is a successor, and
/// by w^g*(c-1) + w^{g[n]} when g is a limit. Throws NotLimit otherwise.
Ordinal fundamental_sequence(const Ordinal& lambda, std::uint64_t n);

/// Per-child rank assignment for a canonical tower: either every child has
/// the same rank, or child ranks follow the fundamental sequence of a limit.
struct ConstRank {
  Ordinal rho;
};
struct FundamentalRank {
  Ordinal lambda;  // nonzero limit
};
using RankScheme = std::variant<ConstRank, FundamentalRank>;

/// Rank of the n-th child under the scheme.
Ordinal scheme_child_rank(const RankScheme& scheme, std::uint64_t n);
/// Rank of a tower built from the scheme: rho+1 for ConstRank, lambda for
/// FundamentalRank.
Ordinal scheme_rank(const RankScheme& scheme);
/// Validates the scheme (FundamentalRank requires a nonzero limit).
void check_scheme(const RankScheme& scheme);

bool operator==(const RankScheme& a, const RankScheme& b);

/// Coefficient sequence p_k = slope*k + intercept, intercept >= 1 so every
/// value is a positive integer. Covers the constant case with slope = 0.
struct AffineCoeffs {
  std::uint64_t slope = 0;
  std::uint64_t intercept = 1;

  std::uint64_t at(std::uint64_t k) const { return slope * k + intercept; }
};

/// Closed form of sup_n sum_{k<=n} w^{rank_k}*p_k over the scheme's child
/// ranks: w^{rho+1} for ConstRank(rho), w^{lambda} for FundamentalRank.
/// The coefficients only matter through being positive, which AffineCoeffs
/// guarantees.
Ordinal tau_closed_form(const RankScheme& scheme, const AffineCoeffs& coeffs);

/// Partial sum sum_{k<=n} w^{rank_k}*p_k, for tests pinning the closed form.
Ordinal tau_partial_sum(const RankScheme& scheme, const AffineCoeffs& coeffs, std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace cb

#endif

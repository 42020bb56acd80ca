#ifndef CB_SETTERM_HPP
#define CB_SETTERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cb/interval.hpp"
#include "cb/ordinal.hpp"
#include "cb/rational.hpp"

namespace cb {

class SetTerm;
struct AttachItem;

/// Infinite tower of child sets accumulating at hull.hi, in the fixed dyadic
/// embedding x_n = hi - (hi-lo)*2^{-(n+1)}: child m occupies (x_{m-1}, x_m]
/// and is the canonical tower of rank scheme_child_rank(scheme, m), with
/// `derived_by` derivatives already applied to every child. Children below
/// `alive_from` are gone. The top hull.hi is always a member.
struct TowerNode {
  Interval hull;
  RankScheme scheme;
  std::uint64_t alive_from = 0;
  Ordinal derived_by;
};

/// Cantor-Bendixson characteristic (alpha, p).
struct CBChar {
  Ordinal alpha;
  std::uint64_t p = 0;

  friend bool operator==(const CBChar& a, const CBChar& b) {
    return a.alpha == b.alpha && a.p == b.p;
  }
};

struct EnumeratedPoint {
  Rational point;
  std::vector<std::uint64_t> address;  // child indices from the root
  Ordinal rank;                        // largest beta with point in t^(beta)
};

/// Depth-truncated rendering of a term: strictly increasing in `point`,
/// monotone in depth, exhaustive in the limit.
using Enumeration = std::vector<EnumeratedPoint>;

enum class TermKind { Empty, Point, Tower, Union, Attach };

/// Symbolic compact countable subset of the real line. Immutable value type;
/// copies share structure and are safe to use across threads.
class SetTerm {
 public:
  struct AttachNode;

  SetTerm();

  static SetTerm empty();
  static SetTerm point(Rational q);
  static SetTerm tower(Interval hull, RankScheme scheme, std::uint64_t alive_from = 0,
                       Ordinal derived_by = Ordinal());
  /// Normalizes: drops empty parts, unwraps singletons, sorts by position,
  /// and rejects parts whose closed hulls touch or overlap.
  static SetTerm union_of(std::vector<SetTerm> parts);
  /// Finite glued attachment: towers ending at their attachment points.
  static SetTerm attach(std::vector<AttachItem> items);
  /// Truncated symbolic attachment: the term denotes the full countable
  /// attachment of rank-`pending_rank` towers at every isolated point of
  /// `rest`, with only `items` materialized; enumeration renders the
  /// explicit portion.
  static SetTerm attach(std::vector<AttachItem> items, SetTerm rest, Ordinal pending_rank);
  /// Empty / Point / Union-of-points from a finite list (deduplicated).
  static SetTerm finite_set(std::vector<Rational> points);

  TermKind kind() const;
  bool is_empty() const { return kind() == TermKind::Empty; }

  const Rational& point_value() const;
  const TowerNode& tower_node() const;
  const std::vector<SetTerm>& union_parts() const;
  const AttachNode& attach_node() const;

  friend bool operator==(const SetTerm& a, const SetTerm& b);

 private:
  struct Node;
  explicit SetTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One glued component of an Attach: a tower whose top is `point`, or the
/// bare point itself.
struct AttachItem {
  Rational point;
  std::optional<SetTerm> tower;
};

struct SetTerm::AttachNode {
  std::vector<AttachItem> items;  // sorted by point
  std::optional<SetTerm> rest;
  Ordinal pending_rank;
};

/// The set K from the inductive interval construction: K subset of (lo, hi]
/// with K^(rho) = {hi}. Point(hi) when rho = 0.
SetTerm canonical_tower(const Ordinal& rho, const Interval& hull);

/// A set with characteristic (alpha, p): Empty for p = 0, otherwise p
/// canonical towers in p equal-length subintervals of hull.
SetTerm realize(const Ordinal& alpha, std::uint64_t p, const Interval& hull);

/// One-step derived set (all limit points), staying inside the term grammar.
SetTerm derivative(const SetTerm& t);

/// beta-th derivative, computed by ordinal recursion on the structure rather
/// than step iteration; agrees with iterated `derivative` for finite beta.
SetTerm derivative_upto(const SetTerm& t, const Ordinal& beta);

CBChar cb_characteristic(const SetTerm& t);

/// Depth-d rendering: E_0 = {} for non-Point terms, E_d(Point q) = {q} for
/// d >= 1, and a tower at depth d renders its top plus the first d children
/// at depth d-1. Unions and attachments distribute.
Enumeration points(const SetTerm& t, std::uint64_t depth);

/// Exact membership, decided by descending the structure.
bool contains(const SetTerm& t, const Rational& q);

/// Least / greatest element of a nonempty term. Throws EmptyTerm.
Rational min_point(const SetTerm& t);
Rational max_point(const SetTerm& t);

/// x_n = hi - (hi-lo)*2^{-(n+1)}; n = -1 gives lo.
Rational tower_cut(const TowerNode& tw, std::int64_t n);
/// Remaining rank of the whole tower (its CB ordinal).
Ordinal tower_rank(const TowerNode& tw);
/// Remaining rank of child m (m >= alive_from).
Ordinal tower_child_rank(const TowerNode& tw, std::uint64_t m);
/// Child m as a term: Point(x_m) at remaining rank 0, else a derived tower.
SetTerm tower_child(const TowerNode& tw, std::uint64_t m);

}  // namespace cb

#endif

#include "cb/classify.hpp"

#include <algorithm>

namespace cb {

namespace {

// Blocks of a union-like term in addressing order: ascending characteristic
// rank, ties by real position. Putting low blocks first makes the cumulative
// offsets collapse onto [0, w^alpha * p] by left absorption.
std::vector<SetTerm> address_blocks(const std::vector<SetTerm>& parts) {
  std::vector<SetTerm> blocks = parts;
  std::stable_sort(blocks.begin(), blocks.end(), [](const SetTerm& a, const SetTerm& b) {
    return cb_characteristic(a).alpha < cb_characteristic(b).alpha;
  });
  return blocks;
}

std::vector<SetTerm> attach_components(const SetTerm::AttachNode& at) {
  if (at.rest) throw InvalidTerm("truncated symbolic attachment has no addressing");
  std::vector<SetTerm> comps;
  comps.reserve(at.items.size());
  for (const auto& item : at.items) {
    comps.push_back(item.tower ? *item.tower : SetTerm::point(item.point));
  }
  return comps;
}

Ordinal address_in_blocks(const std::vector<SetTerm>& blocks, const Rational& q) {
  Ordinal offset;
  for (const auto& block : blocks) {
    if (contains(block, q)) return offset + ordinal_of_point(block, q);
    offset = offset + tau_of(block) + Ordinal(1);
  }
  throw NotMember();
}

Rational point_in_blocks(const std::vector<SetTerm>& blocks, const Ordinal& delta) {
  Ordinal offset;
  for (const auto& block : blocks) {
    Ordinal end = offset + tau_of(block);
    if (delta <= end) return point_of_ordinal(block, left_subtract(offset, delta));
    offset = end + Ordinal(1);
  }
  throw OutOfRange("ordinal beyond the addressing range");
}

}  // namespace

Ordinal tau_of(const SetTerm& t) {
  CBChar c = cb_characteristic(t);
  if (c.p == 0) throw EmptyTerm();
  if (c.alpha.is_zero()) return Ordinal(c.p - 1);
  return omega_pow(c.alpha) * Ordinal(c.p);
}

Ordinal ordinal_of_point(const SetTerm& t, const Rational& q) {
  switch (t.kind()) {
    case TermKind::Empty: throw NotMember();
    case TermKind::Point:
      if (t.point_value() == q) return Ordinal(0);
      throw NotMember();
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      if (q == tw.hull.hi) return tau_of(t);
      if (!(tw.hull.lo < q && q < tw.hull.hi)) throw NotMember();
      std::uint64_t m = 0;
      while (tower_cut(tw, std::int64_t(m)) < q) ++m;
      if (m < tw.alive_from) throw NotMember();
      Ordinal offset;
      for (std::uint64_t j = tw.alive_from; j < m; ++j) {
        Ordinal r = tower_child_rank(tw, j);
        if (!r.is_zero()) offset = offset + omega_pow(r);
        offset = offset + Ordinal(1);
      }
      return offset + ordinal_of_point(tower_child(tw, m), q);
    }
    case TermKind::Union: return address_in_blocks(address_blocks(t.union_parts()), q);
    case TermKind::Attach:
      return address_in_blocks(address_blocks(attach_components(t.attach_node())), q);
  }
  throw NotMember();
}

Rational point_of_ordinal(const SetTerm& t, const Ordinal& delta) {
  Ordinal tau = tau_of(t);
  if (delta > tau) throw OutOfRange("ordinal beyond the addressing range");
  switch (t.kind()) {
    case TermKind::Empty: throw EmptyTerm();
    case TermKind::Point: return t.point_value();
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      if (delta == tau) return tw.hull.hi;
      Ordinal offset;
      for (std::uint64_t j = tw.alive_from;; ++j) {
        Ordinal r = tower_child_rank(tw, j);
        Ordinal end = r.is_zero() ? offset : offset + omega_pow(r);
        if (delta <= end) {
          return point_of_ordinal(tower_child(tw, j), left_subtract(offset, delta));
        }
        offset = end + Ordinal(1);
      }
    }
    case TermKind::Union: return point_in_blocks(address_blocks(t.union_parts()), delta);
    case TermKind::Attach:
      return point_in_blocks(address_blocks(attach_components(t.attach_node())), delta);
  }
  throw OutOfRange("unreachable");
}

bool equivalent(const SetTerm& t1, const SetTerm& t2) {
  return cb_characteristic(t1) == cb_characteristic(t2);
}

std::function<Rational(const Rational&)> homeo_map(const SetTerm& t1, const SetTerm& t2) {
  if (!equivalent(t1, t2)) throw NotEquivalent();
  return [t1, t2](const Rational& q) { return point_of_ordinal(t2, ordinal_of_point(t1, q)); };
}

}  // namespace cb

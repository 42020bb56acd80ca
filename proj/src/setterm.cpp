#include "cb/setterm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <variant>

namespace cb {

namespace {
struct EmptyNode {};
struct PointNode {
  Rational q;
};
struct UnionNode {
  std::vector<SetTerm> parts;  // sorted by position, pairwise positive gaps
};
}  // namespace

struct SetTerm::Node {
  std::variant<EmptyNode, PointNode, TowerNode, UnionNode, AttachNode> v;
};

TermKind SetTerm::kind() const {
  switch (node_->v.index()) {
    case 0: return TermKind::Empty;
    case 1: return TermKind::Point;
    case 2: return TermKind::Tower;
    case 3: return TermKind::Union;
    default: return TermKind::Attach;
  }
}

const Rational& SetTerm::point_value() const { return std::get<PointNode>(node_->v).q; }
const TowerNode& SetTerm::tower_node() const { return std::get<TowerNode>(node_->v); }
const std::vector<SetTerm>& SetTerm::union_parts() const {
  return std::get<UnionNode>(node_->v).parts;
}
const SetTerm::AttachNode& SetTerm::attach_node() const {
  return std::get<AttachNode>(node_->v);
}

SetTerm::SetTerm() : SetTerm(empty()) {}

SetTerm SetTerm::empty() {
  return SetTerm(std::make_shared<const Node>(Node{EmptyNode{}}));
}

SetTerm SetTerm::point(Rational q) {
  return SetTerm(std::make_shared<const Node>(Node{PointNode{std::move(q)}}));
}

SetTerm SetTerm::tower(Interval hull, RankScheme scheme, std::uint64_t alive_from,
                       Ordinal derived_by) {
  check_scheme(scheme);
  if (!(derived_by < scheme_rank(scheme))) {
    throw InvalidTerm("tower fully derived away; use Point or Empty");
  }
  if (scheme_child_rank(scheme, alive_from) < derived_by) {
    throw InvalidTerm("alive_from must skip children consumed by derivation");
  }
  return SetTerm(std::make_shared<const Node>(
      Node{TowerNode{std::move(hull), std::move(scheme), alive_from, std::move(derived_by)}}));
}

SetTerm SetTerm::union_of(std::vector<SetTerm> parts) {
  std::vector<SetTerm> kept;
  for (auto& p : parts) {
    if (p.is_empty()) continue;
    if (p.kind() == TermKind::Union) {
      for (const auto& sub : p.union_parts()) kept.push_back(sub);
    } else {
      kept.push_back(std::move(p));
    }
  }
  if (kept.empty()) return empty();
  if (kept.size() == 1) return kept[0];
  std::sort(kept.begin(), kept.end(),
            [](const SetTerm& a, const SetTerm& b) { return min_point(a) < min_point(b); });
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    if (!(max_point(kept[i]) < min_point(kept[i + 1]))) {
      throw InvalidTerm("union parts must have pairwise disjoint hulls with positive gaps");
    }
  }
  return SetTerm(std::make_shared<const Node>(Node{UnionNode{std::move(kept)}}));
}

namespace {

void validate_attach_items(std::vector<AttachItem>& items) {
  std::sort(items.begin(), items.end(),
            [](const AttachItem& a, const AttachItem& b) { return a.point < b.point; });
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.tower) {
      if (it.tower->is_empty()) throw InvalidTerm("attached tower must be nonempty");
      if (!(max_point(*it.tower) == it.point)) {
        throw InvalidTerm("attached tower must end at its attachment point");
      }
    }
    if (i > 0) {
      Rational prev_max = items[i - 1].point;
      Rational cur_min = it.tower ? min_point(*it.tower) : it.point;
      if (!(prev_max < cur_min)) {
        throw InvalidTerm("attachment components must be pairwise disjoint");
      }
    }
  }
}

}  // namespace

SetTerm SetTerm::attach(std::vector<AttachItem> items) {
  if (items.empty()) return empty();
  validate_attach_items(items);
  return SetTerm(std::make_shared<const Node>(
      Node{AttachNode{std::move(items), std::nullopt, Ordinal()}}));
}

SetTerm SetTerm::attach(std::vector<AttachItem> items, SetTerm rest, Ordinal pending_rank) {
  validate_attach_items(items);
  if (rest.is_empty()) throw InvalidTerm("attachment base term must be nonempty");
  if (pending_rank.is_zero()) {
    throw InvalidTerm("symbolic attachment requires a positive pending rank");
  }
  // The explicit towers stand in for the implicit ones, so they must all be
  // genuine towers of exactly the pending rank.
  for (const auto& item : items) {
    if (!item.tower || item.tower->kind() != TermKind::Tower ||
        !(tower_rank(item.tower->tower_node()) == pending_rank)) {
      throw InvalidTerm("symbolic attachment items must be towers of the pending rank");
    }
  }
  return SetTerm(std::make_shared<const Node>(
      Node{AttachNode{std::move(items), std::move(rest), std::move(pending_rank)}}));
}

SetTerm SetTerm::finite_set(std::vector<Rational> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return empty();
  if (pts.size() == 1) return point(pts[0]);
  std::vector<SetTerm> parts;
  parts.reserve(pts.size());
  for (auto& q : pts) parts.push_back(point(std::move(q)));
  return union_of(std::move(parts));
}

bool operator==(const SetTerm& a, const SetTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Empty: return true;
    case TermKind::Point: return a.point_value() == b.point_value();
    case TermKind::Tower: {
      const auto& x = a.tower_node();
      const auto& y = b.tower_node();
      return x.hull == y.hull && x.scheme == y.scheme && x.alive_from == y.alive_from &&
             x.derived_by == y.derived_by;
    }
    case TermKind::Union: {
      const auto& x = a.union_parts();
      const auto& y = b.union_parts();
      return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
    }
    case TermKind::Attach: {
      const auto& x = a.attach_node();
      const auto& y = b.attach_node();
      if (x.items.size() != y.items.size()) return false;
      for (std::size_t i = 0; i < x.items.size(); ++i) {
        if (!(x.items[i].point == y.items[i].point)) return false;
        if (x.items[i].tower.has_value() != y.items[i].tower.has_value()) return false;
        if (x.items[i].tower && !(*x.items[i].tower == *y.items[i].tower)) return false;
      }
      if (x.rest.has_value() != y.rest.has_value()) return false;
      if (x.rest && !(*x.rest == *y.rest)) return false;
      return !x.rest || x.pending_rank == y.pending_rank;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Tower geometry and children.

Rational tower_cut(const TowerNode& tw, std::int64_t n) {
  if (n < 0) return tw.hull.lo;
  // hi - (hi-lo) / 2^{n+1}
  Rational len = tw.hull.length();
  std::int64_t shift = n + 1;
  if (shift >= 62) throw std::overflow_error("tower child index too deep for exact dyadics");
  return tw.hull.hi - len / Rational(std::int64_t(1) << shift);
}

Ordinal tower_rank(const TowerNode& tw) {
  return left_subtract(tw.derived_by, scheme_rank(tw.scheme));
}

Ordinal tower_child_rank(const TowerNode& tw, std::uint64_t m) {
  return left_subtract(tw.derived_by, scheme_child_rank(tw.scheme, m));
}

namespace {

// Scheme of the canonical tower of rank rho >= 1 built on an interval.
RankScheme child_scheme(const Ordinal& rho) {
  if (rho.is_successor()) return ConstRank{pred(rho)};
  return FundamentalRank{rho};
}

// First index >= from whose base child rank is >= derived_by.
std::uint64_t first_live_index(const RankScheme& scheme, std::uint64_t from,
                               const Ordinal& derived_by) {
  std::uint64_t m = from;
  while (scheme_child_rank(scheme, m) < derived_by) ++m;
  return m;
}

}  // namespace

SetTerm tower_child(const TowerNode& tw, std::uint64_t m) {
  assert(m >= tw.alive_from);
  Ordinal base = scheme_child_rank(tw.scheme, m);
  Interval slot(tower_cut(tw, std::int64_t(m) - 1), tower_cut(tw, std::int64_t(m)));
  if (base == tw.derived_by) return SetTerm::point(slot.hi);
  RankScheme scheme = child_scheme(base);
  std::uint64_t af = first_live_index(scheme, 0, tw.derived_by);
  return SetTerm::tower(std::move(slot), std::move(scheme), af, tw.derived_by);
}

// ---------------------------------------------------------------------------
// Construction.

SetTerm canonical_tower(const Ordinal& rho, const Interval& hull) {
  if (rho.is_zero()) return SetTerm::point(hull.hi);
  return SetTerm::tower(hull, child_scheme(rho));
}

SetTerm realize(const Ordinal& alpha, std::uint64_t p, const Interval& hull) {
  if (p == 0) return SetTerm::empty();
  if (p == 1) return canonical_tower(alpha, hull);
  Rational len = hull.length() / Rational(std::int64_t(p));
  std::vector<SetTerm> parts;
  parts.reserve(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    Rational lo = hull.lo + len * Rational(std::int64_t(k));
    parts.push_back(canonical_tower(alpha, Interval(lo, lo + len)));
  }
  return SetTerm::union_of(std::move(parts));
}

// ---------------------------------------------------------------------------
// Extremes.

Rational min_point(const SetTerm& t) {
  switch (t.kind()) {
    case TermKind::Empty: throw EmptyTerm();
    case TermKind::Point: return t.point_value();
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      return min_point(tower_child(tw, tw.alive_from));
    }
    case TermKind::Union: return min_point(t.union_parts().front());
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      std::optional<Rational> best;
      if (!at.items.empty()) {
        const auto& it = at.items.front();
        best = it.tower ? min_point(*it.tower) : it.point;
      }
      if (at.rest) {
        Rational r = min_point(*at.rest);
        if (!best || r < *best) best = r;
      }
      if (!best) throw EmptyTerm();
      return *best;
    }
  }
  throw EmptyTerm();
}

Rational max_point(const SetTerm& t) {
  switch (t.kind()) {
    case TermKind::Empty: throw EmptyTerm();
    case TermKind::Point: return t.point_value();
    case TermKind::Tower: return t.tower_node().hull.hi;
    case TermKind::Union: return max_point(t.union_parts().back());
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      std::optional<Rational> best;
      if (!at.items.empty()) best = at.items.back().point;
      if (at.rest) {
        Rational r = max_point(*at.rest);
        if (!best || r > *best) best = r;
      }
      if (!best) throw EmptyTerm();
      return *best;
    }
  }
  throw EmptyTerm();
}

// ---------------------------------------------------------------------------
// Characteristic.

CBChar cb_characteristic(const SetTerm& t) {
  switch (t.kind()) {
    case TermKind::Empty: return CBChar{Ordinal(0), 0};
    case TermKind::Point: return CBChar{Ordinal(0), 1};
    case TermKind::Tower: return CBChar{tower_rank(t.tower_node()), 1};
    case TermKind::Union: {
      CBChar acc{Ordinal(0), 0};
      bool first = true;
      for (const auto& part : t.union_parts()) {
        CBChar c = cb_characteristic(part);
        if (first || c.alpha > acc.alpha) {
          acc = c;
          first = false;
        } else if (c.alpha == acc.alpha) {
          acc.p += c.p;
        }
      }
      return acc;
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      if (at.rest) {
        CBChar inner = cb_characteristic(*at.rest);
        return CBChar{at.pending_rank + inner.alpha, inner.p};
      }
      CBChar acc{Ordinal(0), 0};
      bool first = true;
      for (const auto& item : at.items) {
        CBChar c = item.tower ? cb_characteristic(*item.tower) : CBChar{Ordinal(0), 1};
        if (first || c.alpha > acc.alpha) {
          acc = c;
          first = false;
        } else if (c.alpha == acc.alpha) {
          acc.p += c.p;
        }
      }
      return acc;
    }
  }
  return CBChar{Ordinal(0), 0};
}

// ---------------------------------------------------------------------------
// Derivatives.

namespace {

// Derives the components of a finite attachment. Components that still reach
// their attachment point stay glued; anything else (possible only for
// non-canonical glued terms) survives as a loose part of a surrounding union.
struct DerivedComponents {
  std::vector<AttachItem> items;
  std::vector<SetTerm> loose;
};

void derive_component(const AttachItem& item, const Ordinal& beta, DerivedComponents& out) {
  if (!item.tower) return;  // bare point is isolated
  SetTerm dt = derivative_upto(*item.tower, beta);
  if (dt.is_empty()) return;
  if (!(max_point(dt) == item.point)) {
    out.loose.push_back(std::move(dt));
  } else if (dt.kind() == TermKind::Point) {
    out.items.push_back(AttachItem{item.point, std::nullopt});
  } else {
    out.items.push_back(AttachItem{item.point, std::move(dt)});
  }
}

SetTerm rebuild_attach(DerivedComponents&& parts) {
  bool any_tower = false;
  for (const auto& item : parts.items) any_tower = any_tower || item.tower.has_value();
  SetTerm glued;
  if (!any_tower) {
    std::vector<Rational> pts;
    pts.reserve(parts.items.size());
    for (auto& item : parts.items) pts.push_back(item.point);
    glued = SetTerm::finite_set(std::move(pts));
  } else {
    glued = SetTerm::attach(std::move(parts.items));
  }
  if (parts.loose.empty()) return glued;
  parts.loose.push_back(std::move(glued));
  return SetTerm::union_of(std::move(parts.loose));
}

}  // namespace

SetTerm derivative(const SetTerm& t) {
  switch (t.kind()) {
    case TermKind::Empty:
    case TermKind::Point: return SetTerm::empty();
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      if (tower_rank(tw) == Ordinal(1)) return SetTerm::point(tw.hull.hi);
      Ordinal next = tw.derived_by + Ordinal(1);
      std::uint64_t af = first_live_index(tw.scheme, tw.alive_from, next);
      return SetTerm::tower(tw.hull, tw.scheme, af, std::move(next));
    }
    case TermKind::Union: {
      std::vector<SetTerm> parts;
      for (const auto& part : t.union_parts()) parts.push_back(derivative(part));
      return SetTerm::union_of(std::move(parts));
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      if (at.rest && at.pending_rank == Ordinal(1)) return *at.rest;
      DerivedComponents parts;
      for (const auto& item : at.items) derive_component(item, Ordinal(1), parts);
      if (at.rest) {
        return SetTerm::attach(std::move(parts.items), *at.rest,
                               left_subtract(Ordinal(1), at.pending_rank));
      }
      return rebuild_attach(std::move(parts));
    }
  }
  return SetTerm::empty();
}

SetTerm derivative_upto(const SetTerm& t, const Ordinal& beta) {
  if (beta.is_zero()) return t;
  switch (t.kind()) {
    case TermKind::Empty:
    case TermKind::Point: return SetTerm::empty();
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      Ordinal rank = tower_rank(tw);
      if (beta > rank) return SetTerm::empty();
      if (beta == rank) return SetTerm::point(tw.hull.hi);
      Ordinal next = tw.derived_by + beta;
      std::uint64_t af = first_live_index(tw.scheme, tw.alive_from, next);
      return SetTerm::tower(tw.hull, tw.scheme, af, std::move(next));
    }
    case TermKind::Union: {
      std::vector<SetTerm> parts;
      for (const auto& part : t.union_parts()) parts.push_back(derivative_upto(part, beta));
      return SetTerm::union_of(std::move(parts));
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      if (at.rest) {
        if (beta == at.pending_rank) return *at.rest;
        if (beta > at.pending_rank) {
          return derivative_upto(*at.rest, left_subtract(at.pending_rank, beta));
        }
        DerivedComponents parts;
        for (const auto& item : at.items) derive_component(item, beta, parts);
        return SetTerm::attach(std::move(parts.items), *at.rest,
                               left_subtract(beta, at.pending_rank));
      }
      DerivedComponents parts;
      for (const auto& item : at.items) derive_component(item, beta, parts);
      return rebuild_attach(std::move(parts));
    }
  }
  return SetTerm::empty();
}

// ---------------------------------------------------------------------------
// Enumeration and membership.

namespace {

struct Collector {
  // Keyed by point; keeps the highest rank seen for a point (an attachment
  // top also occurs inside the base term of a symbolic attachment).
  std::map<Rational, EnumeratedPoint> rows;

  void add(Rational q, std::vector<std::uint64_t> address, Ordinal rank) {
    auto it = rows.find(q);
    if (it == rows.end()) {
      rows.emplace(q, EnumeratedPoint{std::move(q), std::move(address), std::move(rank)});
    } else if (rank > it->second.rank) {
      it->second.address = std::move(address);
      it->second.rank = std::move(rank);
    }
  }
};

void collect(const SetTerm& t, std::uint64_t depth, std::vector<std::uint64_t>& prefix,
             const Ordinal& rank_offset, Collector& out) {
  switch (t.kind()) {
    case TermKind::Empty: return;
    case TermKind::Point:
      if (depth >= 1) out.add(t.point_value(), prefix, rank_offset);
      return;
    case TermKind::Tower: {
      if (depth == 0) return;
      const auto& tw = t.tower_node();
      out.add(tw.hull.hi, prefix, rank_offset + tower_rank(tw));
      for (std::uint64_t j = 0; j < depth; ++j) {
        std::uint64_t m = tw.alive_from + j;
        prefix.push_back(m);
        collect(tower_child(tw, m), depth - 1, prefix, rank_offset, out);
        prefix.pop_back();
      }
      return;
    }
    case TermKind::Union: {
      const auto& parts = t.union_parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        prefix.push_back(i);
        collect(parts[i], depth, prefix, rank_offset, out);
        prefix.pop_back();
      }
      return;
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      for (std::size_t i = 0; i < at.items.size(); ++i) {
        prefix.push_back(i);
        if (at.items[i].tower) {
          collect(*at.items[i].tower, depth, prefix, rank_offset, out);
        } else if (depth >= 1) {
          out.add(at.items[i].point, prefix, rank_offset);
        }
        prefix.pop_back();
      }
      if (at.rest) {
        prefix.push_back(at.items.size());
        collect(*at.rest, depth, prefix, rank_offset + at.pending_rank, out);
        prefix.pop_back();
      }
      return;
    }
  }
}

}  // namespace

Enumeration points(const SetTerm& t, std::uint64_t depth) {
  Collector out;
  std::vector<std::uint64_t> prefix;
  collect(t, depth, prefix, Ordinal(0), out);
  Enumeration result;
  result.reserve(out.rows.size());
  for (auto& [q, row] : out.rows) result.push_back(std::move(row));
  return result;
}

bool contains(const SetTerm& t, const Rational& q) {
  switch (t.kind()) {
    case TermKind::Empty: return false;
    case TermKind::Point: return t.point_value() == q;
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      if (q == tw.hull.hi) return true;
      if (!(tw.hull.lo < q && q < tw.hull.hi)) return false;
      std::uint64_t m = 0;
      while (tower_cut(tw, std::int64_t(m)) < q) ++m;
      if (m < tw.alive_from) return false;
      return contains(tower_child(tw, m), q);
    }
    case TermKind::Union: {
      for (const auto& part : t.union_parts()) {
        if (q <= max_point(part)) return q >= min_point(part) && contains(part, q);
      }
      return false;
    }
    case TermKind::Attach: {
      const auto& at = t.attach_node();
      for (const auto& item : at.items) {
        if (q == item.point) return true;
        if (item.tower && q >= min_point(*item.tower) && q <= item.point) {
          return contains(*item.tower, q);
        }
      }
      return at.rest && contains(*at.rest, q);
    }
  }
  return false;
}

}  // namespace cb

#include "cb/primitive.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace cb {

namespace {

Rational cap_for_index(std::uint64_t n) {
  return Rational(1, std::int64_t(n) + 2);
}

Rational radius_from(std::uint64_t n, const std::optional<Rational>& below_gap,
                     const std::optional<Rational>& above_gap) {
  Rational r = cap_for_index(n);
  if (below_gap) r = min(r, *below_gap / Rational(2));
  if (above_gap) r = min(r, *above_gap / Rational(2));
  return r;
}

// Structural gap bounds around the point reached by `address`: a lower bound
// below which no point of the term lies closer, and the exact nearest member
// above, when one exists inside the term.
struct GapBounds {
  std::optional<Rational> below;  // largest value with no term point in (below, x)
  std::optional<Rational> above;  // smallest term point > x
};

GapBounds gap_bounds(const SetTerm& t, const std::vector<std::uint64_t>& address,
                     std::size_t at, GapBounds ambient) {
  switch (t.kind()) {
    case TermKind::Point: return ambient;
    case TermKind::Tower: {
      const auto& tw = t.tower_node();
      if (at == address.size()) return ambient;  // the top itself
      std::uint64_t m = address[at];
      GapBounds inner;
      inner.below = tower_cut(tw, std::int64_t(m) - 1);
      inner.above = min_point(tower_child(tw, m + 1));
      return gap_bounds(tower_child(tw, m), address, at + 1, inner);
    }
    case TermKind::Union: {
      const auto& parts = t.union_parts();
      std::uint64_t i = address[at];
      GapBounds inner = ambient;
      if (i > 0) inner.below = max_point(parts[i - 1]);
      if (i + 1 < parts.size()) inner.above = min_point(parts[i + 1]);
      return gap_bounds(parts[i], address, at + 1, inner);
    }
    case TermKind::Attach: {
      const auto& at_node = t.attach_node();
      std::uint64_t i = address[at];
      GapBounds inner = ambient;
      if (i > 0) inner.below = at_node.items[i - 1].point;
      if (i + 1 < at_node.items.size()) {
        const auto& next = at_node.items[i + 1];
        inner.above = next.tower ? min_point(*next.tower) : next.point;
      }
      const auto& item = at_node.items[i];
      if (!item.tower) return inner;
      return gap_bounds(*item.tower, address, at + 1, inner);
    }
    default: throw InvalidTerm("address does not descend the term");
  }
}

}  // namespace

std::vector<IsolatedPointCert> isolated_points(const std::vector<Rational>& finite_set) {
  std::vector<Rational> pts = finite_set;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw EmptyInput();
  std::vector<IsolatedPointCert> certs;
  certs.reserve(pts.size());
  for (std::size_t n = 0; n < pts.size(); ++n) {
    std::optional<Rational> gap;
    if (n > 0) gap = pts[n] - pts[n - 1];
    if (n + 1 < pts.size()) {
      Rational up = pts[n + 1] - pts[n];
      gap = gap ? min(*gap, up) : up;
    }
    Rational r = cap_for_index(n);
    if (gap) r = min(r, *gap / Rational(2));
    certs.push_back(IsolatedPointCert{pts[n], std::move(r)});
  }
  return certs;
}

std::vector<IsolatedPointCert> isolated_points(const SetTerm& t, std::uint64_t limit) {
  if (t.is_empty()) throw EmptyInput();
  if (t.kind() == TermKind::Attach && t.attach_node().rest) {
    throw InvalidTerm("isolated points of a truncated symbolic attachment are not enumerable");
  }
  // Generator order: first appearance across increasing depth, position order
  // within one depth.
  std::vector<EnumeratedPoint> found;
  std::set<Rational> seen;
  std::size_t rendered = 0;
  for (std::uint64_t d = 1; found.size() < limit && d < 64; ++d) {
    Enumeration rows = points(t, d);
    for (const auto& row : rows) {
      if (!row.rank.is_zero()) continue;
      if (!seen.insert(row.point).second) continue;
      found.push_back(row);
      if (found.size() == limit) break;
    }
    // A rendering that stopped growing has exhausted a finite term.
    if (rows.size() == rendered) break;
    rendered = rows.size();
  }
  std::vector<IsolatedPointCert> certs;
  certs.reserve(found.size());
  for (std::size_t n = 0; n < found.size(); ++n) {
    GapBounds bounds = gap_bounds(t, found[n].address, 0, GapBounds{});
    std::optional<Rational> below_gap;
    if (bounds.below) below_gap = found[n].point - *bounds.below;
    std::optional<Rational> above_gap;
    if (bounds.above) above_gap = *bounds.above - found[n].point;
    certs.push_back(IsolatedPointCert{found[n].point, radius_from(n, below_gap, above_gap)});
  }
  return certs;
}

SetTerm primitive_of(const std::vector<Rational>& finite_set, const Ordinal& alpha) {
  std::vector<Rational> pts = finite_set;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return SetTerm::empty();
  if (alpha.is_zero()) return SetTerm::finite_set(std::move(pts));
  std::vector<AttachItem> items;
  items.reserve(pts.size());
  for (const auto& cert : isolated_points(pts)) {
    Interval hull(cert.point - cert.radius, cert.point);
    items.push_back(AttachItem{cert.point, canonical_tower(alpha, hull)});
  }
  return SetTerm::attach(std::move(items));
}

SetTerm primitive_of_term(const SetTerm& t, const Ordinal& alpha, std::uint64_t depth) {
  if (t.is_empty()) throw EmptyInput();
  if (alpha.is_zero()) return t;
  std::vector<AttachItem> items;
  for (const auto& cert : isolated_points(t, depth)) {
    Interval hull(cert.point - cert.radius, cert.point);
    items.push_back(AttachItem{cert.point, canonical_tower(alpha, hull)});
  }
  return SetTerm::attach(std::move(items), t, alpha);
}

}  // namespace cb

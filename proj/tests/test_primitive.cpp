#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cb/classify.hpp"
#include "cb/primitive.hpp"
#include "test_util.hpp"

using cb::canonical_tower;
using cb::CBChar;
using cb::derivative_upto;
using cb::Interval;
using cb::isolated_points;
using cb::Ordinal;
using cb::primitive_of;
using cb::primitive_of_term;
using cb::Rational;
using cb::SetTerm;
using cbtest::point_set;

namespace {
const Ordinal w = Ordinal::omega();
const Interval unit{Rational(0), Rational(1)};

bool cert_is_legal(const cb::IsolatedPointCert& cert, std::size_t index) {
  return Rational(0) < cert.radius && cert.radius < Rational(1, std::int64_t(index) + 1);
}
}  // namespace

TEST_CASE("certificates for finite sets") {
  auto certs = isolated_points(std::vector<Rational>{Rational(0), Rational(1)});
  REQUIRE(certs.size() == 2);
  CHECK(certs[0].point == Rational(0));
  CHECK(certs[0].radius <= Rational(1, 2));
  CHECK(certs[1].radius <= Rational(1, 3));
  for (std::size_t n = 0; n < certs.size(); ++n) {
    CHECK(cert_is_legal(certs[n], n));
    CHECK(certs[n].radius <= Rational(1, 2));  // half the gap between 0 and 1
  }
  CHECK_THROWS_AS(isolated_points(std::vector<Rational>{}), cb::EmptyInput);
}

TEST_CASE("certificates for terms") {
  auto single = isolated_points(SetTerm::point(Rational(5, 2)), 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].point == Rational(5, 2));
  CHECK(cert_is_legal(single[0], 0));

  // The x_n leaves of a rank-1 tower are isolated; the top never is.
  auto certs = isolated_points(canonical_tower(Ordinal(1), unit), 3);
  REQUIRE(certs.size() == 3);
  std::set<Rational> got;
  for (std::size_t n = 0; n < certs.size(); ++n) {
    got.insert(certs[n].point);
    CHECK(cert_is_legal(certs[n], n));
  }
  CHECK(got == std::set<Rational>{Rational(1, 2), Rational(3, 4), Rational(7, 8)});

  // Radii respect the structural gaps: the certified ball holds no other
  // rendered point.
  auto deep = point_set(canonical_tower(Ordinal(1), unit), 8);
  for (const auto& cert : certs) {
    for (const auto& q : deep) {
      if (q == cert.point) continue;
      CHECK((q - cert.point).abs() >= cert.radius);
    }
  }
}

TEST_CASE("primitive of a finite set") {
  CHECK(primitive_of({}, w).is_empty());
  CHECK(primitive_of({Rational(3)}, Ordinal(0)) == SetTerm::point(Rational(3)));

  SetTerm one = primitive_of({Rational(0)}, Ordinal(1));
  CHECK(point_set(derivative_upto(one, Ordinal(1)), 1) == std::set<Rational>{Rational(0)});

  SetTerm two = primitive_of({Rational(0), Rational(1)}, w);
  CHECK(cb_characteristic(two) == CBChar{w, 2});
  for (std::uint64_t d = 1; d <= 5; ++d) {
    CHECK(point_set(derivative_upto(two, w), d) ==
          std::set<Rational>{Rational(0), Rational(1)});
  }
}

TEST_CASE("primitive round trip over random finite sets") {
  std::mt19937 rng(103);
  std::uniform_int_distribution<int> size(1, 6);
  for (int i = 0; i < 60; ++i) {
    std::set<Rational> f;
    int n = size(rng);
    for (int k = 0; k < n; ++k) f.insert(cbtest::random_rational(rng));
    std::vector<Rational> pts(f.begin(), f.end());
    for (const auto& alpha : cbtest::alpha_grid()) {
      SetTerm primitive = primitive_of(pts, alpha);
      SetTerm back = derivative_upto(primitive, alpha);
      for (std::uint64_t d = 1; d <= 4; ++d) {
        CHECK(point_set(back, d) == f);
      }
      if (!alpha.is_zero()) {
        CHECK(cb_characteristic(primitive) == CBChar{alpha, pts.size()});
        // Attachment hulls are pairwise disjoint and inside [min - 1, max].
        const auto& items = primitive.attach_node().items;
        for (std::size_t j = 0; j < items.size(); ++j) {
          REQUIRE(items[j].tower.has_value());
          CHECK(max_point(*items[j].tower) == items[j].point);
          if (j > 0) CHECK(items[j - 1].point < min_point(*items[j].tower));
        }
        CHECK(min_point(primitive) > *f.begin() - Rational(1));
        CHECK(max_point(primitive) == *f.rbegin());
      }
    }
  }
}

TEST_CASE("intermediate derivatives keep the base set") {
  std::vector<Rational> f{Rational(-1), Rational(1, 2), Rational(2)};
  std::set<Rational> fset(f.begin(), f.end());
  Ordinal alpha = w + Ordinal(1);
  SetTerm primitive = primitive_of(f, alpha);
  std::vector<Ordinal> betas = {Ordinal(1), Ordinal(2), w};
  for (const auto& beta : betas) {
    SetTerm derived = derivative_upto(primitive, beta);
    auto pts = point_set(derived, 4);
    for (const auto& q : fset) CHECK(pts.count(q) == 1);
    // What is left is the union of the derived towers glued at f.
    const auto& items = derived.attach_node().items;
    REQUIRE(items.size() == f.size());
    for (const auto& item : items) {
      REQUIRE(item.tower.has_value());
      CHECK(cb_characteristic(*item.tower).alpha == cb::left_subtract(beta, alpha));
    }
  }
}

TEST_CASE("symbolic primitive") {
  // Consistency with the finite case on a single point.
  SetTerm from_term = primitive_of_term(SetTerm::point(Rational(7)), w, 1);
  SetTerm from_set = primitive_of({Rational(7)}, w);
  CHECK(cb_characteristic(from_term) == cb_characteristic(from_set));
  CHECK(point_set(derivative_upto(from_term, w), 3) ==
        point_set(derivative_upto(from_set, w), 3));

  // Towers glued at the first three isolated points of a rank-1 tower.
  SetTerm base = canonical_tower(Ordinal(1), unit);
  SetTerm glued = primitive_of_term(base, Ordinal(1), 3);
  const auto& node = glued.attach_node();
  REQUIRE(node.items.size() == 3);
  std::set<Rational> attach_points;
  for (const auto& item : node.items) {
    REQUIRE(item.tower.has_value());
    attach_points.insert(item.point);
  }
  CHECK(attach_points == std::set<Rational>{Rational(1, 2), Rational(3, 4), Rational(7, 8)});
  REQUIRE(node.rest.has_value());
  CHECK(*node.rest == base);

  // The alpha-th derivative returns the base term exactly.
  CHECK(derivative_upto(glued, Ordinal(1)) == base);
  CHECK(cb_characteristic(glued) == CBChar{Ordinal(1) + Ordinal(1), 1});

  // Depth-d points of the base survive every derivative up to alpha.
  std::vector<Ordinal> alphas = {Ordinal(1), Ordinal(2), w};
  for (const auto& alpha : alphas) {
    SetTerm g = primitive_of_term(base, alpha, 3);
    std::vector<Ordinal> betas = {Ordinal(1), alpha};
    for (const auto& beta : betas) {
      if (beta > alpha) continue;
      auto surviving = point_set(derivative_upto(g, beta), 4);
      for (const auto& q : point_set(base, 3)) CHECK(surviving.count(q) == 1);
    }
  }

  CHECK_THROWS_AS(primitive_of_term(SetTerm::empty(), w, 2), cb::EmptyInput);
}

TEST_CASE("stepwise and closed-form derivatives agree on glued terms") {
  SetTerm finite = primitive_of({Rational(0), Rational(3)}, Ordinal(3));
  SetTerm symbolic = primitive_of_term(canonical_tower(Ordinal(1), unit), w, 2);
  for (const auto& t : {finite, symbolic}) {
    SetTerm stepped = t;
    for (std::uint64_t n = 1; n <= 3; ++n) {
      stepped = derivative(stepped);
      CHECK(stepped == derivative_upto(t, Ordinal(n)));
    }
  }
}

TEST_CASE("truncated symbolic attachments have no addressing") {
  SetTerm glued = primitive_of_term(canonical_tower(Ordinal(1), unit), Ordinal(2), 2);
  CHECK_THROWS_AS(cb::ordinal_of_point(glued, Rational(1)), cb::InvalidTerm);
  CHECK_THROWS_AS(cb::point_of_ordinal(glued, cb::Ordinal(0)), cb::InvalidTerm);
  CHECK_THROWS_AS(isolated_points(glued, 2), cb::InvalidTerm);
}

TEST_CASE("beyond the attachment rank the base term derives on its own") {
  SetTerm base = canonical_tower(Ordinal(1), unit);
  SetTerm glued = primitive_of_term(base, w, 2);
  CHECK(cb_characteristic(glued) == CBChar{w + Ordinal(1), 1});
  CHECK(derivative_upto(glued, w) == base);
  CHECK(derivative_upto(glued, w + Ordinal(1)) == SetTerm::point(Rational(1)));
  CHECK(derivative_upto(glued, w + Ordinal(2)).is_empty());
}

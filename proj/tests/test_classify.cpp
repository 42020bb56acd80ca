#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cb/classify.hpp"
#include "cb/oracle.hpp"
#include "test_util.hpp"

using cb::canonical_tower;
using cb::contains;
using cb::derivative_upto;
using cb::equivalent;
using cb::homeo_map;
using cb::Interval;
using cb::omega_pow;
using cb::Ordinal;
using cb::ordinal_of_point;
using cb::point_of_ordinal;
using cb::Rational;
using cb::realize;
using cb::SetTerm;
using cb::tau_of;
using cbtest::point_set;

namespace {
const Ordinal w = Ordinal::omega();
const Interval unit{Rational(0), Rational(1)};
}  // namespace

TEST_CASE("tau of a term") {
  CHECK(tau_of(SetTerm::point(Rational(5))) == Ordinal(0));
  CHECK(tau_of(canonical_tower(w, unit)) == omega_pow(w));
  CHECK(tau_of(realize(Ordinal(2), 3, unit)) == omega_pow(Ordinal(2)) * Ordinal(3));
  CHECK(tau_of(realize(Ordinal(0), 4, unit)) == Ordinal(3));
  CHECK_THROWS_AS(tau_of(SetTerm::empty()), cb::EmptyTerm);

  // Towers agree with the scheme-level closed form.
  using cb::AffineCoeffs;
  SetTerm succ = canonical_tower(Ordinal(3), unit);
  CHECK(tau_of(succ) == cb::tau_closed_form(succ.tower_node().scheme, AffineCoeffs{0, 1}));
  SetTerm lim = canonical_tower(omega_pow(w), unit);
  CHECK(tau_of(lim) == cb::tau_closed_form(lim.tower_node().scheme, AffineCoeffs{0, 1}));
}

TEST_CASE("addresses inside a rank-1 tower") {
  SetTerm t = canonical_tower(Ordinal(1), unit);
  CHECK(ordinal_of_point(t, Rational(1)) == w);
  CHECK(ordinal_of_point(t, Rational(1, 2)) == Ordinal(0));
  CHECK(ordinal_of_point(t, Rational(3, 4)) == Ordinal(1));
  CHECK_THROWS_AS(ordinal_of_point(t, Rational(2, 3)), cb::NotMember);

  CHECK(point_of_ordinal(t, Ordinal(2)) == Rational(7, 8));
  CHECK(point_of_ordinal(t, w) == Rational(1));
  CHECK_THROWS_AS(point_of_ordinal(t, w + Ordinal(1)), cb::OutOfRange);
}

TEST_CASE("addressing is a depth-wise bijection") {
  std::mt19937 rng(83);
  for (int i = 0; i < 40; ++i) {
    SetTerm t = cbtest::random_term(rng, false);
    std::set<Ordinal> seen;
    for (std::uint64_t d = 1; d <= 4; ++d) {
      for (const auto& q : point_set(t, d)) {
        Ordinal delta = ordinal_of_point(t, q);
        CHECK(delta <= tau_of(t));
        CHECK(point_of_ordinal(t, delta) == q);
        seen.insert(delta);
      }
    }
    CHECK(seen.size() == point_set(t, 4).size());

    // Derived terms (shifted child ranks, bumped alive_from) address too.
    SetTerm stepped = derivative_upto(t, Ordinal(2));
    if (!stepped.is_empty()) {
      for (const auto& q : point_set(stepped, 3)) {
        Ordinal delta = ordinal_of_point(stepped, q);
        CHECK(point_of_ordinal(stepped, delta) == q);
      }
    }
    // The address tau has the full characteristic rank, so its preimage is a
    // point surviving alpha derivatives (the real maximum only when that is
    // itself a max-rank top, as in a single tower).
    cb::CBChar c = cb_characteristic(t);
    CHECK(contains(derivative_upto(t, c.alpha), point_of_ordinal(t, tau_of(t))));
    if (t.kind() == cb::TermKind::Tower || t.kind() == cb::TermKind::Point) {
      CHECK(point_of_ordinal(t, tau_of(t)) == max_point(t));
    }
  }
}

TEST_CASE("every address below tau is hit") {
  std::mt19937 rng(109);
  for (int i = 0; i < 25; ++i) {
    SetTerm t = cbtest::random_term(rng, false);
    Ordinal tau = tau_of(t);
    std::vector<Ordinal> sample = {Ordinal(0), tau};
    for (int k = 0; k < 30; ++k) {
      Ordinal delta = cbtest::random_ordinal(rng);
      if (delta <= tau) sample.push_back(delta);
    }
    for (const auto& delta : sample) {
      Rational q = point_of_ordinal(t, delta);
      CHECK(contains(t, q));
      CHECK(ordinal_of_point(t, q) == delta);
    }
  }
}

TEST_CASE("derivative membership matches address divisibility") {
  std::mt19937 rng(89);
  for (int i = 0; i < 40; ++i) {
    SetTerm t = cbtest::random_term(rng, false);
    cb::CBChar c = cb_characteristic(t);
    std::vector<Ordinal> betas = {Ordinal(0), Ordinal(1), Ordinal(2), w, c.alpha};
    for (const auto& beta : betas) {
      if (beta > c.alpha) continue;
      SetTerm derived = derivative_upto(t, beta);
      for (const auto& q : point_set(t, 4)) {
        Ordinal delta = ordinal_of_point(t, q);
        bool divisible = beta.is_zero() || cb::divides_omega_pow(beta, delta);
        CHECK(contains(derived, q) == divisible);
      }
    }
  }
}

TEST_CASE("addresses grow with the real order on a single tower") {
  for (const auto& alpha : cbtest::alpha_grid()) {
    if (alpha.is_zero()) continue;
    SetTerm t = canonical_tower(alpha, unit);
    auto rows = points(t, 4);
    std::optional<Ordinal> prev;
    for (const auto& row : rows) {  // rows are sorted by point
      Ordinal delta = ordinal_of_point(t, row.point);
      if (prev) CHECK(*prev < delta);
      prev = delta;
    }
  }
}

TEST_CASE("equivalence is characteristic equality") {
  SetTerm a = realize(w, 1, unit);
  CHECK(equivalent(a, a));
  CHECK(equivalent(a, realize(w, 1, Interval(Rational(5), Rational(9)))));
  CHECK_FALSE(equivalent(a, realize(w, 2, unit)));

  std::mt19937 rng(97);
  for (int i = 0; i < 60; ++i) {
    SetTerm x = cbtest::random_term(rng);
    SetTerm y = cbtest::random_term(rng);
    SetTerm z = cbtest::random_term(rng);
    CHECK(equivalent(x, x));
    CHECK(equivalent(x, y) == equivalent(y, x));
    if (equivalent(x, y) && equivalent(y, z)) CHECK(equivalent(x, z));
  }
}

TEST_CASE("homeomorphism transports structure") {
  SetTerm t = realize(w + Ordinal(1), 3, unit);
  auto id = homeo_map(t, t);
  for (std::uint64_t d = 1; d <= 5; ++d) {
    for (const auto& q : point_set(t, d)) CHECK(id(q) == q);
  }

  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> at(0, cbtest::alpha_grid().size() - 1);
  std::uniform_int_distribution<std::uint64_t> pd(1, 3);
  for (int i = 0; i < 30; ++i) {
    Ordinal alpha = cbtest::alpha_grid()[at(rng)];
    std::uint64_t p = pd(rng);
    SetTerm t1 = realize(alpha, p, unit);
    SetTerm t2 = realize(alpha, p, Interval(Rational(4), Rational(6)));
    auto f = homeo_map(t1, t2);

    // Bijection between depth-4 renderings.
    std::set<Rational> image;
    for (const auto& q : point_set(t1, 4)) image.insert(f(q));
    CHECK(image == point_set(t2, 4));

    // Derivatives are carried onto derivatives.
    std::vector<Ordinal> betas = {Ordinal(1), alpha};
    for (const auto& beta : betas) {
      if (beta > alpha || beta.is_zero()) continue;
      std::set<Rational> mapped;
      for (const auto& q : point_set(derivative_upto(t1, beta), 4)) mapped.insert(f(q));
      CHECK(mapped == point_set(derivative_upto(t2, beta), 4));
    }
  }

  CHECK_THROWS_AS(homeo_map(realize(w, 1, unit), realize(w, 2, unit)), cb::NotEquivalent);
}

TEST_CASE("max-rank tops land on multiples of the top power") {
  SetTerm t1 = realize(w, 2, unit);
  SetTerm t2 = realize(w, 2, Interval(Rational(10), Rational(14)));
  auto f = homeo_map(t1, t2);
  cb::OrdinalSpace space{w, 2};
  for (const auto& row : points(t1, 3)) {
    Ordinal delta = ordinal_of_point(t1, row.point);
    bool top_of_max = row.rank == w;
    CHECK(top_of_max == (cb::divides_omega_pow(w, delta) && member_after(space, delta, w)));
    if (top_of_max) {
      Ordinal image_delta = ordinal_of_point(t2, f(row.point));
      CHECK(cb::divides_omega_pow(w, image_delta));
    }
  }
}
